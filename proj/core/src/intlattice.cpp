#include "cobinv/intlattice.hpp"

#include "cobinv/errors.hpp"

namespace cobinv {

LatticeSolver::LatticeSolver(std::vector<std::vector<BigInt>> generators) {
    gens_ = generators.size();
    cols_ = generators.empty() ? 0 : generators[0].size();
    for (auto& g : generators)
        if (g.size() != cols_) throw Error("ragged generator matrix");

    h_ = std::move(generators);
    u_.assign(gens_, std::vector<BigInt>(gens_, 0));
    for (std::size_t i = 0; i < gens_; ++i) u_[i][i] = 1;

    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < gens_; ++col) {
        // Clear the column below `row` by pairwise gcd steps.
        for (std::size_t r = row + 1; r < gens_; ++r) {
            if (h_[r][col] == 0) continue;
            if (h_[row][col] == 0) {
                std::swap(h_[row], h_[r]);
                std::swap(u_[row], u_[r]);
                continue;
            }
            BigInt x, y;
            BigInt g = xgcd(h_[row][col], h_[r][col], x, y);
            BigInt p = h_[row][col] / g, q = h_[r][col] / g;
            for (std::size_t c = 0; c < cols_; ++c) {
                BigInt t = x * h_[row][c] + y * h_[r][c];
                h_[r][c] = p * h_[r][c] - q * h_[row][c];
                h_[row][c] = t;
            }
            for (std::size_t c = 0; c < gens_; ++c) {
                BigInt t = x * u_[row][c] + y * u_[r][c];
                u_[r][c] = p * u_[r][c] - q * u_[row][c];
                u_[row][c] = t;
            }
        }
        if (h_[row][col] == 0) continue;
        if (h_[row][col] < 0) {
            for (auto& t : h_[row]) t = -t;
            for (auto& t : u_[row]) t = -t;
        }
        // Reduce the rows above modulo the new pivot.
        for (std::size_t r = 0; r < row; ++r) {
            BigInt q = h_[r][col] / h_[row][col];
            if (h_[r][col] - q * h_[row][col] < 0) q -= 1;
            if (q == 0) continue;
            for (std::size_t c = 0; c < cols_; ++c) h_[r][c] -= q * h_[row][c];
            for (std::size_t c = 0; c < gens_; ++c) u_[r][c] -= q * u_[row][c];
        }
        pivots_.push_back(col);
        ++row;
    }
    h_.resize(pivots_.size());
    u_.resize(pivots_.size());
}

std::vector<BigInt> LatticeSolver::reduce(const std::vector<BigInt>& v) const {
    if (v.size() != cols_) throw Error("vector dimension mismatch");
    std::vector<BigInt> r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        std::size_t c = pivots_[i];
        if (r[c] == 0) continue;
        BigInt q = r[c] / h_[i][c];
        if (r[c] - q * h_[i][c] < 0) q -= 1;
        if (q == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) r[j] -= q * h_[i][j];
    }
    return r;
}

std::optional<std::vector<BigInt>> LatticeSolver::solve(const std::vector<BigInt>& v) const {
    if (v.size() != cols_) throw Error("vector dimension mismatch");
    std::vector<BigInt> r = v;
    std::vector<BigInt> k(pivots_.size(), 0);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        std::size_t c = pivots_[i];
        if (r[c] % h_[i][c] != 0) return std::nullopt;
        BigInt q = r[c] / h_[i][c];
        k[i] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) r[j] -= q * h_[i][j];
    }
    for (auto& t : r)
        if (t != 0) return std::nullopt;
    std::vector<BigInt> out(gens_, 0);
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        for (std::size_t j = 0; j < gens_; ++j) out[j] += k[i] * u_[i][j];
    return out;
}

void MonoIndexer::intern(const GradedPoly& p) {
    for (auto& [m, c] : p.terms()) {
        auto [it, fresh] = index_.emplace(m, monos_.size());
        if (fresh) monos_.push_back(m);
    }
}

std::vector<BigInt> MonoIndexer::vectorize(const GradedPoly& p) const {
    auto v = try_vectorize(p);
    if (!v) throw Error("polynomial has a monomial outside the indexed set");
    return *v;
}

std::optional<std::vector<BigInt>> MonoIndexer::try_vectorize(const GradedPoly& p) const {
    std::vector<BigInt> v(monos_.size(), 0);
    for (auto& [m, c] : p.terms()) {
        auto it = index_.find(m);
        if (it == index_.end()) return std::nullopt;
        v[it->second] = c;
    }
    return v;
}

GradedPoly MonoIndexer::devectorize(const std::vector<BigInt>& v, const AlphabetPtr& alpha) const {
    GradedPoly p(alpha);
    for (std::size_t i = 0; i < v.size() && i < monos_.size(); ++i)
        if (v[i] != 0) p.add_term(monos_[i], v[i]);
    return p;
}

long rank_of(const std::vector<std::vector<BigInt>>& rows) {
    LatticeSolver s(rows);
    return static_cast<long>(s.rank());
}

}  // namespace cobinv
