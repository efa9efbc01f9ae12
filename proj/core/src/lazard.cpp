#include "cobinv/lazard.hpp"

#include <algorithm>

namespace cobinv {

LazardContext::LazardContext(const FglContext& fgl) : fgl_(fgl) {}

VarietyPtr LazardContext::projective_space(int n) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::string key = "P" + std::to_string(n);
    auto it = variety_cache_.find(key);
    if (it != variety_cache_.end()) return it->second;
    auto v = make_projective_space(fgl_, n);
    variety_cache_.emplace(key, v);
    return v;
}

VarietyPtr LazardContext::milnor(int m, int n) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::string key = "H_{" + std::to_string(m) + "," + std::to_string(n) + "}";
    auto it = variety_cache_.find(key);
    if (it != variety_cache_.end()) return it->second;
    auto v = make_milnor(fgl_, m, n);
    variety_cache_.emplace(key, v);
    return v;
}

GradedPoly LazardContext::class_of(const VarietyPtr& X) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = class_cache_.find(X->name);
        if (it != class_cache_.end()) return it->second;
    }
    GradedPoly cls = fund_class_of(fgl_, *X, GradedPoly(X->pres->alphabet(), 1));
    std::lock_guard<std::mutex> lock(mu_);
    class_cache_.emplace(X->name, cls);
    return cls;
}

BigInt LazardContext::c_alpha(const GradedPoly& x, const Partition& alpha) const {
    return x.coefficient(b_mono(*x.alphabet(), alpha));
}

BigInt LazardContext::omega(int m) {
    if (m < 1) throw Error("omega needs m >= 1");
    // Prime-power characterization of m + 1.
    long q = m + 1;
    BigInt by_primes = 1;
    for (long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            long r = q;
            while (r % p == 0) r /= p;
            by_primes = (r == 1) ? BigInt(p) : BigInt(1);
            break;
        }
    }
    if (q >= 2) {
        bool prime = true;
        for (long p = 2; p * p <= q; ++p)
            if (q % p == 0) { prime = false; break; }
        if (prime) by_primes = q;
    }
    // gcd of the binomial coefficients.
    BigInt by_gcd = 0;
    for (long i = 1; i <= (m + 1) / 2; ++i) {
        BigInt x, y;
        by_gcd = xgcd(by_gcd, binomial(m + 1, i), x, y);
    }
    if (by_gcd != by_primes)
        throw Error("omega: the two characterizations disagree at m=" + std::to_string(m));
    return by_gcd;
}

const LazardContext::Generator& LazardContext::generator(int d) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = gen_cache_.find(d);
        if (it != gen_cache_.end()) return it->second;
    }
    if (d < 1) throw Error("generator degree must be >= 1");

    std::vector<std::pair<std::string, GradedPoly>> sources;
    sources.emplace_back("P" + std::to_string(d), class_of(projective_space(d)));
    for (int m = 2; m <= (d + 1) / 2; ++m)
        sources.emplace_back("H_{" + std::to_string(m) + "," + std::to_string(d + 1 - m) + "}",
                             class_of(milnor(m, d + 1 - m)));

    Partition top{d};
    BigInt g = 0;
    std::vector<BigInt> coeffs;
    for (auto& [name, cls] : sources) {
        BigInt v = c_alpha(cls, top);
        if (g == 0) {
            g = v;
            coeffs.assign(1, BigInt(1));
            continue;
        }
        BigInt x, y;
        BigInt g2 = xgcd(g, v, x, y);
        for (auto& c : coeffs) c *= x;
        coeffs.push_back(y);
        g = g2;
    }
    if (g < 0) {
        g = -g;
        for (auto& c : coeffs) c = -c;
    }
    if (g != omega(d))
        throw Error("generator synthesis reached gcd " + to_string(g) +
                    " instead of omega at degree " + std::to_string(d));

    Generator gen;
    GradedPoly val(fgl_.master());
    for (std::size_t i = 0; i < sources.size(); ++i) {
        if (coeffs[i] == 0) continue;
        val += sources[i].second.scaled(coeffs[i]);
        gen.combination.emplace_back(coeffs[i], sources[i].first);
    }
    gen.value = val;

    std::lock_guard<std::mutex> lock(mu_);
    return gen_cache_.emplace(d, std::move(gen)).first->second;
}

GradedPoly LazardContext::y_monomial(const Partition& beta) const {
    GradedPoly out(fgl_.master(), 1);
    for (int part : beta) out = out * generator(part).value;
    return out;
}

const LazardContext::LatticeBasis& LazardContext::lattice_basis(int d) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = basis_cache_.find(d);
        if (it != basis_cache_.end()) return it->second;
    }
    LatticeBasis basis;
    basis.degree = d;
    basis.betas = partitions_of(d);
    for (auto& beta : basis.betas) basis.rows.push_back(y_monomial(beta));
    for (auto& r : basis.rows) basis.columns.intern(r);
    std::vector<std::vector<BigInt>> mat;
    for (auto& r : basis.rows) mat.push_back(basis.columns.vectorize(r));
    basis.solver = LatticeSolver(std::move(mat));
    if (basis.solver.rank() != basis.betas.size())
        throw Error("lattice basis rows are dependent at degree " + std::to_string(d));

    std::lock_guard<std::mutex> lock(mu_);
    return basis_cache_.emplace(d, std::move(basis)).first->second;
}

std::optional<std::vector<BigInt>> LazardContext::coordinates(const GradedPoly& x, int d) const {
    if (d == 0) {
        // L^0 = Z.
        BigInt c = x.coefficient(Mono{});
        if (!x.is_homogeneous(0)) return std::nullopt;
        return std::vector<BigInt>{c};
    }
    const LatticeBasis& basis = lattice_basis(d);
    auto vec = basis.columns.try_vectorize(x);
    if (!vec) return std::nullopt;
    return basis.solver.solve(*vec);
}

std::optional<std::map<int, std::vector<BigInt>>> LazardContext::coordinates_all(
    const GradedPoly& x) const {
    std::map<int, std::vector<BigInt>> out;
    for (auto& [deg, part] : x.homogeneous_parts()) {
        if (deg > 0) return std::nullopt;
        auto c = coordinates(part, -deg);
        if (!c) return std::nullopt;
        out.emplace(-deg, *c);
    }
    return out;
}

bool LazardContext::in_lattice(const GradedPoly& x) const {
    return coordinates_all(x).has_value();
}

BigInt LazardContext::genus(const GradedPoly& x, Genus which) {
    BigInt total = 0;
    for (auto& [m, c] : x.terms()) {
        BigInt t = c;
        for (auto& [i, e] : m) {
            const std::string& name = x.alphabet()->at(i).name;
            if (name[0] != 'b') throw Error("genus applies to classes in the b-variables");
            int idx = std::stoi(name.substr(1));
            BigInt val;
            if (which == Genus::euler) {
                val = (idx % 2 == 0) ? 1 : -1;
            } else {
                if (idx % 2 == 1) val = 0;
                else val = ((idx / 2) % 2 == 0) ? 1 : -1;
            }
            if (val == 0) { t = 0; break; }
            if (val < 0 && e % 2 == 1) t = -t;
        }
        total += t;
    }
    return total;
}

bool LazardContext::is_decomposable_mod2(const GradedPoly& x) const {
    auto d = x.dim();
    if (!d || *d < 1) throw Error("decomposability needs a homogeneous class of negative degree");
    if (!x.is_homogeneous(-*d)) throw Error("decomposability needs a homogeneous class");
    auto coords = coordinates(x, *d);
    if (!coords)
        throw NotInLattice("class is outside the Lazard lattice", x.to_string());
    const LatticeBasis& basis = lattice_basis(*d);
    for (std::size_t i = 0; i < basis.betas.size(); ++i)
        if (basis.betas[i].size() == 1 && (*coords)[i] % 2 != 0) return false;
    return true;
}

std::optional<int> LazardContext::fdeg_of_class_mod2(const GradedPoly& x) const {
    auto all = coordinates_all(x);
    if (!all) throw NotInLattice("class is outside the Lazard lattice", x.to_string());
    std::optional<int> best;
    for (auto& [d, coords] : *all) {
        if (d == 0) {
            if (coords[0] % 2 != 0 && !best) best = 0;
            continue;
        }
        const LatticeBasis& basis = lattice_basis(d);
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] % 2 == 0) continue;
            int f = fdeg_weight(basis.betas[i]);
            if (!best || f > *best) best = f;
        }
    }
    return best;
}

BigInt LazardContext::c_alpha_image_gcd(const Partition& alpha) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = calpha_gcd_cache_.find(alpha);
        if (it != calpha_gcd_cache_.end()) return it->second;
    }
    int d = weight(alpha);
    BigInt g = 0;
    if (d == 0) {
        g = 1;
    } else {
        const LatticeBasis& basis = lattice_basis(d);
        for (auto& row : basis.rows) {
            BigInt x, y;
            g = xgcd(g, c_alpha(row, alpha), x, y);
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return calpha_gcd_cache_.emplace(alpha, g).first->second;
}

}  // namespace cobinv
