#ifndef COBINV_INTLATTICE_HPP
#define COBINV_INTLATTICE_HPP

#include <map>
#include <optional>
#include <vector>

#include "cobinv/graded_poly.hpp"

namespace cobinv {

// Row-style Hermite normal form over the integers, with the unimodular
// transform kept so that memberships come with explicit coefficients over the
// original generators.
class LatticeSolver {
public:
    LatticeSolver() = default;
    explicit LatticeSolver(std::vector<std::vector<BigInt>> generators);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }

    // Coefficients c with sum c_i * generator_i = v, if v lies in the lattice.
    std::optional<std::vector<BigInt>> solve(const std::vector<BigInt>& v) const;

    // Residual after reducing v by the basis (zero iff member).
    std::vector<BigInt> reduce(const std::vector<BigInt>& v) const;

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<BigInt>> h_;  // HNF rows (nonzero only)
    std::vector<std::vector<BigInt>> u_;  // h_ = u_ * generators
    std::vector<std::size_t> pivots_;     // pivot column of each HNF row
    std::size_t gens_ = 0;
};

// Dense column dictionary for sparse polynomials sharing one alphabet.
class MonoIndexer {
public:
    void intern(const GradedPoly& p);
    std::size_t size() const { return monos_.size(); }
    std::vector<BigInt> vectorize(const GradedPoly& p) const;  // throws on unseen mono
    std::optional<std::vector<BigInt>> try_vectorize(const GradedPoly& p) const;
    GradedPoly devectorize(const std::vector<BigInt>& v, const AlphabetPtr& alpha) const;

private:
    std::map<Mono, std::size_t, MonoLess> index_;
    std::vector<Mono> monos_;
};

long rank_of(const std::vector<std::vector<BigInt>>& rows);

}  // namespace cobinv

#endif
