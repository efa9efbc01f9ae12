#ifndef COBINV_GRADED_POLY_HPP
#define COBINV_GRADED_POLY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobinv/alphabet.hpp"
#include "cobinv/bigint.hpp"
#include "cobinv/errors.hpp"

namespace cobinv {

// Sparse exponent vector: (symbol index, exponent) sorted by index, no zeros.
using Mono = std::vector<std::pair<std::uint32_t, std::int32_t>>;

// Graded-lexicographic: total exponent first, then the sparse vectors.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

Mono mono_mul(const Mono& a, const Mono& b);
std::string mono_to_string(const Mono& m, const Alphabet& alpha);

// Sparse multivariate polynomial over arbitrary-precision integers.
// Exponents of non-Laurent symbols stay >= 0; zero coefficients are pruned.
class GradedPoly {
public:
    using TermMap = std::map<Mono, BigInt, MonoLess>;

    GradedPoly() = default;
    explicit GradedPoly(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}
    GradedPoly(AlphabetPtr alpha, const BigInt& constant);

    static GradedPoly term(AlphabetPtr alpha, const Mono& m, const BigInt& c);
    static GradedPoly symbol(AlphabetPtr alpha, const std::string& name, int exp = 1);

    const AlphabetPtr& alphabet() const { return alpha_; }
    const TermMap& terms() const& { return terms_; }
    // Iterating the terms of a temporary would dangle.
    const TermMap& terms() const&& = delete;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const GradedPoly& o) const;
    bool operator!=(const GradedPoly& o) const { return !(*this == o); }

    GradedPoly operator-() const;
    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);

    GradedPoly scaled(const BigInt& c) const;
    GradedPoly pow(int e) const;

    // Exact division by a nonzero integer; throws DivisibilityError naming the
    // first offending term.
    GradedPoly exact_div(const BigInt& den) const;

    void add_term(const Mono& m, const BigInt& c);
    BigInt coefficient(const Mono& m) const;

    // Coefficient of symbol^k, as a polynomial in the remaining symbols.
    GradedPoly coefficient_of(std::size_t sym, int k) const;
    // All exponents of a symbol that occur.
    std::vector<int> exponents_of(std::size_t sym) const;

    int degree_of(const Mono& m) const;  // sum of exponent * symbol degree
    // Max of -degree over terms (the dimension); nullopt for 0.
    std::optional<int> dim() const;
    // Same, with v (or any listed symbols) weighted zero.
    std::optional<int> dim_with_zero_weight(const std::vector<std::size_t>& zeroed) const;
    bool is_homogeneous(int degree) const;
    std::map<int, GradedPoly> homogeneous_parts() const;

    // Substitute symbols by polynomials over `target`; unlisted symbols must
    // exist in `target` under the same name. `keep` optionally truncates the
    // result monomial-by-monomial.
    GradedPoly substitute(const AlphabetPtr& target,
                          const std::map<std::string, GradedPoly>& images,
                          const std::function<bool(const Mono&)>& keep = nullptr) const;

    // Rename-preserving transport into another alphabet.
    GradedPoly convert(const AlphabetPtr& target) const;

    // Keep only terms satisfying the predicate.
    GradedPoly filtered(const std::function<bool(const Mono&)>& keep) const;

    // Integer evaluation of selected symbols (all symbols must be listed).
    BigInt evaluate(const std::map<std::string, BigInt>& values) const;

    std::string to_string() const;

private:
    void check_same(const GradedPoly& o) const;
    void validate_mono(const Mono& m) const;

    AlphabetPtr alpha_;
    TermMap terms_;
};

}  // namespace cobinv

#endif
