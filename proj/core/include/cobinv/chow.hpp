#ifndef COBINV_CHOW_HPP
#define COBINV_CHOW_HPP

#include <memory>
#include <string>
#include <vector>

#include "cobinv/fgl.hpp"
#include "cobinv/partitions.hpp"

namespace cobinv {

// A finitely presented graded ring modeling the Chow ring of a split
// projective-bundle tower: each generator g carries a monic rule
// g^bound = lower-order polynomial, and rewriting to normal form terminates.
class ChowPresentation {
public:
    ChowPresentation(AlphabetPtr alpha, std::vector<std::size_t> gens,
                     std::vector<int> bounds, std::vector<GradedPoly> rules,
                     int dimension);

    const AlphabetPtr& alphabet() const { return alpha_; }
    const std::vector<std::size_t>& generators() const { return gens_; }
    int bound(std::size_t level) const { return bounds_[level]; }
    int dimension() const { return dimension_; }
    const Mono& fundamental() const { return fundamental_; }

    GradedPoly zero() const { return GradedPoly(alpha_); }
    GradedPoly one() const { return GradedPoly(alpha_, 1); }
    GradedPoly gen(std::size_t level) const;

    GradedPoly normalize(const GradedPoly& p) const;
    // Rewrites earliest generator first; used by the confluence tests.
    GradedPoly normalize_reversed(const GradedPoly& p) const;

    // Degree map: coefficient of the fundamental monomial, zero off top degree.
    // Input must be free of b-symbols.
    BigInt degree(const GradedPoly& p) const;

    int chow_degree(const Mono& m) const;  // total exponent over the generators
    bool is_generator(std::uint32_t sym) const;

private:
    GradedPoly normalize_order(const GradedPoly& p, bool latest_first) const;

    AlphabetPtr alpha_;
    std::vector<std::size_t> gens_;
    std::vector<int> bounds_;
    std::vector<GradedPoly> rules_;
    int dimension_;
    Mono fundamental_;
};

using ChowPtr = std::shared_ptr<const ChowPresentation>;

// Formal integer combination of line-bundle classes over a presentation.
struct KClass {
    std::vector<std::pair<int, GradedPoly>> lines;  // (coefficient, first Chern class)

    int rank() const;
    KClass negated() const;
    KClass& add(int coeff, GradedPoly c1);
};

struct Variety;
using VarietyPtr = std::shared_ptr<const Variety>;

// A smooth projective variety presented as a split tower, with its tangent
// class in K-theory.
struct Variety {
    std::string name;
    ChowPtr pres;
    KClass tangent;
    int dim = 0;

    // Set when this is a projective bundle over `base`; enables the one-level
    // pushforward.
    VarietyPtr base;
    std::size_t fiber_level = 0;
    int fiber_rank = 0;
    KClass fiber_bundle;  // E with this = P(E)

    // For products: renaming of each factor's generators.
    std::vector<VarietyPtr> factors;
    std::vector<std::vector<std::pair<std::string, std::string>>> factor_renames;
};

VarietyPtr make_point(const FglContext& fgl);
VarietyPtr make_projective_space(const FglContext& fgl, int n);
VarietyPtr make_product(const FglContext& fgl, const VarietyPtr& a, const VarietyPtr& b);
// P(E) for split E of rank r over `base`; adjoins a generator named `fiber`.
VarietyPtr make_projective_bundle(const FglContext& fgl, const VarietyPtr& base,
                                  const KClass& bundle, int rank,
                                  const std::string& fiber = "xi");
VarietyPtr make_milnor(const FglContext& fgl, int m, int n);

// Transport a class of `from` into the product presentation through the
// recorded renaming of factor `which`.
GradedPoly pull_to_product(const Variety& prod, std::size_t which, const GradedPoly& p);

// Multiplicative b-valued class of a K-theory element: product over lines of
// (sum c1^i b_i)^{+-1}.
GradedPoly cf_class(const Variety& X, const KClass& E);

// b_alpha-coefficient of a b-valued class, as a plain Chow element.
GradedPoly chern_coeff(const Variety& X, const GradedPoly& cf, const Partition& alpha);

BigInt chern_number(const FglContext& fgl, const Variety& X, const Partition& alpha);

// Pushforward to the point in the b-twisted theory: sends u (with b-valued
// coefficients allowed) to sum_alpha deg(c_alpha(-T_X) u) b_alpha over the
// master alphabet.
GradedPoly fund_class_of(const FglContext& fgl, const Variety& X, const GradedPoly& u);

// b-twisted first Chern class of a line with ordinary class c1.
GradedPoly twisted_c1(const FglContext& fgl, const Variety& X, const GradedPoly& c1);

// One-level pushforward P(E) -> base in the b-twisted theory. The twist
// factor depends only on the bundle; precompute it when pushing many classes.
GradedPoly relative_twist_factor(const FglContext& fgl, const Variety& PE);
GradedPoly twisted_push_ready(const Variety& PE, const GradedPoly& twist, const GradedPoly& u);
GradedPoly twisted_push_level(const FglContext& fgl, const Variety& PE, const GradedPoly& u);

// Partition monomial b_alpha over an alphabet carrying b-symbols.
Mono b_mono(const Alphabet& alpha, const Partition& p);

}  // namespace cobinv

#endif
