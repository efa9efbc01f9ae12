#ifndef COBINV_EQUIVARIANT_HPP
#define COBINV_EQUIVARIANT_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cobinv/mring.hpp"

namespace cobinv {

// One fixed component: a tower, the class of its normal bundle, and an
// integer multiplicity (virtual combinations allowed).
struct FixtureComponent {
    VarietyPtr variety;
    KClass normal;
    int multiplicity = 1;
};

// A variety with involution, given by its ambient class and the list of
// fixed components with their normal bundles.
struct Fixture {
    std::string name;
    int n = 0;  // ambient dimension
    std::vector<std::pair<int, VarietyPtr>> ambient;
    std::vector<FixtureComponent> components;
    std::vector<std::pair<int, long>> e_choice;  // recorded generator combination

    // Largest component dimension; nullopt when the fixed locus is empty.
    std::optional<int> fixed_dim() const;
};

// Canonical form of an involution class: A_0 in Z[x1,x2,...] and A_i in
// Z[x2,...] for i >= 1, with sum_i A_i t^i recovering the class.
struct InvClass {
    int n = 0;
    AlphabetPtr x_alpha;
    std::map<int, GradedPoly> A;  // absent index = zero

    GradedPoly coeff(int i) const;
    bool operator==(const InvClass& o) const;
};

struct RealizeVerdict {
    bool yes = false;
    std::string reason;
    std::vector<std::tuple<int, Partition, BigInt>> certificate;
};

// The mu_2-equivariant layer: catalog fixtures, the normal-bundle morphism,
// the canonical t-expansion, and the realizability test.
class Equivariant {
public:
    explicit Equivariant(const MRing& mring);

    const MRing& mring() const { return mring_; }
    const AlphabetPtr& x_alphabet() const { return x_alpha_; }
    const AlphabetPtr& xv_alphabet() const { return xv_alpha_; }

    Fixture pab(int a, int b) const;
    Fixture hij(int i, int j) const;
    Fixture xn(int n) const;
    Fixture p1xp1_swap() const;
    Fixture product(const Fixture& f, const Fixture& g) const;

    // The class of the normal bundle over the fixed locus.
    GradedPoly nu(const Fixture& f) const;
    GradedPoly ambient_class(const Fixture& f) const;
    GradedPoly fixed_class(const Fixture& f) const;

    // (c_(d) of the fixed locus, deg c_(d) of the normal bundle).
    std::pair<BigInt, BigInt> theta(const Fixture& f, int d) const;

    GradedPoly x_class(int n) const;                    // nu of the n-th generator
    GradedPoly x_monomial(const Partition& alpha) const;

    // Exact rewriting over Z[v, v^{-1}][x2, x3, ...].
    GradedPoly express_in_x(const GradedPoly& melem) const;

    InvClass decompose(const Fixture& f) const;
    InvClass decompose_melem(const GradedPoly& melem, int n, int fixed_dim) const;

    // Product in the involution ring, reduced to the canonical form.
    InvClass invclass_mul(const InvClass& a, const InvClass& b) const;
    // Substitute the generators back: sum_i v^{-i} A_i(x_1, x_2, ...).
    GradedPoly evaluate_invclass(const InvClass& c) const;

    // t -> 0, generators to their ambient classes, coefficients mod 2.
    GradedPoly eps_mod2(const InvClass& c) const;

    // v -> 1, a_i -> 0.
    GradedPoly phi_fixed_melem(const GradedPoly& melem) const;
    GradedPoly phi_fixed(const InvClass& c) const;

    // Membership in the image of the normal-bundle morphism.
    RealizeVerdict is_normal_bundle_class(const GradedPoly& melem) const;

private:
    struct Window {
        std::vector<std::pair<int, Partition>> candidates;  // (v power, x partition)
        MonoIndexer columns;
        LatticeSolver solver;
    };
    const Window& window(int n, int f) const;
    GradedPoly express_part(const GradedPoly& part, int n, int f) const;

    const MRing& mring_;
    const FglContext& fgl_;
    const LazardContext& laz_;
    AlphabetPtr x_alpha_, xv_alpha_;
    mutable std::mutex mu_;
    mutable std::map<int, GradedPoly> x_cache_;
    mutable std::map<Partition, GradedPoly> x_mono_cache_;
    mutable std::map<std::pair<int, int>, Window> window_cache_;
};

}  // namespace cobinv

#endif
