#ifndef COBINV_MRING_HPP
#define COBINV_MRING_HPP

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "cobinv/lazard.hpp"

namespace cobinv {

// Verdict of a normal-bundle membership test, with either the certificate
// coefficients over the image generators or the residual that obstructs.
struct MembershipResult {
    bool member = false;
    // (degree of delta-argument index j, generator partition, coefficient)
    std::vector<std::tuple<int, Partition, BigInt>> certificate;
    std::string residual;
};

// The ring of bundle classes over the Lazard ring: monomials v^r a_alpha with
// Lazard coefficients, together with the operators delta, Gamma, partial.
class MRing {
public:
    MRing(const FglContext& fgl, const LazardContext& lazard);

    const FglContext& fgl() const { return fgl_; }
    const LazardContext& lazard() const { return lazard_; }
    const AlphabetPtr& master() const { return fgl_.master(); }

    // v^r sum_alpha [c_alpha(E)] a_alpha for E over a tower S.
    GradedPoly bundle_class(const Variety& S, const KClass& E) const;

    GradedPoly p_elem(int i) const;   // class of the canonical line over P^i
    GradedPoly va(int i) const;       // the monomial v a_i (v for i = 0)

    // Derivation on the line-class module: delta(v a_m) = sum u_i v a_{m-i}.
    GradedPoly delta(const GradedPoly& p) const;

    // The multiplicative line-bundle series of E in one formal variable,
    // with coefficients in the Chow ring of S (b-valued).
    LaurentSeries gamma_series(const Variety& S, const KClass& E) const;

    // Pushforward of gamma(-E) coefficientwise: the graded algebra morphism
    // determined on bundle classes, extended multiplicatively.
    LaurentSeries gamma_transform(const GradedPoly& melem) const;

    // t^j -> p_{-1-j}.
    GradedPoly a_op(const LaurentSeries& s) const;

    // partial = a_op after gamma_transform.
    GradedPoly partial(const GradedPoly& melem) const;

    // rho_i(E) = q_*(xi^{j-i}) over P(E + 1 + j); computed for two choices of
    // j and cross-checked.
    LaurentSeries rho_series(const VarietyPtr& S, const KClass& E, int lo, int hi) const;

    // (dim, fdim); nullopt pair for zero.
    std::pair<std::optional<int>, std::optional<int>> gradings(const GradedPoly& melem) const;

    // Shape and coefficient-lattice membership in the bundle-class ring.
    bool is_in_m(const GradedPoly& melem, std::string* why = nullptr) const;

    // Is p (in the line-class module, homogeneous parts handled separately)
    // in the image of delta?
    MembershipResult delta_image_membership(const GradedPoly& p) const;

    // Substitution v -> 1, a_i -> 0: the class of the base.
    GradedPoly base_class(const GradedPoly& melem) const;

    std::size_t v_index() const { return v_; }
    bool is_a_symbol(std::uint32_t i, int* idx = nullptr) const;
    bool is_b_symbol(std::uint32_t i, int* idx = nullptr) const;

private:
    struct DeltaLattice {
        std::vector<std::pair<int, Partition>> provenance;  // (j, beta)
        MonoIndexer columns;
        LatticeSolver solver;
        std::vector<GradedPoly> generators;
    };
    const DeltaLattice& delta_lattice(int degree) const;
    const LaurentSeries& gamma_va(int i) const;

    const FglContext& fgl_;
    const LazardContext& lazard_;
    std::size_t v_;
    mutable std::mutex mu_;
    mutable std::map<int, GradedPoly> p_cache_;
    mutable std::map<int, LaurentSeries> gamma_va_cache_;
    mutable std::map<int, DeltaLattice> delta_cache_;
};

}  // namespace cobinv

#endif
