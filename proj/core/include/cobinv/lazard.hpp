#ifndef COBINV_LAZARD_HPP
#define COBINV_LAZARD_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cobinv/chow.hpp"
#include "cobinv/intlattice.hpp"

namespace cobinv {

// The Lazard ring as the sublattice of Z[b1,...] spanned by variety classes.
// Generators are synthesized once per degree from projective spaces and
// Milnor hypersurfaces; lattice bases and memberships are exact over Z.
class LazardContext {
public:
    explicit LazardContext(const FglContext& fgl);

    const FglContext& fgl() const { return fgl_; }

    // sum_alpha c_alpha(X) b_alpha; cached by variety name.
    GradedPoly class_of(const VarietyPtr& X) const;
    VarietyPtr projective_space(int n) const;
    VarietyPtr milnor(int m, int n) const;

    BigInt c_alpha(const GradedPoly& x, const Partition& alpha) const;

    // Both the prime-power characterization and the gcd of binomials; the two
    // must agree.
    static BigInt omega(int m);

    struct Generator {
        GradedPoly value;  // homogeneous of degree -d, leading coefficient c_(d) = omega_d
        std::vector<std::pair<BigInt, std::string>> combination;  // provenance
    };
    const Generator& generator(int d) const;

    struct LatticeBasis {
        int degree = 0;
        std::vector<Partition> betas;   // basis monomials y_beta, |beta| = degree
        std::vector<GradedPoly> rows;   // their expansions
        MonoIndexer columns;
        LatticeSolver solver;
    };
    const LatticeBasis& lattice_basis(int d) const;

    // Coordinates in the y-monomial basis of degree d, if x lies in the lattice.
    std::optional<std::vector<BigInt>> coordinates(const GradedPoly& x, int d) const;
    // Same for an inhomogeneous element, keyed by degree.
    std::optional<std::map<int, std::vector<BigInt>>> coordinates_all(const GradedPoly& x) const;

    bool in_lattice(const GradedPoly& x) const;

    enum class Genus { euler, psi };
    static BigInt genus(const GradedPoly& x, Genus which);

    // x homogeneous of degree -d, d >= 1; throws NotInLattice when x is
    // outside the span.
    bool is_decomposable_mod2(const GradedPoly& x) const;

    // fdeg of the mod-2 coordinate polynomial; nullopt when x = 0 mod 2.
    std::optional<int> fdeg_of_class_mod2(const GradedPoly& x) const;

    // Positive generator of the image c_alpha(L^{-|alpha|}) in Z.
    BigInt c_alpha_image_gcd(const Partition& alpha) const;

    GradedPoly y_monomial(const Partition& beta) const;

private:
    const FglContext& fgl_;
    mutable std::mutex mu_;
    mutable std::map<std::string, GradedPoly> class_cache_;
    mutable std::map<std::string, VarietyPtr> variety_cache_;
    mutable std::map<int, Generator> gen_cache_;
    mutable std::map<int, LatticeBasis> basis_cache_;
    mutable std::map<Partition, BigInt> calpha_gcd_cache_;
};

}  // namespace cobinv

#endif
