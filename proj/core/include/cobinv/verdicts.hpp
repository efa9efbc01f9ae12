#ifndef COBINV_VERDICTS_HPP
#define COBINV_VERDICTS_HPP

#include <map>
#include <string>
#include <vector>

#include "cobinv/equivariant.hpp"

namespace cobinv {

// Outcome of one bound theorem on one input. The inequality n <= bound is
// kept in exact form as n * bound_den <= bound_num.
struct BoundReport {
    std::string rule;
    std::map<std::string, long> inputs;  // n, d, and rule-specific data
    std::string note;
    bool premise = false;
    long bound_num = 0;
    long bound_den = 1;
    long observed = 0;  // the ambient dimension
    std::string status;  // "satisfied" | "sharp" | "violated"

    static BoundReport inequality(std::string rule, long n, bool premise, long num, long den);
};

struct CurveVerdict {
    bool yes = false;
    std::string condition;
};

// Combinatorial and lattice checkers for the bound theorems.
class Verdicts {
public:
    explicit Verdicts(const Equivariant& equ);

    // deg P against the two-weight bound, for P over the generator alphabet
    // (positive degrees). Reports the tightest monomial route at this s.
    BoundReport deg_fdeg_bound(const GradedPoly& P, int s) const;

    // fdeg of the coordinate polynomial of a mod-2 class.
    std::optional<int> fdeg_of_class(const GradedPoly& x) const;

    std::vector<BoundReport> bound_suite(const Fixture& f) const;

    CurveVerdict curve_table(int n, long a, long b, long c) const;

    std::vector<InvClass> basis_I_n_1(int n) const;

    // Fixtures with zero-dimensional fixed locus and trivial normal bundles
    // of constant rank c: the point count must be a multiple of 2^c.
    std::pair<BigInt, bool> isolated_points_check(const Fixture& f) const;

    // Largest q with x in the q-th power of the ideal generated by the listed
    // fixed-locus classes (capped).
    int ideal_valuation_fixed(const GradedPoly& x, int s, int cap) const;

private:
    const Equivariant& equ_;
    const MRing& mring_;
    const LazardContext& laz_;
    const FglContext& fgl_;
};

}  // namespace cobinv

#endif
