#include "cobinv/verdicts.hpp"

#include <algorithm>

namespace cobinv {

namespace {

std::string status_of(bool premise, long n, long num, long den) {
    if (!premise) return "satisfied";
    if (n * den > num) return "violated";
    if (n * den == num) return "sharp";
    return "satisfied";
}

int x_index(const Alphabet& alpha, std::uint32_t sym) {
    return std::stoi(alpha.at(sym).name.substr(1));
}

// deg and the auxiliary weight of a monomial over the generator alphabet.
std::pair<int, int> monomial_weights(const Alphabet& alpha, const Mono& m) {
    int deg = 0, fdeg = 0;
    for (auto& [i, e] : m) {
        int j = x_index(alpha, i);
        deg += j * e;
        fdeg += (j / 2) * e;
    }
    return {deg, fdeg};
}

}  // namespace

BoundReport BoundReport::inequality(std::string rule, long n, bool premise, long num, long den) {
    BoundReport r;
    r.rule = std::move(rule);
    r.premise = premise;
    r.bound_num = num;
    r.bound_den = den;
    r.observed = n;
    r.status = status_of(premise, n, num, den);
    return r;
}

Verdicts::Verdicts(const Equivariant& equ)
    : equ_(equ), mring_(equ.mring()), laz_(mring_.lazard()), fgl_(mring_.fgl()) {}

BoundReport Verdicts::deg_fdeg_bound(const GradedPoly& P, int s) const {
    if (s < 1) throw Error("the weight parameter must be positive");
    if (P.is_zero()) {
        BoundReport r = BoundReport::inequality("deg-fdeg", 0, false, 0, 1);
        return r;
    }
    const Alphabet& alpha = *P.alphabet();
    int deg = 0, fdeg = 0;
    for (auto& [m, c] : P.terms()) {
        auto [dm, fm] = monomial_weights(alpha, m);
        deg = std::max(deg, dm);
        fdeg = std::max(fdeg, fm);
    }
    for (auto& [m, c] : P.terms()) {
        auto [dm, fm] = monomial_weights(alpha, m);
        if (dm != deg) throw Error("the bound applies to homogeneous polynomials");
        (void)fm;
    }

    long best = 0;
    long best_p = 0;
    bool first = true;
    for (auto& [m, c] : P.terms()) {
        long correction = 0, p = 0;
        for (auto& [i, e] : m) {
            int j = x_index(alpha, i);
            if (j % 2 == 1 && j <= 2 * s - 1) {
                int half = (j - 1) / 2;
                correction += static_cast<long>(e) * (s - half);
                p += e;
            }
        }
        long num = correction + static_cast<long>(2 * s + 1) * fdeg;
        if (first || num < best) { best = num; best_p = p; first = false; }
    }
    BoundReport r = BoundReport::inequality("deg-fdeg", deg, true, best, s);
    r.inputs["s"] = s;
    r.inputs["deg"] = deg;
    r.inputs["fdeg"] = fdeg;
    r.inputs["p"] = best_p;
    return r;
}

std::optional<int> Verdicts::fdeg_of_class(const GradedPoly& x) const {
    return laz_.fdeg_of_class_mod2(x);
}

int Verdicts::ideal_valuation_fixed(const GradedPoly& x, int s, int cap) const {
    if (x.is_zero()) return cap;
    std::vector<GradedPoly> gens;
    for (int i = 0; i < s; ++i) gens.push_back(equ_.fixed_class(equ_.xn(2 * i + 1)));
    auto xdim = x.dim();
    int window_top = xdim.value_or(0);

    for (int q = 1; q <= cap; ++q) {
        // Products of q generators, with multiplicity.
        std::vector<GradedPoly> products;
        std::vector<int> pick(static_cast<std::size_t>(q), 0);
        while (true) {
            GradedPoly p(fgl_.master(), 1);
            for (int t = 0; t < q; ++t) p = p * gens[static_cast<std::size_t>(pick[t])];
            products.push_back(p);
            int t = q - 1;
            while (t >= 0 && pick[t] == s - 1) --t;
            if (t < 0) break;
            ++pick[t];
            for (int u = t + 1; u < q; ++u) pick[u] = pick[t];
        }
        std::vector<GradedPoly> rows;
        for (auto& p : products) {
            auto parts = p.homogeneous_parts();
            if (parts.empty()) continue;
            int dim_min = -parts.rbegin()->first;
            for (auto& [dd, pp] : parts) dim_min = std::min(dim_min, -dd);
            for (int e = 0; e + dim_min <= window_top; ++e) {
                if (e == 0) {
                    rows.push_back(p);
                    continue;
                }
                for (auto& z : laz_.lattice_basis(e).rows) rows.push_back(p * z);
            }
        }
        MonoIndexer columns;
        for (auto& r : rows) columns.intern(r);
        auto vec = columns.try_vectorize(x);
        bool member = false;
        if (vec) {
            std::vector<std::vector<BigInt>> mat;
            for (auto& r : rows) mat.push_back(columns.vectorize(r));
            LatticeSolver solver(std::move(mat));
            member = solver.solve(*vec).has_value();
        }
        if (!member) return q - 1;
    }
    return cap;
}

std::vector<BoundReport> Verdicts::bound_suite(const Fixture& f) const {
    std::vector<BoundReport> out;
    const long n = f.n;
    auto dopt = f.fixed_dim();
    const long d = dopt.value_or(-1);
    if (d < 0) return out;  // free involutions carry no bound data here

    GradedPoly ambient = equ_.ambient_class(f);
    GradedPoly fix = equ_.fixed_class(f);
    std::map<int, GradedPoly> by_dim;
    for (auto& c : f.components) {
        auto it = by_dim.find(c.variety->dim);
        if (it == by_dim.end()) it = by_dim.emplace(c.variety->dim, GradedPoly(fgl_.master())).first;
        it->second += laz_.class_of(c.variety).scaled(c.multiplicity);
    }

    auto push = [&](BoundReport r) {
        r.inputs["n"] = n;
        r.inputs["d"] = d;
        out.push_back(std::move(r));
    };

    // Some Chern number odd: the five-halves bound.
    {
        bool odd = false;
        for (auto& alpha : partitions_of(static_cast<int>(n)))
            if (laz_.c_alpha(ambient, alpha) % 2 != 0) { odd = true; break; }
        push(BoundReport::inequality("odd-chern-five-halves", n, odd, 5 * d, 2));
    }

    // Powers of the odd-degree ideal modulo two.
    {
        auto coords = laz_.coordinates(ambient, static_cast<int>(n));
        for (int s = 1; s <= std::min<long>(d + 1, 3); ++s) {
            bool premise = false;
            long q = 0;
            if (coords) {
                const auto& basis = laz_.lattice_basis(static_cast<int>(n));
                bool first = true;
                for (std::size_t t = 0; t < coords->size(); ++t) {
                    if ((*coords)[t] % 2 == 0) continue;
                    long blocks = 0;
                    for (int part : basis.betas[t])
                        if (part % 2 == 1 && part <= 2 * s - 1) ++blocks;
                    if (first || blocks < q) { q = blocks; first = false; }
                    premise = true;
                }
            }
            BoundReport r = BoundReport::inequality("ideal-power", n, premise,
                                                    (2 * s + 1) * d + s * q, s);
            r.inputs["s"] = s;
            r.inputs["q"] = q;
            push(std::move(r));
        }
    }

    // A primitive Chern number bounds through the number of odd parts.
    {
        bool found = false;
        BoundReport best;
        for (auto& alpha : partitions_of(static_cast<int>(n))) {
            BigInt g = laz_.c_alpha_image_gcd(alpha);
            if (g == 0) continue;
            BigInt c = laz_.c_alpha(ambient, alpha);
            if (c % (2 * g) == 0) continue;
            long odd_parts = 0;
            for (int part : alpha)
                if (part % 2 == 1) ++odd_parts;
            BoundReport r =
                BoundReport::inequality("alpha-primitive", n, true, 2 * d + odd_parts, 1);
            r.note = partition_to_string(alpha);
            if (!found || r.bound_num < best.bound_num) best = std::move(r);
            found = true;
        }
        if (!found) best = BoundReport::inequality("alpha-primitive", n, false, 0, 1);
        push(std::move(best));
    }

    // Two-adic valuation of the fixed-locus Chern numbers.
    {
        bool premise = false;
        long q = 0;
        bool first = true;
        for (int w = 0; w <= d; ++w) {
            for (auto& alpha : partitions_of(w)) {
                BigInt c = laz_.c_alpha(fix, alpha);
                if (c == 0) continue;
                long v = valuation2(c);
                if (first || v < q) { q = v; first = false; }
                premise = true;
            }
        }
        BoundReport r =
            BoundReport::inequality("fixed-chern-two-adic", n, premise, 2 * q + 5 * d, 2);
        r.inputs["q"] = q;
        push(std::move(r));
    }

    // In the low range the fixed class is divisible by a power of two.
    {
        BoundReport r;
        r.rule = "fixed-class-two-power";
        r.premise = n >= 3 * d;
        r.observed = n;
        long have = 0;
        if (r.premise) {
            auto coords = laz_.coordinates_all(fix);
            if (!coords) throw NotInLattice("fixed class outside the lattice", fix.to_string());
            bool first = true;
            for (auto& [e, cs] : *coords)
                for (auto& c : cs) {
                    if (c == 0) continue;
                    long v = valuation2(c);
                    if (first || v < have) { have = v; first = false; }
                }
            if (first) have = n;  // zero class: any power divides
            long need = n - 3 * d;
            r.bound_num = have;
            r.bound_den = 1;
            r.inputs["required"] = need;
            r.inputs["available"] = have;
            r.status = have < need ? "violated" : (have == need ? "sharp" : "satisfied");
        } else {
            r.status = "satisfied";
        }
        push(std::move(r));
    }

    // Euler number runs.
    {
        BigInt chi = LazardContext::genus(ambient, LazardContext::Genus::euler);
        push(BoundReport::inequality("euler-odd", n, chi % 2 != 0, 2 * d, 1));
        push(BoundReport::inequality("euler-mod-four", n,
                                     n % 2 == 1 && ((chi % 4) + 4) % 4 != 0, 2 * d + 1, 1));
        BigInt chif = LazardContext::genus(fix, LazardContext::Genus::euler);
        long q = chif == 0 ? n : valuation2(chif);
        BoundReport r = BoundReport::inequality("euler-fixed", n, chif != 0, 2 * d + q, 1);
        r.inputs["q"] = q;
        push(std::move(r));
    }

    // The second genus.
    {
        BigInt psi = LazardContext::genus(ambient, LazardContext::Genus::psi);
        push(BoundReport::inequality("psi-odd", n, psi % 2 != 0, 2 * d, 1));
        BigInt psif = LazardContext::genus(fix, LazardContext::Genus::psi);
        long q = psif == 0 ? n : valuation2(psif);
        BoundReport r = BoundReport::inequality("psi-fixed", n, psif != 0, 9 * d + 4 * q, 4);
        r.inputs["q"] = q;
        push(std::move(r));
    }

    // Powers of the ideal of fixed-locus generator classes.
    for (int s = 1; s <= std::min<long>(d + 1, 3); ++s) {
        if (2 * s - 1 > fgl_.config().catalog_max) break;
        int val = ideal_valuation_fixed(fix, s, static_cast<int>(n));
        BoundReport r = BoundReport::inequality("fixed-ideal", n, val < n,
                                                (2 * s + 1) * d + s * val, s);
        r.inputs["s"] = s;
        r.inputs["q"] = val;
        push(std::move(r));
    }

    // Per-component versions.
    for (long j = 0; j <= d; ++j) {
        auto it = by_dim.find(static_cast<int>(d - j));
        if (it == by_dim.end() || it->second.is_zero()) continue;
        const GradedPoly& comp = it->second;

        for (int s = 1; s <= std::min<long>(d + 1, 3); ++s) {
            auto coords = laz_.coordinates(comp, static_cast<int>(d - j));
            if (!coords)
                throw NotInLattice("component class outside the lattice", comp.to_string());
            const auto& basis = laz_.lattice_basis(static_cast<int>(d - j));
            bool premise = false;
            long q = 0;
            bool first = true;
            for (std::size_t t = 0; t < coords->size(); ++t) {
                BigInt c = (*coords)[t];
                if (c == 0) continue;
                long small = 0;
                for (int part : basis.betas[t])
                    if (part <= s - 1) ++small;
                long v = valuation2(c) + small;
                if (first || v < q) { q = v; first = false; }
                premise = true;
            }
            if (d - j == 0) {
                // Degree zero: the single coordinate is the point count.
                premise = !comp.is_zero();
                q = premise ? valuation2(comp.coefficient(Mono{})) : 0;
            }
            BoundReport r = BoundReport::inequality(
                "component-ideal", n, premise,
                (2 * s + 1) * d + s * q + (j / 2) * (s - 2), s);
            r.inputs["s"] = s;
            r.inputs["j"] = j;
            r.inputs["q"] = q;
            push(std::move(r));
        }

        bool found = false;
        BoundReport best;
        {
            for (auto& alpha : partitions_of(static_cast<int>(d - j))) {
                BigInt c = laz_.c_alpha(comp, alpha);
                if (c == 0) continue;
                BigInt g = laz_.c_alpha_image_gcd(alpha);
                long q = valuation2(c) - (g == 0 ? 0 : valuation2(g));
                BoundReport r = BoundReport::inequality(
                    "component-chern", n, true,
                    4 * d + 2 * q + 2 * static_cast<long>(alpha.size()) + j, 2);
                r.note = partition_to_string(alpha);
                r.inputs["j"] = j;
                r.inputs["q"] = q;
                if (!found || r.bound_num < best.bound_num) best = std::move(r);
                found = true;
            }
        }
        if (found) push(std::move(best));
    }

    // Indecomposability transfers between the ambient class and the top
    // component exactly in odd relative dimension one.
    if (n == 2 * d + 1 && d > 0) {
        BoundReport r;
        r.rule = "top-indecomposable";
        r.premise = true;
        r.observed = n;
        auto itop = by_dim.find(static_cast<int>(d));
        bool amb_indec = !laz_.is_decomposable_mod2(ambient);
        bool fix_indec = itop != by_dim.end() && !itop->second.is_zero() &&
                         !laz_.is_decomposable_mod2(itop->second);
        r.inputs["ambient_indecomposable"] = amb_indec ? 1 : 0;
        r.inputs["component_indecomposable"] = fix_indec ? 1 : 0;
        r.status = (amb_indec == fix_indec) ? "satisfied" : "violated";
        push(std::move(r));
    }

    return out;
}

CurveVerdict Verdicts::curve_table(int n, long a, long b, long c) const {
    if (n < 0) throw Error("dimension must be nonnegative");
    CurveVerdict v;
    auto div = [](long x, long p) { return ((x % p) + p) % p == 0; };
    if (n == 0) {
        // A zero-dimensional total space leaves no room for curve data.
        v.yes = (a == 0 && b == 0);
        v.condition = "a = b = 0";
        return v;
    }
    if (n == 1) {
        v.yes = (a == 0 && div(c, 2));
        v.condition = "a = 0 and c even";
        return v;
    }
    if (n == 2) {
        v.yes = div(a + 2 * b + c, 4);
        v.condition = "a + 2b + c divisible by 4";
        return v;
    }
    long p2nm2 = 1L << (n - 2);
    long p2nm3 = 1L << (n - 3);
    long p2n = 1L << n;
    v.yes = div(a, p2nm2) && div(b, p2nm3) && div(3 * a - 2 * b - c, p2n);
    v.condition = "a, b, 3a-2b-c divisible by the scheduled powers of two";
    return v;
}

std::vector<InvClass> Verdicts::basis_I_n_1(int n) const {
    if (n < 0) throw Error("dimension must be nonnegative");
    const AlphabetPtr& X = equ_.x_alphabet();
    auto mono = [&](std::initializer_list<std::pair<int, int>> parts) {
        InvClass c;
        c.n = n;
        c.x_alpha = X;
        Mono m;
        for (auto& [j, e] : parts)
            m.emplace_back(static_cast<std::uint32_t>(X->require("x" + std::to_string(j))), e);
        std::sort(m.begin(), m.end());
        GradedPoly p(X);
        p.add_term(m, 1);
        c.A.emplace(0, std::move(p));
        return c;
    };
    std::vector<InvClass> out;
    if (n == 0) {
        InvClass one;
        one.n = 0;
        one.x_alpha = X;
        one.A.emplace(0, GradedPoly(X, 1));
        out.push_back(std::move(one));
        return out;
    }
    if (n == 1) {
        // The trivial involution on the projective line.
        Fixture f;
        f.name = "P1-trivial";
        f.n = 1;
        VarietyPtr p1 = laz_.projective_space(1);
        f.ambient.emplace_back(1, p1);
        FixtureComponent comp;
        comp.variety = p1;
        f.components.push_back(std::move(comp));
        out.push_back(equ_.decompose(f));
        out.push_back(mono({{1, 1}}));
        return out;
    }
    if (n == 2) {
        out.push_back(equ_.decompose(equ_.p1xp1_swap()));
        out.push_back(mono({{2, 1}}));
        out.push_back(mono({{1, 2}}));
        return out;
    }
    out.push_back(n == 3 ? mono({{3, 1}}) : mono({{1, n - 3}, {3, 1}}));
    out.push_back(mono({{1, n - 2}, {2, 1}}));
    out.push_back(mono({{1, n}}));
    return out;
}

std::pair<BigInt, bool> Verdicts::isolated_points_check(const Fixture& f) const {
    int rank = -1;
    BigInt count = 0;
    for (auto& c : f.components) {
        if (c.variety->dim != 0) throw Error("fixture has a positive-dimensional component");
        for (auto& [k, c1] : c.normal.lines)
            if (!c.variety->pres->normalize(c1).is_zero())
                throw Error("normal bundle is not trivial");
        int r = c.normal.rank();
        if (rank < 0) rank = r;
        if (r != rank) throw Error("normal rank varies across the components");
        count += BigInt(c.multiplicity) *
                 laz_.class_of(c.variety).coefficient(Mono{});
    }
    if (rank < 0) rank = 0;
    BigInt den = pow2(rank);
    if (count % den != 0) return {0, false};
    return {count / den, true};
}

}  // namespace cobinv
