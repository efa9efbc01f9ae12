#include "cobinv/equivariant.hpp"

#include <algorithm>

namespace cobinv {

std::optional<int> Fixture::fixed_dim() const {
    std::optional<int> best;
    for (auto& c : components)
        if (!best || c.variety->dim > *best) best = c.variety->dim;
    return best;
}

GradedPoly InvClass::coeff(int i) const {
    auto it = A.find(i);
    if (it != A.end()) return it->second;
    return GradedPoly(x_alpha);
}

bool InvClass::operator==(const InvClass& o) const {
    for (auto& [i, p] : A)
        if (!p.is_zero() && o.coeff(i) != p) return false;
    for (auto& [i, p] : o.A)
        if (!p.is_zero() && coeff(i) != p) return false;
    return true;
}

Equivariant::Equivariant(const MRing& mring)
    : mring_(mring), fgl_(mring.fgl()), laz_(mring.lazard()) {
    int xmax = fgl_.config().catalog_max;
    x_alpha_ = make_x_alphabet(xmax);
    xv_alpha_ = make_xv_alphabet(xmax);
}

Fixture Equivariant::pab(int a, int b) const {
    if (a < 0 || b < 0) throw Error("projective space pair needs a, b >= 0");
    if (a < b) std::swap(a, b);
    Fixture f;
    f.name = "P(" + std::to_string(a) + "," + std::to_string(b) + ")";
    f.n = a + b + 1;
    f.ambient.emplace_back(1, laz_.projective_space(a + b + 1));

    auto comp = [&](int dim, int copies) {
        VarietyPtr base = laz_.projective_space(dim);
        FixtureComponent c;
        c.variety = base;
        c.normal.add(copies, dim > 0 ? base->pres->gen(0) : base->pres->zero());
        f.components.push_back(std::move(c));
    };
    comp(a, b + 1);
    comp(b, a + 1);
    return f;
}

Fixture Equivariant::hij(int i, int j) const {
    if (i < 1 || j < i) throw Error("the catalog needs 1 <= i <= j");
    Fixture f;
    f.name = "H(" + std::to_string(i) + "," + std::to_string(j) + ")";
    f.n = 2 * (i + j) - 1;
    f.ambient.emplace_back(1, laz_.milnor(2 * i, 2 * j));

    auto hgen = [&](const VarietyPtr& v, int which) { return v->pres->gen(which); };

    // P^i x P^{j-1}: (j+1) q*O(1) - p*O(1) q*O(1) + i p*O(1).
    {
        VarietyPtr pi = laz_.projective_space(i);
        VarietyPtr pj1 = laz_.projective_space(j - 1);
        VarietyPtr prod = make_product(fgl_, pi, pj1);
        GradedPoly hp = i > 0 ? pull_to_product(*prod, 0, pi->pres->gen(0)) : prod->pres->zero();
        GradedPoly hq =
            j - 1 > 0 ? pull_to_product(*prod, 1, pj1->pres->gen(0)) : prod->pres->zero();
        FixtureComponent c;
        c.variety = prod;
        c.normal.add(j + 1, hq).add(-1, hp + hq).add(i, hp);
        f.components.push_back(std::move(c));
    }
    // H_{i,j}: j O{1} + i pi*O(1).
    {
        VarietyPtr h = laz_.milnor(i, j);
        FixtureComponent c;
        c.variety = h;
        GradedPoly xi = hgen(h, h->fiber_level);
        GradedPoly hh = i > 0 ? hgen(h, 0) : h->pres->zero();
        c.normal.add(j, xi).add(i, hh);
        f.components.push_back(std::move(c));
    }
    // P^{i-1} x P^j: j q*O(1) - p*O(1) q*O(1) + (i+1) p*O(1).
    {
        VarietyPtr pi1 = laz_.projective_space(i - 1);
        VarietyPtr pj = laz_.projective_space(j);
        VarietyPtr prod = make_product(fgl_, pi1, pj);
        GradedPoly hp =
            i - 1 > 0 ? pull_to_product(*prod, 0, pi1->pres->gen(0)) : prod->pres->zero();
        GradedPoly hq = pull_to_product(*prod, 1, pj->pres->gen(0));
        FixtureComponent c;
        c.variety = prod;
        c.normal.add(j, hq).add(-1, hp + hq).add(i + 1, hp);
        f.components.push_back(std::move(c));
    }
    // H_{i-1,j-1}: (j+1) O{1} + (i+1) pi*O(1); empty when i = j = 1.
    if (!(i == 1 && j == 1)) {
        VarietyPtr h = laz_.milnor(i - 1, j - 1);
        FixtureComponent c;
        c.variety = h;
        GradedPoly xi = hgen(h, h->fiber_level);
        GradedPoly hh = i - 1 > 0 ? hgen(h, 0) : h->pres->zero();
        c.normal.add(j + 1, xi).add(i + 1, hh);
        f.components.push_back(std::move(c));
    }
    return f;
}

Fixture Equivariant::xn(int n) const {
    if (n < 1) throw Error("catalog generators are indexed from 1");
    if (n > fgl_.config().catalog_max)
        throw WindowError("catalog generator " + std::to_string(n) +
                          " exceeds the configured bound");
    if (n == 1) {
        Fixture f = pab(0, 0);
        f.name = "X1";
        return f;
    }
    if (n % 2 == 0) {
        Fixture f = pab(n / 2, n / 2 - 1);
        f.name = "X" + std::to_string(n);
        return f;
    }
    int d = (n - 1) / 2;
    // Coefficients e_i with sum e_i C(d+1, i) = omega_d, chosen by a
    // deterministic left-to-right gcd sweep.
    BigInt g = 0;
    std::vector<BigInt> coeffs;
    int top = (d + 1) / 2;
    for (int i = 1; i <= top; ++i) {
        BigInt v = binomial(d + 1, i);
        if (i == 1) {
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
    if (g != LazardContext::omega(d))
        throw Error("generator coefficients missed omega at n=" + std::to_string(n));

    Fixture f;
    f.name = "X" + std::to_string(n);
    f.n = n;
    for (int i = 1; i <= top; ++i) {
        long e = static_cast<long>(coeffs[static_cast<std::size_t>(i - 1)]);
        f.e_choice.emplace_back(i, e);
        if (e == 0) continue;
        Fixture h = hij(i, d + 1 - i);
        for (auto& [mult, v] : h.ambient) f.ambient.emplace_back(mult * e, v);
        for (auto& c : h.components) {
            c.multiplicity *= static_cast<int>(e);
            f.components.push_back(std::move(c));
        }
    }
    return f;
}

Fixture Equivariant::p1xp1_swap() const {
    Fixture f;
    f.name = "P1xP1-swap";
    f.n = 2;
    VarietyPtr p1 = laz_.projective_space(1);
    f.ambient.emplace_back(1, make_product(fgl_, p1, p1));
    FixtureComponent c;
    c.variety = p1;
    c.normal.add(1, p1->pres->gen(0).scaled(2));
    f.components.push_back(std::move(c));
    return f;
}

Fixture Equivariant::product(const Fixture& a, const Fixture& b) const {
    Fixture f;
    f.name = a.name + "*" + b.name;
    f.n = a.n + b.n;
    for (auto& [ma, va] : a.ambient)
        for (auto& [mb, vb] : b.ambient)
            f.ambient.emplace_back(ma * mb, make_product(fgl_, va, vb));
    for (auto& ca : a.components) {
        for (auto& cb : b.components) {
            FixtureComponent c;
            VarietyPtr prod = make_product(fgl_, ca.variety, cb.variety);
            c.variety = prod;
            c.multiplicity = ca.multiplicity * cb.multiplicity;
            for (auto& [k, c1] : ca.normal.lines)
                c.normal.add(k, pull_to_product(*prod, 0, c1));
            for (auto& [k, c1] : cb.normal.lines)
                c.normal.add(k, pull_to_product(*prod, 1, c1));
            f.components.push_back(std::move(c));
        }
    }
    return f;
}

GradedPoly Equivariant::nu(const Fixture& f) const {
    GradedPoly out(fgl_.master());
    for (auto& c : f.components)
        out += mring_.bundle_class(*c.variety, c.normal).scaled(c.multiplicity);
    return out;
}

GradedPoly Equivariant::ambient_class(const Fixture& f) const {
    GradedPoly out(fgl_.master());
    for (auto& [mult, v] : f.ambient) out += laz_.class_of(v).scaled(mult);
    return out;
}

GradedPoly Equivariant::fixed_class(const Fixture& f) const {
    GradedPoly out(fgl_.master());
    for (auto& c : f.components) out += laz_.class_of(c.variety).scaled(c.multiplicity);
    return out;
}

std::pair<BigInt, BigInt> Equivariant::theta(const Fixture& f, int d) const {
    BigInt fix = laz_.c_alpha(fixed_class(f), Partition{d});
    BigInt nrm = 0;
    for (auto& c : f.components) {
        GradedPoly cf = cf_class(*c.variety, c.normal);
        GradedPoly cd = chern_coeff(*c.variety, cf, Partition{d});
        nrm += c.variety->pres->degree(cd) * c.multiplicity;
    }
    return {fix, nrm};
}

GradedPoly Equivariant::x_class(int n) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = x_cache_.find(n);
        if (it != x_cache_.end()) return it->second;
    }
    GradedPoly v = nu(xn(n));
    std::lock_guard<std::mutex> lock(mu_);
    return x_cache_.emplace(n, std::move(v)).first->second;
}

GradedPoly Equivariant::x_monomial(const Partition& alpha) const {
    if (alpha.empty()) return GradedPoly(fgl_.master(), 1);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = x_mono_cache_.find(alpha);
        if (it != x_mono_cache_.end()) return it->second;
    }
    Partition rest(alpha.begin() + 1, alpha.end());
    GradedPoly val = x_class(alpha[0]) * x_monomial(rest);
    std::lock_guard<std::mutex> lock(mu_);
    return x_mono_cache_.emplace(alpha, std::move(val)).first->second;
}

const Equivariant::Window& Equivariant::window(int n, int f) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = window_cache_.find({n, f});
        if (it != window_cache_.end()) return it->second;
    }
    Window w;
    int neg = std::max(0, 3 * f - n);
    std::vector<GradedPoly> rows;
    for (int wgt = 0; wgt <= n + neg; ++wgt) {
        for (auto& alpha : partitions_of(wgt, 2)) {
            if (fdeg_weight(alpha) > f) continue;
            if (!alpha.empty() && alpha[0] > fgl_.config().catalog_max)
                throw WindowError("rewriting needs generator " + std::to_string(alpha[0]) +
                                  " beyond the configured catalog bound");
            int k = n - wgt;
            w.candidates.emplace_back(k, alpha);
            GradedPoly vk = GradedPoly::symbol(fgl_.master(), "v", k);
            rows.push_back(x_monomial(alpha) * vk);
        }
    }
    for (auto& r : rows) w.columns.intern(r);
    std::vector<std::vector<BigInt>> mat;
    for (auto& r : rows) mat.push_back(w.columns.vectorize(r));
    w.solver = LatticeSolver(std::move(mat));
    std::lock_guard<std::mutex> lock(mu_);
    return window_cache_.emplace(std::make_pair(n, f), std::move(w)).first->second;
}

GradedPoly Equivariant::express_part(const GradedPoly& part, int n, int f) const {
    const Window& w = window(n, f);
    auto vec = w.columns.try_vectorize(part);
    std::optional<std::vector<BigInt>> sol;
    if (vec) sol = w.solver.solve(*vec);
    if (!sol)
        throw NotInLattice("element is not a polynomial in the stable generators "
                           "within this window",
                           part.to_string());
    GradedPoly out(xv_alpha_);
    for (std::size_t t = 0; t < sol->size(); ++t) {
        if ((*sol)[t] == 0) continue;
        auto& [k, alpha] = w.candidates[t];
        Mono m;
        if (k != 0) m.emplace_back(static_cast<std::uint32_t>(xv_alpha_->require("v")), k);
        for (int part_j : alpha) {
            std::uint32_t xi =
                static_cast<std::uint32_t>(xv_alpha_->require("x" + std::to_string(part_j)));
            bool found = false;
            for (auto& [i, e] : m)
                if (i == xi) { ++e; found = true; break; }
            if (!found) m.emplace_back(xi, 1);
        }
        std::sort(m.begin(), m.end());
        out.add_term(m, (*sol)[t]);
    }
    return out;
}

GradedPoly Equivariant::express_in_x(const GradedPoly& melem) const {
    GradedPoly out(xv_alpha_);
    for (auto& [deg, part] : melem.homogeneous_parts()) {
        auto f = part.dim_with_zero_weight({mring_.v_index()});
        out += express_part(part, -deg, f.value_or(0));
    }
    return out;
}

InvClass Equivariant::decompose_melem(const GradedPoly& melem, int n, int fixed_dim) const {
    GradedPoly expr = express_in_x(melem);
    std::size_t v_sym = xv_alpha_->require("v");

    InvClass out;
    out.n = n;
    out.x_alpha = x_alpha_;
    auto x_mono = [&](const Mono& m, int extra_x1) {
        Mono r;
        if (extra_x1 > 0)
            r.emplace_back(static_cast<std::uint32_t>(x_alpha_->require("x1")), extra_x1);
        for (auto& [i, e] : m) {
            if (i == v_sym) continue;
            r.emplace_back(
                static_cast<std::uint32_t>(x_alpha_->require(xv_alpha_->at(i).name)), e);
        }
        std::sort(r.begin(), r.end());
        return r;
    };

    for (auto& [m, c] : expr.terms()) {
        int k = 0;
        for (auto& [i, e] : m)
            if (i == v_sym) k = e;
        if (k >= 0) {
            // v^k X = (x1/2)^k X.
            BigInt den = pow2(k);
            if (c % den != 0)
                throw DivisibilityError(
                    "coefficient " + to_string(c) + " of " + mono_to_string(m, *xv_alpha_) +
                        " is not divisible by 2^" + std::to_string(k) +
                        "; the element is not the class of a virtual involution",
                    mono_to_string(m, *xv_alpha_));
            auto it = out.A.find(0);
            if (it == out.A.end()) it = out.A.emplace(0, GradedPoly(x_alpha_)).first;
            it->second.add_term(x_mono(m, k), c / den);
        } else {
            auto it = out.A.find(-k);
            if (it == out.A.end()) it = out.A.emplace(-k, GradedPoly(x_alpha_)).first;
            it->second.add_term(x_mono(m, 0), c);
        }
    }
    for (auto it = out.A.begin(); it != out.A.end();)
        it = it->second.is_zero() ? out.A.erase(it) : std::next(it);

    // The structural facts about the expansion, checked on every output.
    int bound = std::max(0, 3 * fixed_dim - n);
    for (auto& [i, p] : out.A) {
        if (!p.is_homogeneous(n + i))
            throw Error("coefficient polynomial at t^" + std::to_string(i) +
                        " is not homogeneous of the expected degree");
        if (i > bound)
            throw Error("t-power " + std::to_string(i) + " exceeds the structural bound");
        int fdeg = 0;
        for (auto& [mm, cc] : p.terms()) {
            int w = 0;
            for (auto& [sym, e] : mm) {
                int j = std::stoi(x_alpha_->at(sym).name.substr(1));
                w += (j / 2) * e;
            }
            fdeg = std::max(fdeg, w);
        }
        if (fdeg > fixed_dim)
            throw Error("auxiliary degree exceeds the fixed-locus dimension");
        if (i >= 1) {
            auto x1 = x_alpha_->find("x1");
            for (auto& [mm, cc] : p.terms())
                for (auto& [sym, e] : mm)
                    if (x1 && sym == *x1)
                        throw Error("positive t-powers must be free of the first generator");
        }
    }
    return out;
}

InvClass Equivariant::decompose(const Fixture& f) const {
    auto d = f.fixed_dim();
    GradedPoly m = nu(f);
    InvClass c = decompose_melem(m, f.n, d.value_or(0));
    // Round trip.
    if (evaluate_invclass(c) != m)
        throw Error("canonical expansion failed to reproduce the class");
    return c;
}

InvClass Equivariant::invclass_mul(const InvClass& a, const InvClass& b) const {
    InvClass out;
    out.n = a.n + b.n;
    out.x_alpha = x_alpha_;
    std::uint32_t x1 = static_cast<std::uint32_t>(x_alpha_->require("x1"));
    auto add_reduced = [&](int i, const Mono& m, const BigInt& c) {
        int e = 0;
        for (auto& [sym, ee] : m)
            if (sym == x1) e = ee;
        int s = std::min(i, e);
        Mono r;
        for (auto& [sym, ee] : m) {
            if (sym == x1) {
                if (ee - s > 0) r.emplace_back(sym, ee - s);
            } else {
                r.emplace_back(sym, ee);
            }
        }
        int target = i - s;
        auto it = out.A.find(target);
        if (it == out.A.end()) it = out.A.emplace(target, GradedPoly(x_alpha_)).first;
        it->second.add_term(r, c * pow2(s));
    };
    for (auto& [i, p] : a.A)
        for (auto& [j, q] : b.A) {
            GradedPoly prod = p * q;
            for (auto& [m, c] : prod.terms()) add_reduced(i + j, m, c);
        }
    for (auto it = out.A.begin(); it != out.A.end();)
        it = it->second.is_zero() ? out.A.erase(it) : std::next(it);
    return out;
}

GradedPoly Equivariant::evaluate_invclass(const InvClass& c) const {
    GradedPoly out(fgl_.master());
    std::map<std::string, GradedPoly> images;
    for (const Symbol& s : x_alpha_->symbols())
        images.emplace(s.name, x_class(std::stoi(s.name.substr(1))));
    for (auto& [i, p] : c.A) {
        GradedPoly value = p.substitute(fgl_.master(), images);
        out += value * GradedPoly::symbol(fgl_.master(), "v", -i);
    }
    return out;
}

GradedPoly Equivariant::eps_mod2(const InvClass& c) const {
    std::map<std::string, GradedPoly> images;
    for (const Symbol& s : x_alpha_->symbols()) {
        int j = std::stoi(s.name.substr(1));
        images.emplace(s.name, ambient_class(xn(j)));
    }
    GradedPoly val = c.coeff(0).substitute(fgl_.master(), images);
    GradedPoly out(fgl_.master());
    for (auto& [m, cc] : val.terms()) {
        BigInt r = cc % 2;
        if (r < 0) r += 2;
        out.add_term(m, r);
    }
    return out;
}

GradedPoly Equivariant::phi_fixed_melem(const GradedPoly& melem) const {
    GradedPoly out(fgl_.master());
    for (auto& [m, c] : melem.terms()) {
        bool killed = false;
        Mono rest;
        for (auto& [i, e] : m) {
            if (i == mring_.v_index()) continue;
            if (mring_.is_a_symbol(i)) { killed = true; break; }
            rest.emplace_back(i, e);
        }
        if (!killed) out.add_term(rest, c);
    }
    return out;
}

GradedPoly Equivariant::phi_fixed(const InvClass& c) const {
    std::map<std::string, GradedPoly> images;
    for (const Symbol& s : x_alpha_->symbols()) {
        int j = std::stoi(s.name.substr(1));
        images.emplace(s.name, fixed_class(xn(j)));
    }
    GradedPoly out(fgl_.master());
    for (auto& [i, p] : c.A) out += p.substitute(fgl_.master(), images);
    return out;
}

RealizeVerdict Equivariant::is_normal_bundle_class(const GradedPoly& melem) const {
    RealizeVerdict v;
    std::string why;
    if (!mring_.is_in_m(melem, &why)) {
        v.yes = false;
        v.reason = "not a bundle class: " + why;
        return v;
    }
    GradedPoly boundary = mring_.partial(melem);
    MembershipResult res = mring_.delta_image_membership(boundary);
    v.yes = res.member;
    if (res.member) {
        v.certificate = std::move(res.certificate);
        v.reason = "boundary lies in the derivation image";
    } else {
        v.reason = "boundary escapes the derivation image; residual " + res.residual;
    }
    return v;
}

}  // namespace cobinv
