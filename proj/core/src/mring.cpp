#include "cobinv/mring.hpp"

#include <algorithm>
#include <sstream>

namespace cobinv {

MRing::MRing(const FglContext& fgl, const LazardContext& lazard)
    : fgl_(fgl), lazard_(lazard), v_(fgl.master()->require("v")) {}

bool MRing::is_a_symbol(std::uint32_t i, int* idx) const {
    const std::string& name = master()->at(i).name;
    if (name[0] != 'a') return false;
    if (idx) *idx = std::stoi(name.substr(1));
    return true;
}

bool MRing::is_b_symbol(std::uint32_t i, int* idx) const {
    const std::string& name = master()->at(i).name;
    if (name[0] != 'b') return false;
    if (idx) *idx = std::stoi(name.substr(1));
    return true;
}

GradedPoly MRing::bundle_class(const Variety& S, const KClass& E) const {
    int r = E.rank();
    if (r < 0) throw Error("bundle class needs nonnegative rank, got " + std::to_string(r));

    const AlphabetPtr& alpha = S.pres->alphabet();
    // Multiplicative series of E with the a-symbols recording the powers of
    // the twisted line classes.
    GradedPoly pp(alpha, 1);
    for (auto& [k, c1] : E.lines) {
        GradedPoly w = twisted_c1(fgl_, S, c1);
        GradedPoly factor(alpha, 1);
        GradedPoly p(alpha, 1);
        for (int i = 1;; ++i) {
            p = S.pres->normalize(p * w);
            if (p.is_zero()) break;
            factor += p * GradedPoly::symbol(alpha, "a" + std::to_string(i));
        }
        if (k < 0) {
            GradedPoly nil = factor - GradedPoly(alpha, 1);
            GradedPoly inv(alpha, 1), q(alpha, 1);
            while (true) {
                q = S.pres->normalize(q * (-nil));
                if (q.is_zero()) break;
                inv += q;
            }
            factor = inv;
        }
        for (int t = 0; t < (k >= 0 ? k : -k); ++t) pp = S.pres->normalize(pp * factor);
    }

    // Split by a-monomial, push each coefficient to the point.
    std::map<Mono, GradedPoly> by_a;
    for (auto& [m, c] : pp.terms()) {
        Mono apart, rest;
        for (auto& [i, e] : m) {
            const std::string& name = alpha->at(i).name;
            if (name[0] == 'a') apart.emplace_back(i, e);
            else rest.emplace_back(i, e);
        }
        auto it = by_a.find(apart);
        if (it == by_a.end()) it = by_a.emplace(apart, GradedPoly(alpha)).first;
        it->second.add_term(rest, c);
    }

    GradedPoly out(master());
    Mono v_part{{static_cast<std::uint32_t>(v_), r}};
    for (auto& [apart, coeff] : by_a) {
        GradedPoly cls = fund_class_of(fgl_, S, coeff);
        if (cls.is_zero()) continue;
        Mono am;
        for (auto& [i, e] : apart)
            am.emplace_back(static_cast<std::uint32_t>(master()->require(alpha->at(i).name)), e);
        Mono full = r == 0 ? am : mono_mul(am, v_part);
        out += GradedPoly::term(master(), full, 1) * cls;
    }
    return out;
}

GradedPoly MRing::va(int i) const {
    Mono m{{static_cast<std::uint32_t>(v_), 1}};
    if (i > 0) {
        m.emplace_back(static_cast<std::uint32_t>(master()->require("a" + std::to_string(i))), 1);
        std::sort(m.begin(), m.end());
    }
    return GradedPoly::term(master(), m, 1);
}

GradedPoly MRing::p_elem(int i) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = p_cache_.find(i);
        if (it != p_cache_.end()) return it->second;
    }
    if (i < 0) return GradedPoly(master());
    VarietyPtr pn = lazard_.projective_space(i);
    KClass line;
    line.add(1, i > 0 ? pn->pres->gen(0) : pn->pres->zero());
    GradedPoly p = bundle_class(*pn, line);
    std::lock_guard<std::mutex> lock(mu_);
    return p_cache_.emplace(i, std::move(p)).first->second;
}

GradedPoly MRing::delta(const GradedPoly& p) const {
    GradedPoly out(master());
    for (auto& [m, c] : p.terms()) {
        int a_idx = 0;
        Mono rest;
        int v_exp = 0;
        for (auto& [i, e] : m) {
            int idx;
            if (i == v_) { v_exp = e; continue; }
            if (is_a_symbol(i, &idx)) {
                if (a_idx != 0 || e != 1)
                    throw Error("delta applies to the line-class module only");
                a_idx = idx;
                continue;
            }
            rest.emplace_back(i, e);
        }
        if (v_exp != 1) throw Error("delta applies to the line-class module only");
        GradedPoly lead = GradedPoly::term(master(), rest, c);
        for (int i = 1; i <= a_idx; ++i) {
            GradedPoly ui = fgl_.u(i);
            if (ui.is_zero()) continue;
            out += lead * ui * va(a_idx - i);
        }
    }
    return out;
}

LaurentSeries MRing::gamma_series(const Variety& S, const KClass& E) const {
    const AlphabetPtr& alpha = S.pres->alphabet();
    const int T = fgl_.config().series_order;
    LaurentSeries out = LaurentSeries::monomial("x", 0, GradedPoly(alpha, 1), T);
    auto norm = [&](LaurentSeries s) {
        for (int i = s.lo(); i < s.hi(); ++i) s.set_coeff(i, S.pres->normalize(s.coeff(i)));
        return s;
    };
    auto reduce = [&S](const GradedPoly& p) { return S.pres->normalize(p); };
    for (auto& [k, c1] : E.lines) {
        GradedPoly w = twisted_c1(fgl_, S, c1);
        LaurentSeries factor = k >= 0
                                   ? LaurentSeries::from_trunc(fgl_.line_sum(w, reduce))
                                   : fgl_.line_sum_inverse(w, reduce);
        for (int t = 0; t < (k >= 0 ? k : -k); ++t) out = norm(out * factor);
    }
    return out;
}

const LaurentSeries& MRing::gamma_va(int i) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = gamma_va_cache_.find(i);
        if (it != gamma_va_cache_.end()) return it->second;
    }
    // Gamma(p_i): coefficientwise pushforward of gamma(-O(1)) over P^i.
    VarietyPtr pn = lazard_.projective_space(i);
    KClass minus_line;
    minus_line.add(-1, i > 0 ? pn->pres->gen(0) : pn->pres->zero());
    LaurentSeries gm = gamma_series(*pn, minus_line);
    LaurentSeries gp("x", gm.lo(), gm.hi(), master());
    for (int j = gm.lo(); j < gm.hi(); ++j)
        gp.set_coeff(j, fund_class_of(fgl_, *pn, gm.coeff(j)));

    // va_i = p_i - sum_{j<i} [P^{i-j}] va_j.
    LaurentSeries out = gp;
    for (int j = 0; j < i; ++j) {
        GradedPoly pij = lazard_.class_of(lazard_.projective_space(i - j));
        out = out - gamma_va(j).scaled_poly(pij);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return gamma_va_cache_.emplace(i, std::move(out)).first->second;
}

LaurentSeries MRing::gamma_transform(const GradedPoly& melem) const {
    const int T = fgl_.config().series_order;
    std::optional<LaurentSeries> out;
    for (auto& [m, c] : melem.terms()) {
        int v_exp = 0;
        int a_total = 0;
        Mono bpart;
        std::vector<std::pair<int, int>> a_factors;  // (index, exponent)
        for (auto& [i, e] : m) {
            int idx;
            if (i == v_) { v_exp = e; continue; }
            if (is_a_symbol(i, &idx)) { a_factors.emplace_back(idx, e); a_total += e; continue; }
            bpart.emplace_back(i, e);
        }
        LaurentSeries term = LaurentSeries::monomial(
            "x", a_total - v_exp, GradedPoly::term(master(), bpart, c), T + a_total - v_exp);
        for (auto& [idx, e] : a_factors)
            for (int t = 0; t < e; ++t) term = term * gamma_va(idx);
        out = out ? *out + term : term;
    }
    if (!out) return LaurentSeries("x", 0, T, master());
    return *out;
}

GradedPoly MRing::a_op(const LaurentSeries& s) const {
    if (s.hi() < 0)
        throw WindowError("series horizon does not reach the constant term");
    GradedPoly out(master());
    for (int j = s.lo(); j < 0; ++j) {
        if (s.coeff(j).is_zero()) continue;
        out += s.coeff(j) * p_elem(-1 - j);
    }
    return out;
}

GradedPoly MRing::partial(const GradedPoly& melem) const {
    if (melem.is_zero()) return GradedPoly(master());
    return a_op(gamma_transform(melem));
}

LaurentSeries MRing::rho_series(const VarietyPtr& S, const KClass& E, int lo, int hi) const {
    auto compute = [&](int slack) {
        int j = std::max(0, hi - 1) + slack;
        KClass full = E;
        full.add(1 + j, S->pres->zero());
        VarietyPtr pe = make_projective_bundle(fgl_, S, full, E.rank() + 1 + j, "rhofiber");
        GradedPoly xi_tw = twisted_c1(fgl_, *pe, pe->pres->gen(pe->fiber_level));
        GradedPoly twist = relative_twist_factor(fgl_, *pe);
        LaurentSeries out("x", lo, hi, S->pres->alphabet());
        GradedPoly power(pe->pres->alphabet(), 1);
        // xi^(j - i) for i descending from hi-1 to lo.
        int cur = 0;
        for (int i = hi - 1; i >= lo; --i) {
            int want = j - i;
            while (cur < want) { power = pe->pres->normalize(power * xi_tw); ++cur; }
            out.set_coeff(i, twisted_push_ready(*pe, twist, power));
        }
        return out;
    };
    LaurentSeries a = compute(0);
    LaurentSeries b = compute(1);
    for (int i = lo; i < hi; ++i)
        if (!(a.coeff(i) - b.coeff(i)).is_zero())
            throw Error("stabilized pushforward depends on the padding choice");
    return a;
}

std::pair<std::optional<int>, std::optional<int>> MRing::gradings(const GradedPoly& melem) const {
    return {melem.dim(), melem.dim_with_zero_weight({v_})};
}

bool MRing::is_in_m(const GradedPoly& melem, std::string* why) const {
    // Shape: each monomial v^r a_alpha needs r >= l(alpha), r >= 0.
    std::map<std::pair<int, Mono>, GradedPoly> groups;  // (v exp, a-part) -> b-poly
    for (auto& [m, c] : melem.terms()) {
        int v_exp = 0, a_len = 0;
        Mono apart, bpart;
        for (auto& [i, e] : m) {
            if (i == v_) { v_exp = e; continue; }
            if (is_a_symbol(i)) { apart.emplace_back(i, e); a_len += e; continue; }
            bpart.emplace_back(i, e);
        }
        if (v_exp < a_len) {
            if (why) *why = "monomial " + mono_to_string(m, *master()) +
                            " has more line slots than copies of v";
            return false;
        }
        auto key = std::make_pair(v_exp, apart);
        auto it = groups.find(key);
        if (it == groups.end()) it = groups.emplace(key, GradedPoly(master())).first;
        it->second.add_term(bpart, c);
    }
    for (auto& [key, coeff] : groups) {
        if (!lazard_.in_lattice(coeff)) {
            if (why) *why = "coefficient of v^" + std::to_string(key.first) + " " +
                            mono_to_string(key.second, *master()) +
                            " lies outside the Lazard lattice: " + coeff.to_string();
            return false;
        }
    }
    return true;
}

const MRing::DeltaLattice& MRing::delta_lattice(int degree) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = delta_cache_.find(degree);
        if (it != delta_cache_.end()) return it->second;
    }
    DeltaLattice dl;
    for (int j = 0; j <= degree; ++j) {
        GradedPoly dj = delta(va(j));
        if (dj.is_zero()) continue;
        int e = degree - j;
        if (e == 0) {
            dl.provenance.emplace_back(j, Partition{});
            dl.generators.push_back(dj);
            continue;
        }
        const auto& basis = lazard_.lattice_basis(e);
        for (std::size_t t = 0; t < basis.betas.size(); ++t) {
            dl.provenance.emplace_back(j, basis.betas[t]);
            dl.generators.push_back(dj * basis.rows[t]);
        }
    }
    for (auto& g : dl.generators) dl.columns.intern(g);
    std::vector<std::vector<BigInt>> mat;
    for (auto& g : dl.generators) mat.push_back(dl.columns.vectorize(g));
    dl.solver = LatticeSolver(std::move(mat));
    std::lock_guard<std::mutex> lock(mu_);
    return delta_cache_.emplace(degree, std::move(dl)).first->second;
}

MembershipResult MRing::delta_image_membership(const GradedPoly& p) const {
    MembershipResult res;
    res.member = true;
    for (auto& [deg, part] : p.homogeneous_parts()) {
        int d = -deg;
        if (d < 0) {
            res.member = false;
            res.residual = "component of positive degree " + std::to_string(deg);
            return res;
        }
        const DeltaLattice& dl = delta_lattice(d);
        auto vec = dl.columns.try_vectorize(part);
        std::optional<std::vector<BigInt>> sol;
        if (vec) sol = dl.solver.solve(*vec);
        if (!sol) {
            res.member = false;
            res.residual = part.to_string();
            return res;
        }
        for (std::size_t i = 0; i < sol->size(); ++i)
            if ((*sol)[i] != 0)
                res.certificate.emplace_back(dl.provenance[i].first, dl.provenance[i].second,
                                             (*sol)[i]);
    }
    return res;
}

GradedPoly MRing::base_class(const GradedPoly& melem) const {
    GradedPoly out(master());
    for (auto& [m, c] : melem.terms()) {
        bool kill = false;
        Mono rest;
        for (auto& [i, e] : m) {
            if (i == v_) continue;
            if (is_a_symbol(i)) { kill = true; break; }
            rest.emplace_back(i, e);
        }
        if (!kill) out.add_term(rest, c);
    }
    return out;
}

}  // namespace cobinv
