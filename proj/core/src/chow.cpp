#include "cobinv/chow.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cobinv {

namespace {

// Presentation alphabets carry the generators first, then the b- and
// a-symbols of the master alphabet so that valued classes convert by name.
AlphabetPtr make_chow_alphabet(const FglContext& fgl, const std::vector<Symbol>& gens) {
    std::vector<Symbol> syms = gens;
    for (const Symbol& s : fgl.master()->symbols())
        if (s.name[0] == 'b' || s.name[0] == 'a') syms.push_back(s);
    return make_alphabet(std::move(syms));
}

std::vector<Symbol> generator_symbols(const ChowPresentation& p) {
    std::vector<Symbol> out;
    for (std::size_t g : p.generators()) out.push_back(p.alphabet()->at(g));
    return out;
}

}  // namespace

ChowPresentation::ChowPresentation(AlphabetPtr alpha, std::vector<std::size_t> gens,
                                   std::vector<int> bounds, std::vector<GradedPoly> rules,
                                   int dimension)
    : alpha_(std::move(alpha)),
      gens_(std::move(gens)),
      bounds_(std::move(bounds)),
      rules_(std::move(rules)),
      dimension_(dimension) {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (bounds_[i] > 1)
            fundamental_.emplace_back(static_cast<std::uint32_t>(gens_[i]), bounds_[i] - 1);
    std::sort(fundamental_.begin(), fundamental_.end());
}

GradedPoly ChowPresentation::gen(std::size_t level) const {
    return GradedPoly::term(alpha_, Mono{{static_cast<std::uint32_t>(gens_[level]), 1}}, 1);
}

bool ChowPresentation::is_generator(std::uint32_t sym) const {
    return std::find(gens_.begin(), gens_.end(), sym) != gens_.end();
}

int ChowPresentation::chow_degree(const Mono& m) const {
    int d = 0;
    for (auto& [i, e] : m)
        if (is_generator(i)) d += e;
    return d;
}

GradedPoly ChowPresentation::normalize_order(const GradedPoly& p, bool latest_first) const {
    GradedPoly cur = p;
    for (std::size_t step = 0; step < gens_.size(); ++step) {
        std::size_t level = latest_first ? gens_.size() - 1 - step : step;
        std::uint32_t g = static_cast<std::uint32_t>(gens_[level]);
        int bound = bounds_[level];
        bool again = true;
        while (again) {
            again = false;
            GradedPoly next(alpha_);
            for (auto& [m, c] : cur.terms()) {
                int e = 0;
                for (auto& [i, ee] : m)
                    if (i == g) e = ee;
                if (e < bound) {
                    next.add_term(m, c);
                    continue;
                }
                again = true;
                Mono rest;
                for (auto& [i, ee] : m)
                    if (i != g) rest.emplace_back(i, ee);
                if (e > bound) rest.emplace_back(g, e - bound);
                std::sort(rest.begin(), rest.end());
                next += rules_[level].scaled(c) * GradedPoly::term(alpha_, rest, 1);
            }
            cur = next;
        }
    }
    return cur;
}

GradedPoly ChowPresentation::normalize(const GradedPoly& p) const {
    return normalize_order(p, true);
}

GradedPoly ChowPresentation::normalize_reversed(const GradedPoly& p) const {
    GradedPoly cur = normalize_order(p, false);
    // Earliest-first can leave later generators unreduced when rules feed
    // across levels; run to a fixpoint.
    while (true) {
        GradedPoly next = normalize_order(cur, false);
        if (next == cur) return cur;
        cur = next;
    }
}

BigInt ChowPresentation::degree(const GradedPoly& p) const {
    GradedPoly n = normalize(p);
    BigInt out = 0;
    for (auto& [m, c] : n.terms()) {
        if (chow_degree(m) != dimension_) continue;
        if (m != fundamental_)
            throw Error("unexpected top-degree monomial " + mono_to_string(m, *alpha_));
        out = c;
    }
    return out;
}

int KClass::rank() const {
    int r = 0;
    for (auto& [k, c1] : lines) r += k;
    return r;
}

KClass KClass::negated() const {
    KClass out;
    for (auto& [k, c1] : lines) out.lines.emplace_back(-k, c1);
    return out;
}

KClass& KClass::add(int coeff, GradedPoly c1) {
    if (coeff != 0) lines.emplace_back(coeff, std::move(c1));
    return *this;
}

VarietyPtr make_point(const FglContext& fgl) {
    auto alpha = make_chow_alphabet(fgl, {});
    auto pres = std::make_shared<const ChowPresentation>(alpha, std::vector<std::size_t>{},
                                                         std::vector<int>{},
                                                         std::vector<GradedPoly>{}, 0);
    auto v = std::make_shared<Variety>();
    v->name = "pt";
    v->pres = pres;
    v->dim = 0;
    return v;
}

VarietyPtr make_projective_space(const FglContext& fgl, int n) {
    if (n < 0) throw Error("projective space of negative dimension");
    if (n == 0) {
        auto p = std::const_pointer_cast<Variety>(make_point(fgl));
        p->name = "P0";
        return p;
    }
    auto alpha = make_chow_alphabet(fgl, {{"h", 1, false}});
    std::size_t h = alpha->require("h");
    std::vector<GradedPoly> rules{GradedPoly(alpha)};
    auto pres = std::make_shared<const ChowPresentation>(
        alpha, std::vector<std::size_t>{h}, std::vector<int>{n + 1}, std::move(rules), n);
    auto v = std::make_shared<Variety>();
    v->name = "P" + std::to_string(n);
    v->pres = pres;
    v->dim = n;
    v->tangent.add(n + 1, pres->gen(0)).add(-1, pres->zero());
    return v;
}

VarietyPtr make_product(const FglContext& fgl, const VarietyPtr& a, const VarietyPtr& b) {
    // Collect generator symbols; colliding names are indexed by factor order,
    // with further suffixes when iterated products pile up.
    std::vector<Symbol> ga = generator_symbols(*a->pres), gb = generator_symbols(*b->pres);
    std::map<std::string, int> count;
    for (auto& s : ga) ++count[s.name];
    for (auto& s : gb) ++count[s.name];

    std::vector<std::pair<std::string, std::string>> ren_a, ren_b;
    std::vector<Symbol> syms;
    std::set<std::string> used;
    auto push = [&](const Symbol& s, int idx,
                    std::vector<std::pair<std::string, std::string>>& ren) {
        std::string name = count[s.name] > 1 ? s.name + std::to_string(idx) : s.name;
        int k = idx;
        while (used.count(name)) name = s.name + std::to_string(++k);
        used.insert(name);
        ren.emplace_back(s.name, name);
        syms.push_back({name, s.degree, s.laurent});
    };
    for (auto& s : ga) push(s, 1, ren_a);
    for (auto& s : gb) push(s, 2, ren_b);

    auto alpha = make_chow_alphabet(fgl, syms);
    auto rename = [&](const GradedPoly& p,
                      const std::vector<std::pair<std::string, std::string>>& ren,
                      const ChowPresentation& from) {
        GradedPoly out(alpha);
        for (auto& [m, c] : p.terms()) {
            Mono mm;
            for (auto& [i, e] : m) {
                std::string name = from.alphabet()->at(i).name;
                for (auto& [o, nn] : ren)
                    if (o == name) { name = nn; break; }
                mm.emplace_back(static_cast<std::uint32_t>(alpha->require(name)), e);
            }
            std::sort(mm.begin(), mm.end());
            out.add_term(mm, c);
        }
        return out;
    };

    std::vector<std::size_t> gens;
    std::vector<int> bounds;
    std::vector<GradedPoly> rules;
    auto absorb = [&](const VarietyPtr& v,
                      const std::vector<std::pair<std::string, std::string>>& ren) {
        for (std::size_t l = 0; l < v->pres->generators().size(); ++l) {
            std::string name = v->pres->alphabet()->at(v->pres->generators()[l]).name;
            for (auto& [o, nn] : ren)
                if (o == name) { name = nn; break; }
            gens.push_back(alpha->require(name));
            bounds.push_back(v->pres->bound(l));
            GradedPoly reduced = v->pres->normalize(v->pres->gen(l).pow(v->pres->bound(l)));
            rules.push_back(rename(reduced, ren, *v->pres));
        }
    };
    absorb(a, ren_a);
    absorb(b, ren_b);

    auto pres = std::make_shared<const ChowPresentation>(alpha, gens, bounds, rules,
                                                         a->dim + b->dim);
    auto v = std::make_shared<Variety>();
    v->name = a->name + "x" + b->name;
    v->pres = pres;
    v->dim = a->dim + b->dim;
    for (auto& [k, c1] : a->tangent.lines) v->tangent.add(k, rename(c1, ren_a, *a->pres));
    for (auto& [k, c1] : b->tangent.lines) v->tangent.add(k, rename(c1, ren_b, *b->pres));
    v->factors = {a, b};
    v->factor_renames = {ren_a, ren_b};
    return v;
}

GradedPoly pull_to_product(const Variety& prod, std::size_t which, const GradedPoly& p) {
    const auto& ren = prod.factor_renames.at(which);
    const auto& from = *prod.factors.at(which)->pres;
    GradedPoly out(prod.pres->alphabet());
    for (auto& [m, c] : p.terms()) {
        Mono mm;
        for (auto& [i, e] : m) {
            std::string name = from.alphabet()->at(i).name;
            for (auto& [o, nn] : ren)
                if (o == name) { name = nn; break; }
            mm.emplace_back(static_cast<std::uint32_t>(prod.pres->alphabet()->require(name)), e);
        }
        std::sort(mm.begin(), mm.end());
        out.add_term(mm, c);
    }
    return out;
}

VarietyPtr make_projective_bundle(const FglContext& fgl, const VarietyPtr& base,
                                  const KClass& bundle, int rank, const std::string& fiber) {
    if (rank < 1) throw Error("projective bundle needs rank >= 1");
    if (bundle.rank() != rank) throw Error("bundle rank does not match its line decomposition");
    if (base->pres->alphabet()->find(fiber))
        throw Error("fiber class name collides with a base generator");

    std::vector<Symbol> syms = generator_symbols(*base->pres);
    syms.push_back({fiber, 1, false});
    auto alpha = make_chow_alphabet(fgl, syms);

    auto lift = [&](const GradedPoly& p) { return p.convert(alpha); };

    // Total Chern class of the bundle, exact in the nilpotent base classes.
    const AlphabetPtr& balpha = base->pres->alphabet();
    GradedPoly total(balpha, 1);
    for (auto& [k, c1] : bundle.lines) {
        GradedPoly c = base->pres->normalize(c1);
        if (k >= 0) {
            total = base->pres->normalize(total * (GradedPoly(balpha, 1) + c).pow(k));
        } else {
            // (1 + c)^{-1} = sum (-c)^j, finite by nilpotency.
            GradedPoly inv(balpha, 1), p(balpha, 1);
            while (true) {
                p = base->pres->normalize(p * (-c));
                if (p.is_zero()) break;
                inv += p;
            }
            total = base->pres->normalize(total * inv.pow(-k));
        }
    }
    GradedPoly total_lifted = lift(total);

    std::vector<std::size_t> gens;
    std::vector<int> bounds;
    std::vector<GradedPoly> rules;
    for (std::size_t l = 0; l < base->pres->generators().size(); ++l) {
        std::string name = base->pres->alphabet()->at(base->pres->generators()[l]).name;
        gens.push_back(alpha->require(name));
        bounds.push_back(base->pres->bound(l));
        rules.push_back(lift(base->pres->normalize(base->pres->gen(l).pow(base->pres->bound(l)))));
    }
    std::size_t xi = alpha->require(fiber);
    gens.push_back(xi);
    bounds.push_back(rank);

    // xi^r = -(c_1 xi^{r-1} + ... + c_r).
    GradedPoly rel(alpha);
    auto parts = total_lifted.homogeneous_parts();
    for (auto& [d, cj] : parts) {
        int j = d;  // generators have degree +1
        if (j < 1 || j > rank) continue;
        Mono m;
        if (rank - j > 0) m.emplace_back(static_cast<std::uint32_t>(xi), rank - j);
        rel -= cj * GradedPoly::term(alpha, m, 1);
    }
    rules.push_back(rel);

    auto pres = std::make_shared<const ChowPresentation>(alpha, gens, bounds, rules,
                                                         base->dim + rank - 1);
    auto v = std::make_shared<Variety>();
    std::ostringstream nm;
    nm << "P(" << base->name << ";r" << rank << ")";
    v->name = nm.str();
    v->pres = pres;
    v->dim = base->dim + rank - 1;
    v->base = base;
    v->fiber_level = gens.size() - 1;
    v->fiber_rank = rank;
    for (auto& [k, c1] : bundle.lines) v->fiber_bundle.add(k, lift(base->pres->normalize(c1)));

    // T = pi^*E (x) O(1) - 1 + pi^*T_base.
    GradedPoly xi_poly = pres->gen(v->fiber_level);
    for (auto& [k, c1] : v->fiber_bundle.lines) v->tangent.add(k, c1 + xi_poly);
    v->tangent.add(-1, pres->zero());
    for (auto& [k, c1] : base->tangent.lines) v->tangent.add(k, lift(c1));
    return v;
}

VarietyPtr make_milnor(const FglContext& fgl, int m, int n) {
    if (m < 0 || n < m || n < 1) throw Error("Milnor hypersurface needs 0 <= m <= n, n >= 1");
    VarietyPtr base = make_projective_space(fgl, m);
    KClass E;
    E.add(n + 1, base->pres->zero());
    E.add(-1, m > 0 ? base->pres->gen(0) : base->pres->zero());
    if (m == 0) {
        // U_0 is trivial of rank 0; the bundle is plainly trivial of rank n.
        E.lines.clear();
        E.add(n, base->pres->zero());
    }
    auto v = std::const_pointer_cast<Variety>(make_projective_bundle(fgl, base, E, n));
    v->name = "H_{" + std::to_string(m) + "," + std::to_string(n) + "}";
    return v;
}

Mono b_mono(const Alphabet& alpha, const Partition& p) {
    Mono m;
    for (int part : p) {
        std::uint32_t i = static_cast<std::uint32_t>(alpha.require("b" + std::to_string(part)));
        bool found = false;
        for (auto& [j, e] : m)
            if (j == i) { ++e; found = true; break; }
        if (!found) m.emplace_back(i, 1);
    }
    std::sort(m.begin(), m.end());
    return m;
}

GradedPoly cf_class(const Variety& X, const KClass& E) {
    const AlphabetPtr& alpha = X.pres->alphabet();
    GradedPoly out(alpha, 1);
    for (auto& [k, c1] : E.lines) {
        GradedPoly c = X.pres->normalize(c1);
        // P(L) = sum c1^i b_i, a finite sum by nilpotency.
        GradedPoly pl(alpha, 1);
        GradedPoly p(alpha, 1);
        for (int i = 1; i <= X.dim; ++i) {
            p = X.pres->normalize(p * c);
            if (p.is_zero()) break;
            pl += p * GradedPoly::symbol(alpha, "b" + std::to_string(i));
        }
        GradedPoly factor = pl;
        if (k < 0) {
            GradedPoly nil = pl - GradedPoly(alpha, 1);
            GradedPoly inv(alpha, 1), q(alpha, 1);
            while (true) {
                q = X.pres->normalize(q * (-nil));
                if (q.is_zero()) break;
                inv += q;
            }
            factor = inv;
        }
        for (int t = 0; t < (k >= 0 ? k : -k); ++t) out = X.pres->normalize(out * factor);
    }
    return out;
}

GradedPoly chern_coeff(const Variety& X, const GradedPoly& cf, const Partition& alpha) {
    Mono target = b_mono(*X.pres->alphabet(), alpha);
    GradedPoly out(X.pres->alphabet());
    for (auto& [m, c] : cf.terms()) {
        Mono bpart, cpart;
        for (auto& [i, e] : m) {
            if (X.pres->is_generator(i)) cpart.emplace_back(i, e);
            else bpart.emplace_back(i, e);
        }
        if (bpart == target) out.add_term(cpart, c);
    }
    return out;
}

BigInt chern_number(const FglContext& fgl, const Variety& X, const Partition& alpha) {
    GradedPoly cf = cf_class(X, X.tangent.negated());
    return X.pres->degree(chern_coeff(X, cf, alpha));
}

GradedPoly fund_class_of(const FglContext& fgl, const Variety& X, const GradedPoly& u) {
    GradedPoly cf = cf_class(X, X.tangent.negated());
    GradedPoly w = X.pres->normalize(cf * u);
    GradedPoly out(fgl.master());
    for (auto& [m, c] : w.terms()) {
        Mono bpart, cpart;
        for (auto& [i, e] : m) {
            if (X.pres->is_generator(i)) cpart.emplace_back(i, e);
            else bpart.emplace_back(i, e);
        }
        if (X.pres->chow_degree(cpart) != X.dim) continue;
        if (cpart != X.pres->fundamental())
            throw Error("unexpected top-degree monomial in pushforward");
        Mono mm;
        for (auto& [i, e] : bpart)
            mm.emplace_back(
                static_cast<std::uint32_t>(fgl.master()->require(X.pres->alphabet()->at(i).name)),
                e);
        std::sort(mm.begin(), mm.end());
        out.add_term(mm, c);
    }
    return out;
}

GradedPoly twisted_c1(const FglContext& fgl, const Variety& X, const GradedPoly& c1) {
    auto norm = [&X](const GradedPoly& p) { return X.pres->normalize(p); };
    return eval_at_nilpotent(fgl.exp_series(), X.pres->normalize(c1), norm);
}

GradedPoly relative_twist_factor(const FglContext& fgl, const Variety& PE) {
    if (!PE.base) throw Error("variety is not a projective bundle level");
    KClass rel_tangent;
    GradedPoly xi_poly = PE.pres->gen(PE.fiber_level);
    for (auto& [k, c1] : PE.fiber_bundle.lines) rel_tangent.add(k, c1 + xi_poly);
    rel_tangent.add(-1, PE.pres->zero());
    return cf_class(PE, rel_tangent.negated());
}

GradedPoly twisted_push_ready(const Variety& PE, const GradedPoly& twist, const GradedPoly& u) {
    GradedPoly w = PE.pres->normalize(twist * u);
    std::uint32_t xi = static_cast<std::uint32_t>(PE.pres->generators()[PE.fiber_level]);
    GradedPoly slice = w.coefficient_of(xi, PE.fiber_rank - 1);
    return slice.convert(PE.base->pres->alphabet());
}

GradedPoly twisted_push_level(const FglContext& fgl, const Variety& PE, const GradedPoly& u) {
    return twisted_push_ready(PE, relative_twist_factor(fgl, PE), u);
}

}  // namespace cobinv
