#include "cobinv/json_io.hpp"

#include <json.hpp>

namespace cobinv {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON input");
    return j;
}

ordered_json poly_json(const GradedPoly& p) {
    ordered_json vars = ordered_json::array();
    const Alphabet& alpha = *p.alphabet();
    for (const Symbol& s : alpha.symbols())
        vars.push_back(ordered_json::array({s.name, s.degree, s.laurent}));
    ordered_json terms = ordered_json::array();
    for (auto& [m, c] : p.terms()) {
        std::vector<int> dense(alpha.size(), 0);
        for (auto& [i, e] : m) dense[i] = e;
        terms.push_back(ordered_json::array({dense, to_string(c)}));
    }
    ordered_json out;
    out["vars"] = std::move(vars);
    out["terms"] = std::move(terms);
    return out;
}

GradedPoly poly_from(const ordered_json& j, const AlphabetPtr& target) {
    if (!j.contains("vars") || !j.contains("terms")) throw ParseError("polynomial needs vars/terms");
    std::vector<Symbol> syms;
    for (auto& v : j["vars"])
        syms.push_back({v.at(0).get<std::string>(), v.at(1).get<int>(), v.at(2).get<bool>()});
    AlphabetPtr own = make_alphabet(syms);
    GradedPoly p(own);
    for (auto& t : j["terms"]) {
        auto dense = t.at(0).get<std::vector<int>>();
        if (dense.size() != syms.size()) throw ParseError("exponent row length mismatch");
        Mono m;
        for (std::size_t i = 0; i < dense.size(); ++i)
            if (dense[i] != 0) m.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
        p.add_term(m, BigInt(t.at(1).get<std::string>()));
    }
    if (!target) return p;
    return p.convert(target);
}

// Degree-one elements are stored as {generator name: coefficient}.
ordered_json linear_chow_json(const ChowPresentation& pres, const GradedPoly& c1) {
    ordered_json out = ordered_json::object();
    GradedPoly reduced = pres.normalize(c1);
    for (auto& [m, c] : reduced.terms()) {
        if (m.size() != 1 || m[0].second != 1)
            throw Error("normal-bundle data must be linear in the generators");
        out[pres.alphabet()->at(m[0].first).name] = static_cast<long>(c);
    }
    return out;
}

GradedPoly linear_chow_from(const ordered_json& j, const ChowPresentation& pres) {
    GradedPoly out(pres.alphabet());
    for (auto& [name, coeff] : j.items()) {
        auto idx = pres.alphabet()->find(name);
        if (!idx) throw ParseError("unknown generator " + name);
        out.add_term(Mono{{static_cast<std::uint32_t>(*idx), 1}}, coeff.get<long>());
    }
    return out;
}

ordered_json variety_json(const Variety& v) {
    ordered_json out;
    // Milnor hypersurfaces carry their parameters in the name.
    if (v.name.size() > 2 && v.name.rfind("H_{", 0) == 0) {
        auto comma = v.name.find(',');
        out["type"] = "milnor";
        out["m"] = std::stoi(v.name.substr(3, comma - 3));
        out["n"] = std::stoi(v.name.substr(comma + 1, v.name.size() - comma - 2));
        return out;
    }
    if (!v.factors.empty()) {
        out["type"] = "product";
        ordered_json factors = ordered_json::array();
        for (auto& f : v.factors) factors.push_back(variety_json(*f));
        out["factors"] = std::move(factors);
        return out;
    }
    if (v.base) {
        out["type"] = "pbundle";
        out["base"] = variety_json(*v.base);
        out["rank"] = v.fiber_rank;
        ordered_json lines = ordered_json::array();
        for (auto& [k, c1] : v.fiber_bundle.lines)
            lines.push_back(ordered_json::array({k, linear_chow_json(*v.base->pres, c1)}));
        out["lines"] = std::move(lines);
        return out;
    }
    out["type"] = "Pn";
    out["n"] = v.dim;
    return out;
}

VarietyPtr variety_from(const ordered_json& j, const FglContext& fgl) {
    std::string type = j.at("type").get<std::string>();
    if (type == "Pn") return make_projective_space(fgl, j.at("n").get<int>());
    if (type == "point") return make_point(fgl);
    if (type == "milnor") return make_milnor(fgl, j.at("m").get<int>(), j.at("n").get<int>());
    if (type == "product") {
        const auto& factors = j.at("factors");
        if (factors.empty()) throw ParseError("product needs factors");
        VarietyPtr acc = variety_from(factors[0], fgl);
        for (std::size_t i = 1; i < factors.size(); ++i)
            acc = make_product(fgl, acc, variety_from(factors[i], fgl));
        return acc;
    }
    if (type == "pbundle") {
        VarietyPtr base = variety_from(j.at("base"), fgl);
        KClass E;
        for (auto& line : j.at("lines"))
            E.add(line.at(0).get<int>(), linear_chow_from(line.at(1), *base->pres));
        return make_projective_bundle(fgl, base, E, j.at("rank").get<int>());
    }
    throw ParseError("unknown variety type " + type);
}

int descriptor_dim_json(const ordered_json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "Pn") return j.at("n").get<int>();
    if (type == "point") return 0;
    if (type == "milnor") return j.at("m").get<int>() + j.at("n").get<int>() - 1;
    if (type == "product") {
        int d = 0;
        for (auto& f : j.at("factors")) d += descriptor_dim_json(f);
        return d;
    }
    if (type == "pbundle")
        return descriptor_dim_json(j.at("base")) + j.at("rank").get<int>() - 1;
    throw ParseError("unknown variety type " + type);
}

ordered_json fixture_json(const Fixture& f) {
    ordered_json out;
    out["name"] = f.name;
    out["n"] = f.n;
    ordered_json ambient = ordered_json::array();
    for (auto& [m, v] : f.ambient) ambient.push_back(ordered_json::array({m, variety_json(*v)}));
    out["ambient"] = std::move(ambient);
    ordered_json comps = ordered_json::array();
    for (auto& c : f.components) {
        ordered_json jc;
        jc["variety"] = variety_json(*c.variety);
        ordered_json lines = ordered_json::array();
        for (auto& [k, c1] : c.normal.lines)
            lines.push_back(ordered_json::array({k, linear_chow_json(*c.variety->pres, c1)}));
        jc["normal"] = std::move(lines);
        jc["multiplicity"] = c.multiplicity;
        comps.push_back(std::move(jc));
    }
    out["components"] = std::move(comps);
    if (!f.e_choice.empty()) {
        ordered_json e = ordered_json::array();
        for (auto& [i, ei] : f.e_choice) e.push_back(ordered_json::array({i, ei}));
        out["e_choice"] = std::move(e);
    }
    return out;
}

Fixture fixture_from(const ordered_json& j, const Equivariant& equ) {
    if (j.contains("catalog")) {
        std::string kind = j.at("catalog").get<std::string>();
        if (kind == "Pab") return equ.pab(j.at("a").get<int>(), j.at("b").get<int>());
        if (kind == "Hij") return equ.hij(j.at("i").get<int>(), j.at("j").get<int>());
        if (kind == "Xn") return equ.xn(j.at("n").get<int>());
        if (kind == "P1xP1-swap") return equ.p1xp1_swap();
        throw ParseError("unknown catalog kind " + kind);
    }
    if (j.contains("product")) {
        const auto& factors = j.at("product");
        if (factors.empty()) throw ParseError("product needs factors");
        Fixture acc = fixture_from(factors[0], equ);
        for (std::size_t i = 1; i < factors.size(); ++i)
            acc = equ.product(acc, fixture_from(factors[i], equ));
        return acc;
    }
    Fixture f;
    f.name = j.value("name", std::string("fixture"));
    f.n = j.at("n").get<int>();
    const FglContext& fgl = equ.mring().fgl();
    for (auto& a : j.at("ambient"))
        f.ambient.emplace_back(a.at(0).get<int>(), variety_from(a.at(1), fgl));
    for (auto& jc : j.at("components")) {
        FixtureComponent c;
        c.variety = variety_from(jc.at("variety"), fgl);
        for (auto& line : jc.at("normal"))
            c.normal.add(line.at(0).get<int>(), linear_chow_from(line.at(1), *c.variety->pres));
        c.multiplicity = jc.value("multiplicity", 1);
        if (c.variety->dim + c.normal.rank() != f.n)
            throw ParseError("component dimension plus normal rank must equal n");
        f.components.push_back(std::move(c));
    }
    return f;
}

int fixture_dim_json(const ordered_json& j) {
    if (j.contains("catalog")) {
        std::string kind = j.at("catalog").get<std::string>();
        if (kind == "Pab") return j.at("a").get<int>() + j.at("b").get<int>() + 1;
        if (kind == "Hij") return 2 * (j.at("i").get<int>() + j.at("j").get<int>()) - 1;
        if (kind == "Xn") return j.at("n").get<int>();
        if (kind == "P1xP1-swap") return 2;
        throw ParseError("unknown catalog kind " + kind);
    }
    if (j.contains("product")) {
        int d = 0;
        for (auto& f : j.at("product")) d += fixture_dim_json(f);
        return d;
    }
    return j.at("n").get<int>();
}

}  // namespace

std::string poly_to_json(const GradedPoly& p) { return poly_json(p).dump(); }

GradedPoly poly_from_json(const std::string& text) { return poly_from(parse(text), nullptr); }

GradedPoly poly_from_json_into(const std::string& text, const AlphabetPtr& target) {
    return poly_from(parse(text), target);
}

std::string variety_to_json(const Variety& v) { return variety_json(v).dump(); }

VarietyPtr variety_from_json(const std::string& text, const FglContext& fgl) {
    return variety_from(parse(text), fgl);
}

int descriptor_dim(const std::string& text) { return descriptor_dim_json(parse(text)); }

std::string fixture_to_json(const Fixture& f) { return fixture_json(f).dump(); }

Fixture fixture_from_json(const std::string& text, const Equivariant& equ) {
    return fixture_from(parse(text), equ);
}

int fixture_ambient_dim(const std::string& text) { return fixture_dim_json(parse(text)); }

std::string invclass_to_json(const InvClass& c) {
    ordered_json out;
    out["n"] = c.n;
    out["A0"] = poly_json(c.coeff(0));
    ordered_json rest = ordered_json::object();
    for (auto& [i, p] : c.A) {
        if (i == 0 || p.is_zero()) continue;
        rest[std::to_string(i)] = poly_json(p);
    }
    out["A"] = std::move(rest);
    return out.dump();
}

std::string reports_to_json(const std::vector<BoundReport>& reports) {
    ordered_json out = ordered_json::array();
    for (auto& r : reports) {
        ordered_json j;
        j["rule"] = r.rule;
        j["status"] = r.status;
        j["premise"] = r.premise;
        j["observed"] = r.observed;
        j["bound_num"] = r.bound_num;
        j["bound_den"] = r.bound_den;
        ordered_json inputs = ordered_json::object();
        for (auto& [k, v] : r.inputs) inputs[k] = v;
        j["inputs"] = std::move(inputs);
        if (!r.note.empty()) j["note"] = r.note;
        out.push_back(std::move(j));
    }
    return out.dump();
}

std::string realize_verdict_to_json(const RealizeVerdict& v) {
    ordered_json out;
    out["realizable"] = v.yes;
    out["reason"] = v.reason;
    ordered_json cert = ordered_json::array();
    for (auto& [j, beta, c] : v.certificate) {
        ordered_json e;
        e["line_index"] = j;
        e["basis_partition"] = beta;
        e["coefficient"] = to_string(c);
        cert.push_back(std::move(e));
    }
    out["certificate"] = std::move(cert);
    return out.dump();
}

}  // namespace cobinv
