// Command-line front end: exact cobordism computations for involutions.
// JSON in, JSON out; outputs are deterministic for a fixed configuration.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "cobinv/json_io.hpp"

using namespace cobinv;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitViolated = 1;
constexpr int kExitParse = 2;
constexpr int kExitWindow = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Session {
    explicit Session(int degree)
        : cfg(Config::with_degree(degree)),
          fgl(cfg),
          laz(fgl),
          mring(fgl, laz),
          equ(mring),
          ver(equ) {}
    Config cfg;
    FglContext fgl;
    LazardContext laz;
    MRing mring;
    Equivariant equ;
    Verdicts ver;
};

int base_degree(int cli_degree) {
    if (cli_degree > 0) return cli_degree;
    if (const char* env = std::getenv("COBINV_DEGREE")) return std::atoi(env);
    return 8;
}

// The window has to cover the input; even-dimensional inputs can need the
// generator one step above their dimension.
std::unique_ptr<Session> session_for(int cli_degree, int input_dim) {
    int d = std::max(base_degree(cli_degree), input_dim + 1);
    return std::make_unique<Session>(d);
}

// Expansions reach the generator indexed one past twice the fixed-locus
// dimension, so fixtures size their window from both dimensions.
std::pair<std::unique_ptr<Session>, Fixture> session_for_fixture(int cli_degree,
                                                                 const std::string& text) {
    auto s = session_for(cli_degree, fixture_ambient_dim(text));
    Fixture f = fixture_from_json(text, s->equ);
    int d = f.fixed_dim().value_or(0);
    if (2 * d + 1 > s->cfg.catalog_max) {
        s = session_for(cli_degree, std::max(fixture_ambient_dim(text), 2 * d));
        f = fixture_from_json(text, s->equ);
    }
    return {std::move(s), std::move(f)};
}

ordered_json chern_table(Session& s, const VarietyPtr& X) {
    ordered_json table = ordered_json::object();
    for (auto& alpha : partitions_of(X->dim))
        table[partition_to_string(alpha)] =
            to_string(chern_number(s.fgl, *X, alpha));
    return table;
}

Partition parse_alpha(const std::string& text) {
    Partition alpha;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) alpha.push_back(std::stoi(item));
    std::sort(alpha.begin(), alpha.end(), std::greater<int>());
    return alpha;
}

void emit(const ordered_json& j, const std::string& output) {
    if (output == "table") {
        // Minimal flat rendering for terminals.
        std::function<void(const ordered_json&, std::string)> walk =
            [&](const ordered_json& node, std::string prefix) {
                if (node.is_object()) {
                    for (auto& [k, v] : node.items())
                        walk(v, prefix.empty() ? k : prefix + "." + k);
                } else if (node.is_array()) {
                    int i = 0;
                    for (auto& v : node) walk(v, prefix + "[" + std::to_string(i++) + "]");
                } else {
                    std::cout << prefix << "\t" << node.dump() << "\n";
                }
            };
        walk(j, "");
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cobordism of involutions"};
    app.require_subcommand(1);

    int degree = 0;
    std::string output = "json";
    app.add_option("--degree", degree, "degree window override (default 8 or COBINV_DEGREE)");
    app.add_option("--output", output, "json|table")->check(CLI::IsMember({"json", "table"}));

    std::string path, alpha_text = "", which = "euler", suite = "all";
    long carg_n = 0, carg_a = 0, carg_b = 0, carg_c = 0;
    int catalog_max = 7;
    std::string emit_dir;

    auto* cls = app.add_subcommand("class", "cobordism class and Chern numbers of a variety");
    cls->add_option("descriptor", path)->required();

    auto* chern = app.add_subcommand("chern-numbers", "Chern numbers of a variety");
    chern->add_option("descriptor", path)->required();
    chern->add_option("--alpha", alpha_text, "partition, e.g. 2,1");

    auto* bclass = app.add_subcommand("bundle-class", "normal-bundle class of a fixture");
    bclass->add_option("fixture", path)->required();

    auto* dec = app.add_subcommand("decompose", "canonical expansion of a fixture");
    dec->add_option("fixture", path)->required();

    auto* real = app.add_subcommand("realizable", "normal-bundle membership of a class");
    real->add_option("melem", path)->required();

    auto* gen = app.add_subcommand("genus", "genus of a variety class");
    gen->add_option("descriptor", path)->required();
    gen->add_option("--which", which)->check(CLI::IsMember({"euler", "psi"}));

    auto* curve = app.add_subcommand("curve-check", "realizability over curve data");
    curve->add_option("--n", carg_n)->required();
    curve->add_option("--a", carg_a)->required();
    curve->add_option("--b", carg_b)->required();
    curve->add_option("--c", carg_c)->required();

    auto* verify = app.add_subcommand("verify", "run the verification suites on a fixture");
    verify->add_option("fixture", path)->required();
    verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "bounds", "examples"}));

    auto* cat = app.add_subcommand("catalog", "emit the shipped fixture corpus");
    cat->add_option("--max", catalog_max, "largest generator index");
    cat->add_option("--dir", emit_dir, "write one JSON file per fixture");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cls) {
            auto s = session_for(degree, descriptor_dim(slurp(path)));
            VarietyPtr X = variety_from_json(slurp(path), s->fgl);
            ordered_json out;
            out["name"] = X->name;
            out["dim"] = X->dim;
            out["class"] = ordered_json::parse(poly_to_json(s->laz.class_of(X)));
            out["chern_numbers"] = chern_table(*s, X);
            emit(out, output);
        } else if (*chern) {
            auto s = session_for(degree, descriptor_dim(slurp(path)));
            VarietyPtr X = variety_from_json(slurp(path), s->fgl);
            ordered_json out;
            if (!alpha_text.empty()) {
                Partition alpha = parse_alpha(alpha_text);
                out[partition_to_string(alpha)] =
                    to_string(chern_number(s->fgl, *X, alpha));
            } else {
                out = chern_table(*s, X);
            }
            emit(out, output);
        } else if (*bclass) {
            auto [s, f] = session_for_fixture(degree, slurp(path));
            emit(ordered_json::parse(poly_to_json(s->equ.nu(f))), output);
        } else if (*dec) {
            auto [s, f] = session_for_fixture(degree, slurp(path));
            emit(ordered_json::parse(invclass_to_json(s->equ.decompose(f))), output);
        } else if (*real) {
            GradedPoly raw = poly_from_json(slurp(path));
            int dim = raw.dim().value_or(0);
            auto s = session_for(degree, dim);
            GradedPoly m = raw.convert(s->fgl.master());
            emit(ordered_json::parse(realize_verdict_to_json(s->equ.is_normal_bundle_class(m))),
                 output);
        } else if (*gen) {
            auto s = session_for(degree, descriptor_dim(slurp(path)));
            VarietyPtr X = variety_from_json(slurp(path), s->fgl);
            auto g = which == "euler" ? LazardContext::Genus::euler : LazardContext::Genus::psi;
            ordered_json out;
            out["which"] = which;
            out["value"] = to_string(LazardContext::genus(s->laz.class_of(X), g));
            emit(out, output);
        } else if (*curve) {
            Session s(8);
            CurveVerdict v = s.ver.curve_table(static_cast<int>(carg_n), carg_a, carg_b, carg_c);
            ordered_json out;
            out["realizable"] = v.yes;
            out["condition"] = v.condition;
            emit(out, output);
        } else if (*verify) {
            auto [s, f] = session_for_fixture(degree, slurp(path));
            ordered_json out = ordered_json::object();
            bool violated = false;
            if (suite == "all" || suite == "bounds") {
                auto reports = s->ver.bound_suite(f);
                out["bounds"] = ordered_json::parse(reports_to_json(reports));
                for (auto& r : reports) violated |= r.status == "violated";
            }
            if (suite == "all" || suite == "examples") {
                ordered_json ex;
                InvClass c = s->equ.decompose(f);
                ex["expansion"] = ordered_json::parse(invclass_to_json(c));
                ex["round_trip"] = s->equ.evaluate_invclass(c) == s->equ.nu(f);
                GradedPoly eps = s->equ.eps_mod2(c);
                GradedPoly amb = s->equ.ambient_class(f);
                GradedPoly diff = eps - amb;
                bool eps_ok = true;
                for (auto& [mm, cc] : diff.terms())
                    if (cc % 2 != 0) eps_ok = false;
                ex["ambient_mod2"] = eps_ok;
                ex["fixed_matches"] = s->equ.phi_fixed(c) == s->equ.fixed_class(f);
                violated |= !ex["round_trip"].get<bool>() || !eps_ok ||
                            !ex["fixed_matches"].get<bool>();
                out["examples"] = std::move(ex);
            }
            emit(out, output);
            return violated ? kExitViolated : 0;
        } else if (*cat) {
            Session s(std::max(8, catalog_max + 1));
            std::vector<std::pair<std::string, Fixture>> all;
            auto tag = [](std::string base, std::initializer_list<int> xs) {
                for (int x : xs) base += "_" + std::to_string(x);
                return base;
            };
            for (int a = 0; a <= 5; ++a)
                for (int b = 0; b <= a && a + b <= 5; ++b)
                    all.emplace_back(tag("pab", {a, b}), s.equ.pab(a, b));
            for (int i = 1; i <= 2; ++i)
                for (int j = i; i + j <= 5; ++j)
                    all.emplace_back(tag("hij", {i, j}), s.equ.hij(i, j));
            for (int n = 1; n <= catalog_max; ++n)
                all.emplace_back(tag("x", {n}), s.equ.xn(n));
            all.emplace_back("p1xp1_swap", s.equ.p1xp1_swap());
            // Products realizing the extremal cases of the bound suite.
            auto power = [&](int n, int e) {
                Fixture acc = s.equ.xn(n);
                for (int t = 1; t < e; ++t) acc = s.equ.product(acc, s.equ.xn(n));
                return acc;
            };
            all.emplace_back("sharp_x1_x3", s.equ.product(s.equ.xn(1), s.equ.xn(3)));
            all.emplace_back("sharp_x1x1_x3", s.equ.product(power(1, 2), s.equ.xn(3)));
            all.emplace_back("sharp_x1_x5", s.equ.product(s.equ.xn(1), s.equ.xn(5)));
            all.emplace_back("sharp_x2x2", power(2, 2));
            all.emplace_back("sharp_x2x2x2", power(2, 3));
            all.emplace_back("sharp_x1_x2x2", s.equ.product(s.equ.xn(1), power(2, 2)));
            all.emplace_back("sharp_x1_x4", s.equ.product(s.equ.xn(1), s.equ.xn(4)));
            all.emplace_back("sharp_x1x1_x4", s.equ.product(power(1, 2), s.equ.xn(4)));
            if (!emit_dir.empty()) {
                std::filesystem::create_directories(emit_dir);
                for (auto& [fname, f] : all) {
                    std::ofstream o(emit_dir + "/" + fname + ".json");
                    o << ordered_json::parse(fixture_to_json(f)).dump(2) << "\n";
                }
                // Variety descriptors for the class and genus commands.
                for (int nn = 0; nn <= 6; ++nn) {
                    std::ofstream o(emit_dir + "/p" + std::to_string(nn) + ".json");
                    ordered_json j;
                    j["type"] = "Pn";
                    j["n"] = nn;
                    o << j.dump(2) << "\n";
                }
                for (int m = 1; m <= 3; ++m)
                    for (int nn = m; m + nn <= 7; ++nn) {
                        std::ofstream o(emit_dir + "/h_" + std::to_string(m) + "_" +
                                        std::to_string(nn) + ".json");
                        ordered_json j;
                        j["type"] = "milnor";
                        j["m"] = m;
                        j["n"] = nn;
                        o << j.dump(2) << "\n";
                    }
            } else {
                ordered_json out = ordered_json::array();
                for (auto& [fname, f] : all) {
                    ordered_json jf = ordered_json::parse(fixture_to_json(f));
                    jf["file"] = fname;
                    out.push_back(std::move(jf));
                }
                emit(out, output);
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const WindowError& e) {
        std::cerr << "window exhausted: " << e.what() << "\n";
        return kExitWindow;
    } catch (const NotInLattice& e) {
        std::cerr << "outside the lattice: " << e.what() << " residual " << e.residual << "\n";
        return kExitWindow;
    } catch (const DivisibilityError& e) {
        std::cerr << "divisibility failure at " << e.term << ": " << e.what() << "\n";
        return kExitWindow;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return 0;
}
