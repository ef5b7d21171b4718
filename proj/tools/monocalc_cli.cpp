// Command-line front end: validates algebra tables, prints characteristic
// systems, checks triples, evaluates monogenic functions and runs the
// verification harness.  Exit codes: 0 pass, 1 verification failure,
// 2 input error.
#include "monocalc/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace monocalc;

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CartanTable resolve_table(const std::string& preset, const std::string& algebra_path) {
    if (!preset.empty() && !algebra_path.empty())
        throw InputError("give either --preset or --algebra, not both");
    if (!preset.empty()) return preset_table(preset);
    if (!algebra_path.empty()) return table_from_json(load_json(algebra_path));
    throw InputError("an algebra is required (--preset or --algebra)");
}

PdeSpec resolve_pde(const std::string& pde_arg) {
    if (pde_arg.empty() || pde_arg == "laplace") return PdeSpec::laplace();
    return pde_from_json(load_json(pde_arg));
}

ParsedTriple resolve_triple(const std::string& preset, const std::string& triple_path) {
    if (!triple_path.empty()) return triple_from_json(load_json(triple_path));
    if (!preset.empty()) {
        ParsedTriple pt;
        pt.exact = preset_triple_exact(preset);
        pt.value = to_complex_triple(*pt.exact);
        return pt;
    }
    throw InputError("a triple is required (--triple, or a preset with a fixture)");
}

Point3 parse_point(const std::string& s) {
    Point3 p;
    if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &p.x, &p.y, &p.z) != 3)
        throw InputError("--point expects x,y,z");
    return p;
}

void write_json_report(const std::string& path, const Json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

double max_norm(const AlgElem& e) { return elem_norm(e); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"monocalc: monogenic-function calculus in commutative algebras"};
    app.require_subcommand(1);

    std::string preset, algebra_path, pde_arg, triple_path, bundle_path, json_path, point_arg;
    int project_u = 0, grid = 100;
    unsigned seed = 20240901;
    double h = 1e-3, tol_override = 0.0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--preset", preset, "preset algebra: A32 | B | A53 | A4");
        cmd->add_option("--algebra", algebra_path, "algebra JSON file");
        cmd->add_option("--json", json_path, "write a JSON report to this path");
    };

    auto* cmd_validate = app.add_subcommand("validate", "check a Cartan multiplication table");
    add_common(cmd_validate);

    auto* cmd_charsys = app.add_subcommand("charsys", "print the characteristic system");
    add_common(cmd_charsys);
    cmd_charsys->add_option("--pde", pde_arg, "'laplace' or a PDE JSON file");
    cmd_charsys->add_option("--project", project_u, "project onto idempotent u");

    auto* cmd_check = app.add_subcommand("check-triple", "check a triple against the characteristic system");
    add_common(cmd_check);
    cmd_check->add_option("--pde", pde_arg, "'laplace' or a PDE JSON file");
    cmd_check->add_option("--triple", triple_path, "triple JSON file");

    auto* cmd_eval = app.add_subcommand("eval", "evaluate a monogenic function at a point");
    add_common(cmd_eval);
    cmd_eval->add_option("--triple", triple_path, "triple JSON file");
    cmd_eval->add_option("--bundle", bundle_path, "function bundle JSON file");
    cmd_eval->add_option("--point", point_arg, "evaluation point x,y,z")->required();

    auto* cmd_verify = app.add_subcommand("verify", "finite-difference verification");
    cmd_verify->set_help_flag("--help", "print help");
    add_common(cmd_verify);
    cmd_verify->add_option("--pde", pde_arg, "also check this PDE's residual");
    cmd_verify->add_option("--triple", triple_path, "triple JSON file");
    cmd_verify->add_option("--bundle", bundle_path, "function bundle JSON file");
    cmd_verify->add_option("--grid", grid, "number of seeded sample points");
    cmd_verify->add_option("--h", h, "finite-difference step");
    cmd_verify->add_option("--tol", tol_override, "acceptance tolerance override");
    cmd_verify->add_option("--seed", seed, "sampling seed");

    auto* cmd_decompose = app.add_subcommand("decompose", "cylinder decomposition check");
    add_common(cmd_decompose);
    cmd_decompose->add_option("--triple", triple_path, "triple JSON file");
    cmd_decompose->add_option("--bundle", bundle_path, "function bundle JSON file");
    cmd_decompose->add_option("--grid", grid, "number of seeded sample points");
    cmd_decompose->add_option("--seed", seed, "sampling seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_validate->parsed()) {
            auto table = resolve_table(preset, algebra_path);
            auto violations = validate_table(table);
            Json jrep;
            jrep["violations"] = Json::array();
            for (const auto& v : violations) {
                std::cout << "violation: " << v.message << "\n";
                jrep["violations"].push_back(v.message);
            }
            jrep["valid"] = violations.empty();
            write_json_report(json_path, jrep);
            if (violations.empty()) {
                std::cout << "table is valid (n=" << table.n << ", m=" << table.m << ")\n";
                return 0;
            }
            return 1;
        }

        if (cmd_charsys->parsed()) {
            auto table = resolve_table(preset, algebra_path);
            auto pde = resolve_pde(pde_arg);
            CharSystem sys = project_u > 0 ? projected_char_system(table, pde, project_u)
                                           : symbolic_char_expand(table, pde);
            std::cout << sys.text();
            Json jrep;
            jrep["equations"] = Json::array();
            for (const auto& eq : sys.equations) jrep["equations"].push_back(eq.str(sys.n));
            write_json_report(json_path, jrep);
            return 0;
        }

        if (cmd_check->parsed()) {
            auto table = resolve_table(preset, algebra_path);
            auto pde = resolve_pde(pde_arg);
            auto pt = resolve_triple(preset, triple_path);
            Json jrep;
            bool ok = true;
            double max_resid = 0.0;

            auto full = symbolic_char_expand(table, pde);
            auto residuals =
                evaluate_system(full, assignment_from_triple(pt.value.a, pt.value.b));
            for (const auto& r : residuals) max_resid = std::max(max_resid, std::abs(r));
            std::cout << "full characteristic system residual: " << max_resid << "\n";

            jrep["per_u"] = Json::array();
            if (pt.exact) {
                auto rep = verify_reduced_triples(table, pde, *pt.exact);
                ok = rep.hypothesis_ok;
                for (int u = 1; u <= table.m; ++u) {
                    const auto& res = rep.residuals[static_cast<std::size_t>(u - 1)];
                    bool zero = true;
                    for (const auto& c : res) zero = zero && c.is_zero();
                    ok = ok && zero;
                    auto l3 = reduced_independence(table, pt.value, u);
                    std::cout << "u=" << u << ": reduced residual "
                              << (zero ? "exactly 0" : "NONZERO") << ", independent "
                              << (l3.independent ? "true" : "false") << " (branch " << l3.branch
                              << ")\n";
                    jrep["per_u"].push_back({{"u", u},
                                             {"residual_norm", zero ? 0.0 : 1.0},
                                             {"branch", l3.branch},
                                             {"independent", l3.independent}});
                }
            } else {
                auto rep = verify_reduced_triples(table, pde, pt.value);
                ok = rep.hypothesis_ok;
                for (int u = 1; u <= table.m; ++u) {
                    double rn = max_norm(rep.residuals[static_cast<std::size_t>(u - 1)]);
                    ok = ok && rn <= 1e-10;
                    auto l3 = reduced_independence(table, pt.value, u);
                    std::cout << "u=" << u << ": reduced residual " << rn << ", independent "
                              << (l3.independent ? "true" : "false") << " (branch " << l3.branch
                              << ")\n";
                    jrep["per_u"].push_back({{"u", u},
                                             {"residual_norm", rn},
                                             {"branch", l3.branch},
                                             {"independent", l3.independent}});
                }
            }
            jrep["full_system_residual"] = max_resid;
            jrep["pass"] = ok;
            write_json_report(json_path, jrep);
            std::cout << (ok ? "PASS" : "FAIL") << "\n";
            return ok ? 0 : 1;
        }

        if (cmd_eval->parsed()) {
            auto table = resolve_table(preset, algebra_path);
            auto pt = resolve_triple(preset, triple_path);
            MonogenicFn fn = bundle_path.empty()
                                 ? preset_bundle(preset)
                                 : bundle_from_json(load_json(bundle_path), table, pt.value);
            auto p = parse_point(point_arg);
            auto value = eval_monogenic(fn, p);
            std::cout << format_elem(value, table) << "\n";
            Json jrep;
            Json coords = Json::array();
            for (const auto& c : value) coords.push_back(Json::array({c.real(), c.imag()}));
            jrep["value"] = std::move(coords);
            write_json_report(json_path, jrep);
            return 0;
        }

        if (cmd_verify->parsed()) {
            auto table = resolve_table(preset, algebra_path);
            auto pt = resolve_triple(preset, triple_path);
            MonogenicFn fn = bundle_path.empty()
                                 ? preset_bundle(preset)
                                 : bundle_from_json(load_json(bundle_path), table, pt.value);
            FdConfig cfg;
            cfg.h = h;
            cfg.tol = tol_override > 0 ? tol_override : 1e-5;
            auto points = sample_points(grid, seed, table, fn.triple);
            auto rep = check_monogenic(fn, points, cfg);
            rep.seed = seed;
            std::cout << "monogenicity: max residual " << rep.max_residual << " (tol " << rep.tol
                      << ") -> " << (rep.pass ? "pass" : "FAIL") << "\n";
            bool ok = rep.pass;
            Json jrep = Json::array({report_to_json(rep)});
            if (!pde_arg.empty()) {
                FdConfig pcfg = cfg;
                pcfg.tol = tol_override > 0 ? tol_override : 10.0 * cfg.h * cfg.h;
                auto prep = pde_residual(fn, resolve_pde(pde_arg), points, pcfg);
                prep.seed = seed;
                std::cout << "pde residual: max " << prep.max_residual << " (tol " << prep.tol
                          << ") -> " << (prep.pass ? "pass" : "FAIL") << "\n";
                ok = ok && prep.pass;
                jrep.push_back(report_to_json(prep));
            }
            write_json_report(json_path, jrep);
            return ok ? 0 : 1;
        }

        if (cmd_decompose->parsed()) {
            auto table = resolve_table(preset, algebra_path);
            auto pt = resolve_triple(preset, triple_path);
            MonogenicFn fn = bundle_path.empty()
                                 ? preset_bundle(preset)
                                 : bundle_from_json(load_json(bundle_path), table, pt.value);
            auto points = sample_points(grid, seed, table, fn.triple);
            auto rep = verify_decomposition(fn, points);
            rep.summary.seed = seed;
            for (const auto& d : rep.per_u)
                std::cout << "u=" << d.u << ": decomposition residual " << d.max_residual
                          << ", spectral residual " << d.spectral_residual << "\n";
            std::cout << "sum identity residual: " << rep.sum_residual << "\n";
            std::cout << (rep.summary.pass ? "PASS" : "FAIL") << "\n";
            Json jrep = report_to_json(rep.summary);
            jrep["per_u"] = Json::array();
            for (const auto& d : rep.per_u)
                jrep["per_u"].push_back({{"u", d.u},
                                         {"max_residual", d.max_residual},
                                         {"spectral_residual", d.spectral_residual}});
            jrep["sum_residual"] = rep.sum_residual;
            write_json_report(json_path, jrep);
            return rep.summary.pass ? 0 : 1;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
