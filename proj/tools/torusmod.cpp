/*
   Copyright 2026 The torusmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// torusmod command-line front end. Exit codes: 0 success (or finished
// analysis), 1 a verification check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "torusmod/torusmod.hpp"

#ifndef TORUSMOD_VERSION
#define TORUSMOD_VERSION "0.0.0"
#endif

namespace {

using namespace torusmod;
using io::json;

struct Common {
    long box = 3;
    std::size_t samples = 300;
    std::uint64_t seed = 20260415;
    std::string json_path;
    bool quiet = false;
    bool timing = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

MultiIndex parse_index(std::string text, std::size_t n) {
    for (char& c : text)
        if (c == '[' || c == ']' || c == ',') c = ' ';
    std::istringstream is(text);
    std::vector<long> v;
    long x;
    while (is >> x) v.push_back(x);
    if (!is.eof()) throw UsageError("cannot parse multi-index '" + text + "'");
    if (v.size() != n) throw UsageError("multi-index needs " + std::to_string(n) + " entries");
    return MultiIndex(std::move(v));
}

std::size_t parse_direction(long d, std::size_t n, const char* flag) {
    if (d < 1 || static_cast<std::size_t>(d) > n)
        throw UsageError(std::string(flag) + " must be between 1 and " + std::to_string(n));
    return static_cast<std::size_t>(d - 1);
}

VerifyOptions verify_options(const Common& c) {
    VerifyOptions opt;
    opt.radius = c.box;
    opt.samples = c.samples;
    opt.seed = c.seed;
    opt.timing = c.timing;
    return opt;
}

class Run {
public:
    Run(const Common& c, std::vector<std::string> argv) : c_(c), argv_(std::move(argv)) {}

    std::ostream& out() { return c_.quiet ? null_ : std::cout; }

    int verification(const Report& rep) {
        bool ok = rep.passed();
        out() << rep.to_text();
        out() << (ok ? "PASS" : "FAIL") << " (" << rep.checks().size() << " checks, " << rep.failures().size()
              << " failed)\n";
        json j = header();
        j["status"] = ok ? "pass" : "fail";
        j["checks"] = rep.to_json();
        emit(j);
        return ok ? 0 : 1;
    }

    int analysis(json result) {
        json j = header();
        j["status"] = "ok";
        j["result"] = std::move(result);
        emit(j);
        return 0;
    }

private:
    json header() const {
        json j;
        j["tool"] = "torusmod";
        j["version"] = TORUSMOD_VERSION;
        j["command"] = argv_;
        return j;
    }

    void emit(const json& j) {
        if (c_.json_path.empty()) return;
        if (c_.json_path == "-") {
            std::cout << j.dump(2) << '\n';
            return;
        }
        io::write_json_file(c_.json_path, j);
    }

    const Common& c_;
    std::vector<std::string> argv_;
    std::ostream null_{nullptr};
};

json vectors_to_json(const std::vector<Vector>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(io::to_json(v));
    return arr;
}

// schema errors carry a JSON path only; prefix the file name
template <class F>
auto from_file(const std::string& path, F parse) {
    json j = io::read_json_file(path);
    try {
        return parse(j);
    } catch (const io::InputError& e) {
        throw io::InputError(path + ": " + e.what());
    }
}

std::pair<RepData, std::vector<Scalar>> load_module(const std::string& path) {
    return from_file(path, [](const json& j) { return io::module_from_json(j); });
}

RepData load_rep_data(const std::string& path) {
    return from_file(path, [](const json& j) { return io::rep_data_from_json(j); });
}

SimpleSpec load_spec(const std::string& path) {
    return from_file(path, [](const json& j) { return io::simple_spec_from_json(j); });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with divergence-free vector fields on the N-torus and their modules", "torusmod"};
    app.set_version_flag("--version", TORUSMOD_VERSION);
    app.require_subcommand(1);

    Common c;
    auto common = [&](CLI::App* sub, bool sweep) {
        if (sweep) {
            sub->add_option("--box", c.box, "box radius R for sweeps")->capture_default_str()->check(CLI::NonNegativeNumber);
            sub->add_option("--samples", c.samples, "number of random samples")->capture_default_str();
            sub->add_option("--seed", c.seed, "seed for random samples")->capture_default_str();
            sub->add_flag("--timing", c.timing, "record per-check wall time in the report");
        }
        sub->add_option("--json", c.json_path, "write the JSON report to this path ('-' for stdout)");
        sub->add_flag("--quiet", c.quiet, "suppress human-readable output");
    };

    std::string file, element, vector_file, output, suites = "bracket,commutator,eigenvalue,cyclic", r_text;
    long a = 1, b = 2, n_vars = 2, grade = 0, k_max = 2, grid = -1;
    bool puncture = false;

    auto* validate_cmd = app.add_subcommand("validate", "check representation data");
    validate_cmd->add_option("file", file, "representation data or module file")->required();
    common(validate_cmd, false);

    auto* assemble_cmd = app.add_subcommand("assemble", "evaluate D_ab(r), or dump it on a plane grid");
    assemble_cmd->add_option("file", file)->required();
    assemble_cmd->add_option("--a", a, "first direction (1-based)")->capture_default_str();
    assemble_cmd->add_option("--b", b, "second direction (1-based)")->capture_default_str();
    assemble_cmd->add_option("--r", r_text, "exponent, e.g. 1,0");
    assemble_cmd->add_option("--grid", grid, "dump D_ab on the (a, b) plane of this radius");
    assemble_cmd->add_flag("--puncture", puncture, "leave the origin out of the grid");
    assemble_cmd->add_option("-o,--output", output, "grid dump path (default stdout)");
    common(assemble_cmd, false);

    auto* identities_cmd = app.add_subcommand("identities", "check identities of the assembled operators");
    identities_cmd->add_option("file", file)->required();
    identities_cmd->add_option("--suite", suites, "comma-separated: bracket, commutator, eigenvalue, cyclic")->capture_default_str();
    common(identities_cmd, true);

    auto* act_cmd = app.add_subcommand("act", "apply a divergence-free field to a module element");
    act_cmd->add_option("module", file)->required();
    act_cmd->add_option("--element", element, "field text, e.g. \"2 * t^[1,1] d_1 - 2 * t^[1,1] d_2\"")->required();
    act_cmd->add_option("--vector", vector_file, "module element file")->required();
    common(act_cmd, false);

    auto* verify_cmd = app.add_subcommand("verify", "verify the module axioms on a box");
    verify_cmd->add_option("module", file)->required();
    common(verify_cmd, true);

    auto* irreducible_cmd = app.add_subcommand("irreducible", "look for a proper invariant subspace of U");
    irreducible_cmd->add_option("module", file)->required();
    common(irreducible_cmd, false);

    auto* build_cmd = app.add_subcommand("build-simple", "build a module file from an sl_N specification");
    build_cmd->add_option("file", file)->required();
    build_cmd->add_option("-o,--output", output, "module file to write")->required();
    common(build_cmd, false);

    auto* check_simple_cmd = app.add_subcommand("check-simple", "build and check a module from an sl_N specification");
    check_simple_cmd->add_option("file", file)->required();
    common(check_simple_cmd, true);

    auto* hwv_cmd = app.add_subcommand("hwv", "highest weight vectors of a graded component");
    hwv_cmd->add_option("--N", n_vars, "number of variables")->required();
    hwv_cmd->add_option("--grade", grade, "grade n >= -1")->required();
    common(hwv_cmd, false);

    auto* dims_cmd = app.add_subcommand("dims", "dimensions of graded components");
    dims_cmd->add_option("--N", n_vars, "number of variables")->required();
    dims_cmd->add_option("--max-grade", grade, "largest grade")->required();
    common(dims_cmd, false);

    auto* detect_cmd = app.add_subcommand("detect-poly", "reconstruct a polynomial from a grid dump (N = 2)");
    detect_cmd->add_option("file", file, "grid dump")->required();
    detect_cmd->add_option("--k-max", k_max, "largest degree considered")->capture_default_str();
    common(detect_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::vector<std::string> echo(argv + 1, argv + argc);
    Run run(c, echo);

    try {
        if (*validate_cmd) return run.verification(validate(load_rep_data(file)));

        if (*assemble_cmd) {
            RepData d = load_rep_data(file);
            PolyOperator p = to_poly_operator(d);
            std::size_t ia = parse_direction(a, d.n(), "--a"), ib = parse_direction(b, d.n(), "--b");
            if (ia == ib) throw UsageError("--a and --b must differ");
            if (grid >= 0) {
                std::vector<MultiIndex> pts;
                for (const auto& r : plane_points(d.n(), ia, ib, grid))
                    if (!(puncture && r.is_zero())) pts.push_back(r);
                GridFunction f = assemble_grid(p, ia, ib, pts);
                if (d.n() != 2) {
                    // keep the dump bivariate: project onto the (a, b) coordinates
                    GridFunction g(2, d.dim(), d.dim());
                    for (const auto& [r, m] : f.samples()) g.set(MultiIndex{r[ia], r[ib]}, m);
                    f = std::move(g);
                }
                if (output.empty()) {
                    f.dump(run.out());
                } else {
                    std::ofstream os(output);
                    if (!os) throw io::InputError(output + ": cannot open file for writing");
                    f.dump(os);
                }
                return run.analysis(json{{"grid_points", f.size()}, {"output", output.empty() ? "-" : output}});
            }
            if (r_text.empty()) throw UsageError("assemble needs --r or --grid");
            MultiIndex r = parse_index(r_text, d.n());
            Matrix m = assemble_D(p, ia, ib, r);
            run.out() << "D_" << a << "_" << b << "(" << r << ") = " << m << "\n";
            return run.analysis(json{{"a", a}, {"b", b}, {"r", io::to_json(r)}, {"D", io::to_json(m)}});
        }

        if (*identities_cmd) {
            RepData d = load_rep_data(file);
            PolyOperator p = to_poly_operator(d);
            Report rep;
            std::stringstream ss(suites);
            std::string s;
            std::mt19937_64 rng(c.seed);
            while (std::getline(ss, s, ',')) {
                if (s == "bracket") {
                    rep.add(check_D_bracket(p, sample_d_pairs(d.n(), c.box, c.samples, rng)));
                } else if (s == "commutator") {
                    rep.add(check_commutator_identity(p, 3, 3, std::max(c.box, 4L)));
                } else if (s == "eigenvalue") {
                    rep.add(check_eigenvalue_bound(p, c.box));
                } else if (s == "cyclic") {
                    if (d.n() < 3) continue;
                    std::vector<MultiIndex> pts;
                    std::uniform_int_distribution<long> coord(-c.box, c.box);
                    while (pts.size() < c.samples) {
                        MultiIndex r(d.n());
                        bool ok = true;
                        for (std::size_t i = 0; i < d.n(); ++i) ok = (r[i] = coord(rng)) != 0 && ok;
                        if (ok) pts.push_back(r);
                    }
                    rep.add(check_cyclic(p, pts));
                } else {
                    throw UsageError("unknown suite '" + s + "'");
                }
            }
            return run.verification(rep);
        }

        if (*act_cmd) {
            auto [d, lambda] = load_module(file);
            TensorModule m(lambda, d);
            VectorField x = VectorField::parse(element, d.n());
            ModuleElement v = from_file(vector_file, [&](const json& j) { return io::module_element_from_json(j, d.n(), d.dim()); });
            ModuleElement w = act_field(m, x, v);
            run.out() << w.to_string() << "\n";
            return run.analysis(io::to_json(w));
        }

        if (*verify_cmd) {
            auto [d, lambda] = load_module(file);
            return run.verification(verify_axioms(TensorModule(lambda, d), verify_options(c)));
        }

        if (*irreducible_cmd) {
            auto [d, lambda] = load_module(file);
            auto res = invariant_subspace_test(TensorModule(lambda, d));
            run.out() << verdict_name(res.verdict) << " (algebra dimension " << res.algebra_dim << " of "
                      << d.dim() * d.dim() << ")\n";
            for (const auto& v : res.witness) {
                run.out() << "  witness";
                for (const auto& x : v) run.out() << ' ' << x;
                run.out() << "\n";
            }
            json r{{"verdict", verdict_name(res.verdict)}, {"algebra_dim", res.algebra_dim}};
            if (!res.witness.empty()) r["witness"] = vectors_to_json(res.witness);
            return run.analysis(r);
        }

        if (*build_cmd) {
            SimpleSpec s = load_spec(file);
            Report spec_rep = check_spec(s);
            if (!spec_rep.passed()) {
                std::cerr << spec_rep.to_text();
                throw io::InputError(file + ": specification is not valid");
            }
            io::write_json_file(output, io::module_to_json(build_simple_data(s), s.lambda));
            run.out() << "wrote " << output << "\n";
            return run.analysis(json{{"output", output}});
        }

        if (*check_simple_cmd)
            return run.verification(check_simple_theorem(load_spec(file), verify_options(c)));

        if (*hwv_cmd) {
            if (n_vars < 2) throw UsageError("--N must be at least 2");
            json arr = json::array();
            for (const auto& x : highest_weight_vectors(static_cast<std::size_t>(n_vars), grade)) {
                run.out() << x.to_string() << "\n";
                arr.push_back(x.to_string());
            }
            return run.analysis(json{{"N", n_vars}, {"grade", grade}, {"vectors", arr}});
        }

        if (*dims_cmd) {
            if (n_vars < 2) throw UsageError("--N must be at least 2");
            json arr = json::array();
            for (long g = -1; g <= grade; ++g) {
                std::size_t dim = graded_component_basis(static_cast<std::size_t>(n_vars), g).size();
                run.out() << g << " " << dim << "\n";
                arr.push_back(json{{"grade", g}, {"dim", dim}});
            }
            return run.analysis(json{{"N", n_vars}, {"dims", arr}});
        }

        if (*detect_cmd) {
            std::ifstream is(file);
            if (!is) throw io::InputError(file + ": cannot open file");
            GridFunction f = GridFunction::load(is);
            try {
                MatrixPoly q = detect_polynomial(f, k_max);
                json coeffs = json::array();
                for (const auto& [k, m] : q.coeffs()) coeffs.push_back(json{{"k", io::to_json(k)}, {"P", io::to_json(m)}});
                run.out() << "degree " << q.degree() << ": " << q.to_string() << "\n";
                return run.analysis(json{{"detected", true}, {"degree", q.degree()}, {"coefficients", coeffs}});
            } catch (const DetectionFailure& e) {
                run.out() << "not a polynomial of degree <= " << k_max << ": " << e.what() << "\n";
                return run.analysis(json{{"detected", false},
                                         {"reason", e.what()},
                                         {"witness", io::to_json(e.witness())},
                                         {"order", json::array({e.order().first, e.order().second})}});
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "torusmod: " << e.what() << "\n";
        return 2;
    } catch (const io::InputError& e) {
        std::cerr << "torusmod: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "torusmod: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "torusmod: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "torusmod: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
