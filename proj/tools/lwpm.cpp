/*
   Copyright 2026 the lwpm authors

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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lwpm/lwpm.hpp"

namespace {

lwpm::PolyStyle style_from_name(const std::string& name) {
    if (name == "algebraic") return lwpm::PolyStyle::algebraic;
    if (name == "exponents") return lwpm::PolyStyle::exponent_list;
    throw lwpm::input_error("unknown format '" + name + "'");
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lwpm::input_error("cannot open '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw lwpm::input_error("cannot write '" + path + "'");
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& text) {
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        const std::string item = text.substr(pos, end - pos);
        const std::size_t x = item.find('x');
        if (x == std::string::npos || x == 0 || x + 1 >= item.size())
            throw lwpm::input_error("bad size '" + item + "', expected MxK");
        try {
            sizes.emplace_back(std::stoull(item.substr(0, x)), std::stoull(item.substr(x + 1)));
        } catch (const std::exception&) {
            throw lwpm::input_error("bad size '" + item + "', expected MxK");
        }
        pos = end + 1;
    }
    if (sizes.empty()) throw lwpm::input_error("no sizes given");
    return sizes;
}

void print_maxsat_result(std::ostream& out, const lwpm::AffineSystem& sys,
                         const lwpm::Assignment& gamma) {
    const std::size_t sat = lwpm::satisfied_count(sys, gamma);
    out << "assignment: " << gamma.to_string() << '\n';
    out << "satisfied: " << sat << '\n';
    out << "violations: " << sys.constraint_count() - sat << '\n';
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Low-weight polynomial multiples over GF(2) via affine MAX-SAT"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    std::string format_name = "algebraic";
    std::string config_file;
    lwpm::SolverConfig cfg;
    std::string sa_return_name = "best", hc_variant_name = "stochastic";
    app.add_option("--seed", seed, "RNG seed")->envname("LWPM_SEED");
    app.add_option("--format", format_name, "polynomial text style: algebraic or exponents")
        ->check(CLI::IsMember({"algebraic", "exponents"}));
    app.add_option("--config", config_file, "key=value solver config file");
    app.add_option("--max-iters", cfg.max_iters, "hill climbing iteration budget");
    app.add_option("--restarts", cfg.restarts, "extra random restarts");
    app.add_option("--t-initial", cfg.t_initial, "annealing start temperature");
    app.add_option("--t-min", cfg.t_min, "annealing stop temperature");
    app.add_option("--alpha", cfg.alpha, "annealing cooling factor");
    app.add_flag("--forbid-zero", cfg.forbid_zero, "exclude the all-zero assignment");
    app.add_option("--sa-return", sa_return_name, "best or final")
        ->check(CLI::IsMember({"best", "final"}));
    app.add_option("--hc-variant", hc_variant_name, "stochastic or steepest")
        ->check(CLI::IsMember({"stochastic", "steepest"}));

    std::string poly_text, engine_name = "exhaustive";
    std::uint64_t degree_bound = 0;
    std::size_t weight_bound = 0, cap = 26;
    bool no_pin = false, pin_out = false;
    std::string in_file, out_file, start_bits;

    auto* solve = app.add_subcommand("solve-lwpm", "find a low-weight multiple");
    solve->add_option("poly", poly_text, "polynomial P")->required();
    solve->add_option("-n,--degree-bound", degree_bound, "multiples must have degree < n")
        ->required();
    solve->add_option("--engine", engine_name, "exhaustive, hc or sa");
    solve->add_flag("--no-pin", no_pin, "solve without pinning x_0 = 1");
    solve->add_option("--cap", cap, "exhaustive variable cap");

    auto* decide = app.add_subcommand("decide-lwpm", "is there a multiple of weight <= w?");
    decide->add_option("poly", poly_text)->required();
    decide->add_option("-n,--degree-bound", degree_bound)->required();
    decide->add_option("-w,--weight", weight_bound)->required();
    decide->add_option("--cap", cap);

    auto* reduce = app.add_subcommand("reduce", "emit the affine system of an instance");
    reduce->add_option("poly", poly_text)->required();
    reduce->add_option("-n,--degree-bound", degree_bound)->required();
    reduce->add_flag("--pin", pin_out, "emit the pinned system instead");
    reduce->add_option("-o,--out", out_file, "output file (default stdout)");

    std::string policy_name = "majority";
    bool tie_zero = false;
    auto* rev = app.add_subcommand("rev-reduce", "project a matrix to a MIN-PM instance");
    rev->add_option("matrix", in_file, "matrix file")->required();
    rev->add_option("--policy", policy_name, "majority or first")
        ->check(CLI::IsMember({"majority", "first"}));
    rev->add_flag("--tie-zero", tie_zero, "resolve majority ties to 0 instead of 1");
    rev->add_option("-o,--out", out_file);

    auto* maxsat = app.add_subcommand("solve-maxsat", "solve an affine system file");
    maxsat->add_option("system", in_file, "system file")->required();
    maxsat->add_option("--engine", engine_name);
    maxsat->add_option("--start", start_bits, "start assignment as a 0/1 string");
    maxsat->add_option("--cap", cap);

    auto* oracle = app.add_subcommand("oracle", "brute-force reference solvers");
    oracle->require_subcommand(1);
    auto* oracle_lwpm = oracle->add_subcommand("lwpm");
    oracle_lwpm->add_option("poly", poly_text)->required();
    oracle_lwpm->add_option("-n,--degree-bound", degree_bound)->required();
    oracle_lwpm->add_option("--cap", cap);
    auto* oracle_maxsat = oracle->add_subcommand("maxsat");
    oracle_maxsat->add_option("system", in_file)->required();
    oracle_maxsat->add_option("--cap", cap);

    std::string sizes_text = "40x30,400x200,1000x500", derive_engine_name = "hc";
    std::size_t trials = 50;
    double density = 0.5;
    bool random_rhs = false, drop_first = false;
    std::vector<std::string> derive_kv;
    std::string exp_out = "experiment-out";
    auto* experiment = app.add_subcommand("experiment", "run the reverse-reduction experiment");
    experiment->add_option("--sizes", sizes_text, "comma-separated MxK list");
    experiment->add_option("--trials", trials, "trials per size");
    experiment->add_option("--out", exp_out, "output directory for CSV files");
    experiment->add_option("--density", density, "matrix density");
    experiment->add_option("--derive-engine", derive_engine_name, "engine for the multiple");
    experiment->add_option("--derive-set", derive_kv, "key=value override for the derive solver");
    experiment->add_option("--policy", policy_name)->check(CLI::IsMember({"majority", "first"}));
    experiment->add_flag("--tie-zero", tie_zero);
    experiment->add_flag("--random-rhs", random_rhs, "random rhs instead of homogeneous");
    experiment->add_flag("--drop-first", drop_first, "seed gamma from Q without coefficient 0");

    std::size_t count = 100, max_degree = 10;
    auto* validate = app.add_subcommand("validate", "bulk-check the reduction identities");
    validate->add_option("--count", count, "instances to check");
    validate->add_option("--max-degree", max_degree, "maximum degree of P");

    // global flags may also follow the subcommand
    for (CLI::App* sub : {solve, decide, reduce, rev, maxsat, oracle, oracle_lwpm, oracle_maxsat,
                          experiment, validate})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    cfg.seed = seed;
    cfg.sa_return = sa_return_name == "final" ? lwpm::SaReturn::final_state : lwpm::SaReturn::best;
    cfg.hc_variant =
        hc_variant_name == "steepest" ? lwpm::HcVariant::steepest : lwpm::HcVariant::stochastic;
    if (!config_file.empty()) {
        lwpm::SolverConfig filed;
        auto in = open_input(config_file);
        lwpm::parse_config_stream(filed, in);
        // explicit command-line flags win over the file
        if (!app.count("--seed")) cfg.seed = filed.seed;
        if (!app.count("--max-iters")) cfg.max_iters = filed.max_iters;
        if (!app.count("--restarts")) cfg.restarts = filed.restarts;
        if (!app.count("--t-initial")) cfg.t_initial = filed.t_initial;
        if (!app.count("--t-min")) cfg.t_min = filed.t_min;
        if (!app.count("--alpha")) cfg.alpha = filed.alpha;
        if (!app.count("--forbid-zero")) cfg.forbid_zero = filed.forbid_zero;
        if (!app.count("--sa-return")) cfg.sa_return = filed.sa_return;
        if (!app.count("--hc-variant")) cfg.hc_variant = filed.hc_variant;
    }
    const lwpm::PolyStyle style = style_from_name(format_name);
    const lwpm::ProjectionConfig proj{policy_name == "first"
                                          ? lwpm::ProjectionPolicy::first_occurrence
                                          : lwpm::ProjectionPolicy::majority,
                                      !tie_zero};

    if (*solve) {
        const lwpm::MinPmInstance inst(lwpm::parse_poly(poly_text, style), degree_bound);
        const auto res =
            lwpm::solve_min_pm(inst, lwpm::parse_engine(engine_name), cfg, !no_pin, cap);
        std::cout << lwpm::format_poly(res.k, style) << '\n';
        std::cout << "weight " << res.weight << (res.exact ? "" : " (bound)") << '\n';
    } else if (*decide) {
        const lwpm::MinPmInstance inst(lwpm::parse_poly(poly_text, style), degree_bound);
        std::cout << (lwpm::decide_min_pm(inst, weight_bound, cap) ? "yes" : "no") << '\n';
    } else if (*reduce) {
        const lwpm::MinPmInstance inst(lwpm::parse_poly(poly_text, style), degree_bound);
        const auto cert = lwpm::forward_reduce(inst, pin_out);
        const lwpm::AffineSystem& sys = pin_out ? *cert.pinned_system : cert.system;
        if (out_file.empty()) {
            lwpm::write_system(std::cout, sys);
        } else {
            auto out = open_output(out_file);
            lwpm::write_system(out, sys);
        }
    } else if (*rev) {
        auto in = open_input(in_file);
        const auto rr = lwpm::reverse_reduce(lwpm::parse_matrix(in), proj);
        const auto emit = [&](std::ostream& out) {
            lwpm::write_instance(out, rr.instance, style);
            out << "dims: " << rr.instance.d() + rr.t + 1 << 'x' << rr.t + 1 << '\n';
        };
        if (out_file.empty()) {
            emit(std::cout);
        } else {
            auto out = open_output(out_file);
            emit(out);
        }
    } else if (*maxsat) {
        auto in = open_input(in_file);
        const lwpm::AffineSystem sys = lwpm::parse_system(in);
        const lwpm::Engine engine = lwpm::parse_engine(engine_name);
        lwpm::Assignment gamma(0);
        if (engine == lwpm::Engine::exhaustive) {
            gamma = lwpm::exhaustive_solve(sys, cfg.forbid_zero, cap).assignment;
        } else {
            lwpm::Assignment start(0);
            if (!start_bits.empty()) {
                start = lwpm::BitVec::from_string(start_bits);
            } else {
                lwpm::Xoshiro256StarStar starts(cfg.seed);
                start = cfg.forbid_zero ? starts.nonzero_bits(sys.variable_count())
                                        : starts.bits(sys.variable_count());
            }
            gamma = engine == lwpm::Engine::hill_climb ? lwpm::hill_climb(sys, start, cfg)
                                                       : lwpm::simulated_anneal(sys, start, cfg);
        }
        print_maxsat_result(std::cout, sys, gamma);
    } else if (*oracle_lwpm) {
        const auto res = lwpm::brute_min_pm(lwpm::parse_poly(poly_text, style), degree_bound, cap);
        std::cout << lwpm::format_poly(res.k, style) << '\n';
        std::cout << "weight " << res.weight << '\n';
    } else if (*oracle_maxsat) {
        auto in = open_input(in_file);
        const lwpm::AffineSystem sys = lwpm::parse_system(in);
        const auto res = lwpm::brute_maxsat(sys, cfg.forbid_zero, cap);
        print_maxsat_result(std::cout, sys, res.assignment);
    } else if (*experiment) {
        lwpm::ExperimentConfig ecfg;
        ecfg.base_seed = seed;
        ecfg.density = density;
        ecfg.derive_engine = lwpm::parse_engine(derive_engine_name);
        ecfg.refine_cfg = cfg;
        ecfg.projection = proj;
        ecfg.random_rhs = random_rhs;
        ecfg.truncation =
            drop_first ? lwpm::SeedTruncation::drop_first : lwpm::SeedTruncation::drop_last;
        for (const std::string& kv : derive_kv) {
            const std::size_t eq = kv.find('=');
            if (eq == std::string::npos)
                throw lwpm::input_error("expected key=value, got '" + kv + "'");
            lwpm::apply_config_kv(ecfg.derive_cfg, std::string_view(kv).substr(0, eq),
                                  kv.substr(eq + 1));
        }
        const auto report = lwpm::run_reverse_experiment(parse_sizes(sizes_text), trials, ecfg);
        lwpm::write_report_csv(report, exp_out);
        lwpm::write_summary(std::cout, report);
    } else if (*validate) {
        const auto report = lwpm::run_forward_validation(count, max_degree, seed);
        std::cout << "instances: " << report.instances << '\n';
        std::cout << "measure checks: " << report.measure_checks << '\n';
        std::cout << "optimum checks: " << report.optimum_checks << '\n';
        std::cout << "all identities hold\n";
    }
    return 0;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lwpm::solve_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const lwpm::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
