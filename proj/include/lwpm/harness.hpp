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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lwpm/affine_sat.hpp"
#include "lwpm/errors.hpp"
#include "lwpm/metaheuristics.hpp"
#include "lwpm/oracle.hpp"
#include "lwpm/reductions.hpp"
#include "lwpm/rng.hpp"
#include "lwpm/toeplitz.hpp"

namespace lwpm {

/// Each entry is 1 with the given probability, independently, row-major
/// draw order under the seeded generator.
inline BinaryMatrix gen_random_matrix(std::size_t m, std::size_t k, double density,
                                      std::uint64_t seed) {
    if (m < 1 || k < 1) throw input_error("matrix must have at least one row and column");
    if (!(density > 0 && density <= 1)) throw input_error("density must be in (0,1]");
    Xoshiro256StarStar rng(seed);
    BinaryMatrix a(m, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (rng.unit() < density) a.set(i, j, true);
    return a;
}

struct ExperimentConfig {
    std::uint64_t base_seed = 1;
    double density = 0.5;
    // The multiple is derived by hill climbing from the warm start Q = 1
    // plus two random restarts; the refined assignments are compared
    // against it, so it must be a seriously minimized multiple.
    Engine derive_engine = Engine::hill_climb;
    SolverConfig derive_cfg{.restarts = 2};
    SolverConfig refine_cfg{};
    ProjectionConfig projection{};
    bool random_rhs = false;
    SeedTruncation truncation = SeedTruncation::drop_last;
    // ratio orientation: gamma-norm / PQ-weight (the inverse is also emitted)
};

struct TrialRecord {
    std::size_t trial = 0;  // 1-based
    std::size_t m = 0, k = 0;
    std::size_t lwpm_rows = 0, lwpm_cols = 0;
    std::size_t weight_pq = 0;
    std::size_t norm_hc = 0, norm_sa = 0;
    double ratio_hc = 0, ratio_sa = 0;  // norm / weight_pq
    std::string error;                  // nonempty if the trial failed
};

struct RatioStats {
    double max = 0, mean = 0, median = 0;
};

struct SizeSummary {
    std::size_t m = 0, k = 0;
    std::size_t lwpm_rows = 0, lwpm_cols = 0;
    std::size_t trials_ok = 0, trials_failed = 0;
    RatioStats hc, sa;          // gamma-norm / PQ-weight
    RatioStats hc_inv, sa_inv;  // PQ-weight / gamma-norm, zero-norm trials excluded
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    std::size_t trials = 0;
    std::vector<TrialRecord> records;
    std::vector<SizeSummary> summaries;
};

namespace detail {

inline RatioStats ratio_stats(std::vector<double> values) {
    RatioStats st;
    if (values.empty()) return st;
    std::sort(values.begin(), values.end());
    st.max = values.back();
    double sum = 0;
    for (const double v : values) sum += v;
    st.mean = sum / static_cast<double>(values.size());
    const std::size_t h = values.size() / 2;
    st.median = values.size() % 2 ? values[h] : (values[h - 1] + values[h]) / 2;
    return st;
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

/// The reverse-reduction experiment: per trial, draw A, project it to a
/// MIN-PM instance, derive a multiple P*Q, then lift assignments for A
/// from Q with both hill climbing and simulated annealing. Per-size trial
/// i uses seed base_seed + i; a failed trial is recorded, never dropped.
inline ExperimentReport run_reverse_experiment(
    const std::vector<std::pair<std::size_t, std::size_t>>& sizes, std::size_t trials,
    const ExperimentConfig& cfg = {}) {
    if (trials < 1) throw input_error("experiment needs at least one trial");
    ExperimentReport report;
    report.config = cfg;
    report.sizes = sizes;
    report.trials = trials;

    for (const auto& [m, k] : sizes) {
        SizeSummary summary;
        summary.m = m;
        summary.k = k;
        std::vector<double> hc_ratios, sa_ratios, hc_inv, sa_inv;

        for (std::size_t trial = 1; trial <= trials; ++trial) {
            TrialRecord rec;
            rec.trial = trial;
            rec.m = m;
            rec.k = k;
            try {
                SplitMix64 split(cfg.base_seed + trial);
                const std::uint64_t matrix_seed = split.next();
                const std::uint64_t derive_seed = split.next();
                const std::uint64_t hc_seed = split.next();
                const std::uint64_t sa_seed = split.next();
                const std::uint64_t rhs_seed = split.next();

                const BinaryMatrix a = gen_random_matrix(m, k, cfg.density, matrix_seed);
                const ReverseReduction rr = reverse_reduce(a, cfg.projection);
                rec.lwpm_rows = rr.instance.d() + rr.t + 1;
                rec.lwpm_cols = rr.t + 1;
                summary.lwpm_rows = rec.lwpm_rows;
                summary.lwpm_cols = rec.lwpm_cols;

                SolverConfig dcfg = cfg.derive_cfg;
                dcfg.seed = derive_seed;
                const SolveResult derived =
                    solve_min_pm(rr.instance, cfg.derive_engine, dcfg, true);
                rec.weight_pq = derived.weight;

                std::optional<BitVec> rhs;
                if (cfg.random_rhs) rhs = Xoshiro256StarStar(rhs_seed).bits(m);

                SolverConfig hcfg = cfg.refine_cfg;
                hcfg.seed = hc_seed;
                const ReverseLiftResult hc =
                    reverse_lift(a, derived.k, rr.instance.p, Engine::hill_climb, hcfg,
                                 cfg.truncation, rhs ? &*rhs : nullptr);
                SolverConfig scfg = cfg.refine_cfg;
                scfg.seed = sa_seed;
                const ReverseLiftResult sa =
                    reverse_lift(a, derived.k, rr.instance.p, Engine::simulated_anneal, scfg,
                                 cfg.truncation, rhs ? &*rhs : nullptr);

                rec.norm_hc = hc.violations;
                rec.norm_sa = sa.violations;
                rec.ratio_hc = static_cast<double>(rec.norm_hc) / static_cast<double>(rec.weight_pq);
                rec.ratio_sa = static_cast<double>(rec.norm_sa) / static_cast<double>(rec.weight_pq);

                hc_ratios.push_back(rec.ratio_hc);
                sa_ratios.push_back(rec.ratio_sa);
                if (rec.norm_hc)
                    hc_inv.push_back(static_cast<double>(rec.weight_pq) /
                                     static_cast<double>(rec.norm_hc));
                if (rec.norm_sa)
                    sa_inv.push_back(static_cast<double>(rec.weight_pq) /
                                     static_cast<double>(rec.norm_sa));
                ++summary.trials_ok;
            } catch (const std::exception& e) {
                rec.error = e.what();
                ++summary.trials_failed;
            }
            report.records.push_back(std::move(rec));
        }

        summary.hc = detail::ratio_stats(std::move(hc_ratios));
        summary.sa = detail::ratio_stats(std::move(sa_ratios));
        summary.hc_inv = detail::ratio_stats(std::move(hc_inv));
        summary.sa_inv = detail::ratio_stats(std::move(sa_inv));
        report.summaries.push_back(summary);
    }
    return report;
}

inline std::string engine_name(Engine e) {
    switch (e) {
        case Engine::exhaustive: return "exhaustive";
        case Engine::hill_climb: return "hc";
        default: return "sa";
    }
}

inline void write_config_header(std::ostream& out, const ExperimentConfig& cfg) {
    out << "# base_seed=" << cfg.base_seed << " density=" << cfg.density
        << " derive_engine=" << engine_name(cfg.derive_engine)
        << " derive=(max-iters=" << cfg.derive_cfg.max_iters
        << ",restarts=" << cfg.derive_cfg.restarts << ",t-initial=" << cfg.derive_cfg.t_initial
        << ",t-min=" << cfg.derive_cfg.t_min << ",alpha=" << cfg.derive_cfg.alpha << ")"
        << " refine=(max-iters=" << cfg.refine_cfg.max_iters
        << ",t-initial=" << cfg.refine_cfg.t_initial << ",t-min=" << cfg.refine_cfg.t_min
        << ",alpha=" << cfg.refine_cfg.alpha << ")"
        << " projection="
        << (cfg.projection.policy == ProjectionPolicy::majority ? "majority" : "first-occurrence")
        << " tie=" << (cfg.projection.tie ? 1 : 0)
        << " rhs=" << (cfg.random_rhs ? "random" : "homogeneous") << " truncation="
        << (cfg.truncation == SeedTruncation::drop_last ? "drop-last" : "drop-first")
        << " ratio=gamma-norm/pq-weight\n";
}

/// Table-1 style summary: MAX-SAT dims, LWPM dims, max ratio per method.
inline void write_summary(std::ostream& out, const ExperimentReport& report) {
    out << "maxsat_instance, lwpm_instance, max_ratio_hc, max_ratio_sa\n";
    for (const auto& s : report.summaries)
        out << s.m << 'x' << s.k << ", " << s.lwpm_rows << 'x' << s.lwpm_cols << ", "
            << detail::format_double(s.hc.max) << ", " << detail::format_double(s.sa.max) << '\n';
}

/// One file per plotted series ("x, y" rows: trial index against norm),
/// plus records.csv with every per-trial field and summary.csv in Table-1
/// format, all under dir.
inline void write_report_csv(const ExperimentReport& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto open = [&](const std::string& name) {
        std::ofstream f(dir / name);
        if (!f) throw input_error("cannot write " + (dir / name).string());
        return f;
    };

    for (const auto& [m, k] : report.sizes) {
        const std::string prefix = std::to_string(m) + "x" + std::to_string(k);
        auto pq = open(prefix + "_pq.csv");
        auto hc = open(prefix + "_hc.csv");
        auto sa = open(prefix + "_sa.csv");
        pq << "x, y\n";
        hc << "x, y\n";
        sa << "x, y\n";
        for (const auto& r : report.records) {
            if (r.m != m || r.k != k || !r.error.empty()) continue;
            pq << r.trial << ", " << r.weight_pq << '\n';
            hc << r.trial << ", " << r.norm_hc << '\n';
            sa << r.trial << ", " << r.norm_sa << '\n';
        }
    }

    auto records = open("records.csv");
    write_config_header(records, report.config);
    records << "trial, m, k, lwpm_rows, lwpm_cols, weight_pq, norm_hc, norm_sa, ratio_hc, "
               "ratio_sa, ratio_inv_hc, ratio_inv_sa, error\n";
    for (const auto& r : report.records) {
        records << r.trial << ", " << r.m << ", " << r.k << ", " << r.lwpm_rows << ", "
                << r.lwpm_cols << ", ";
        if (r.error.empty()) {
            records << r.weight_pq << ", " << r.norm_hc << ", " << r.norm_sa << ", "
                    << detail::format_double(r.ratio_hc) << ", "
                    << detail::format_double(r.ratio_sa) << ", ";
            if (r.norm_hc)
                records << detail::format_double(static_cast<double>(r.weight_pq) /
                                                 static_cast<double>(r.norm_hc));
            records << ", ";
            if (r.norm_sa)
                records << detail::format_double(static_cast<double>(r.weight_pq) /
                                                 static_cast<double>(r.norm_sa));
            records << ",\n";
        } else {
            records << ", , , , , , , " << r.error << '\n';
        }
    }

    auto summary = open("summary.csv");
    write_summary(summary, report);
}

struct ForwardValidationReport {
    std::size_t instances = 0;
    std::size_t measure_checks = 0;
    std::size_t optimum_checks = 0;
};

/// Serialized through the polynomial and bit-string text formats so a
/// failure is reproducible from the message alone.
struct IdentityCounterexample {
    Gf2Poly p;
    std::uint64_t n = 0;
    BitVec gamma;
    std::size_t expected = 0, actual = 0;
    std::string what;

    std::string to_text() const {
        std::ostringstream out;
        out << what << "\nP: " << format_poly(p) << "\nn: " << n;
        if (gamma.size()) out << "\ngamma: " << gamma.to_string();
        out << "\nexpected: " << expected << "\nactual: " << actual;
        return out.str();
    }
};

/// Bulk check of the reduction identities against the independent oracles:
/// weight(lift(gamma)) must equal the violation count of the unpinned
/// system for random gamma, and the exhaustive optimum must match
/// brute_min_pm. Throws with a serialized counterexample on any mismatch.
inline ForwardValidationReport run_forward_validation(std::size_t count, std::size_t max_degree,
                                                      std::uint64_t seed) {
    if (max_degree > 20) throw input_error("max degree too large for the oracle cap");
    Xoshiro256StarStar rng(seed);
    ForwardValidationReport report;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t d = rng.below(max_degree + 1);
        BitVec pbits = rng.bits(d + 1);
        pbits.set(d, true);  // degree exactly d
        const Gf2Poly p = Gf2Poly::from_coeff_bits(pbits);
        const std::size_t t = rng.below(12);
        const MinPmInstance inst(p, d + t + 1);

        const ReductionCertificate cert = forward_reduce(inst);
        for (std::size_t r = 0; r < 5; ++r) {
            const Assignment gamma = rng.nonzero_bits(t + 1);
            const std::size_t expected = violation_count(cert.system, gamma);
            const std::size_t actual = lift_solution(inst, gamma).weight();
            if (actual != expected)
                throw std::logic_error(
                    IdentityCounterexample{p, inst.n, gamma, expected, actual,
                                           "measure identity violated"}
                        .to_text());
            ++report.measure_checks;
        }

        const std::size_t solved = solve_min_pm(inst, Engine::exhaustive).weight;
        const std::size_t brute = brute_min_pm(p, inst.n).weight;
        if (solved != brute)
            throw std::logic_error(IdentityCounterexample{p, inst.n, BitVec(), brute, solved,
                                                          "optimum identity violated"}
                                       .to_text());
        ++report.optimum_checks;
        ++report.instances;
    }
    return report;
}

}  // namespace lwpm
