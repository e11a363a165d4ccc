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

#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lwpm/affine_sat.hpp"
#include "lwpm/bitvec.hpp"
#include "lwpm/errors.hpp"
#include "lwpm/gf2poly.hpp"
#include "lwpm/metaheuristics.hpp"
#include "lwpm/rng.hpp"
#include "lwpm/toeplitz.hpp"

namespace lwpm {

/// Find a nonzero multiple K of P with deg(K) < n and minimum weight.
struct MinPmInstance {
    MinPmInstance(Gf2Poly p_, std::uint64_t n_) : p(std::move(p_)), n(n_) {
        if (p.is_zero()) throw input_error("instance polynomial must be nonzero");
        if (n <= *p.degree())
            throw input_error("degree bound n = " + std::to_string(n) +
                              " must exceed deg(P) = " + std::to_string(*p.degree()));
    }

    std::size_t d() const { return *p.degree(); }
    std::size_t t() const { return static_cast<std::size_t>(n) - d() - 1; }

    Gf2Poly p;
    std::uint64_t n;
};

/// ||(P,n)|| = (d+1)log q + log n with q = 2.
inline std::size_t instance_size(const MinPmInstance& inst) {
    return inst.d() + 1 + static_cast<std::size_t>(std::bit_width(inst.n));
}

struct Pin {
    std::size_t var;
    bool value;
};

/// The affine system produced by the forward reduction, together with the
/// pin that was applied (if any) and the eliminated system it induces.
struct ReductionCertificate {
    AffineSystem system;                         // homogeneous, (d+t+1) x (t+1)
    std::optional<Pin> pin;                      // x_0 = 1 by default
    std::optional<AffineSystem> pinned_system;   // over t variables, rhs from column 0
    std::size_t d = 0;
    std::size_t t = 0;
    std::uint64_t n = 0;

    /// Reinsert the pinned bit in front of an assignment of the pinned system.
    Assignment restore(const Assignment& reduced) const {
        if (!pin) {
            if (reduced.size() != t + 1)
                throw input_error("assignment length does not match t+1 variables");
            return reduced;
        }
        if (reduced.size() != t)
            throw input_error("assignment length does not match pinned system");
        Assignment full(t + 1);
        full.set(0, pin->value);
        for (std::size_t j = 0; j < t; ++j)
            if (reduced.get(j)) full.set(j + 1, true);
        return full;
    }
};

/// Forward reduction: the homogeneous system "M_{P,t} x = 0" with
/// t = n - d - 1. Pinning x_0 = 1 excludes the zero assignment without
/// changing the optimum (any nonzero multiple can be shift-normalized to
/// one with Q(0) = 1); the pinned variable is eliminated by substitution,
/// moving column 0 of the operator to the right-hand side.
inline ReductionCertificate forward_reduce(const MinPmInstance& inst, bool pin = true) {
    const std::size_t d = inst.d(), t = inst.t();
    const ToeplitzOperator op = build(inst.p, t);
    ReductionCertificate cert{from_toeplitz(op), std::nullopt, std::nullopt, d, t, inst.n};
    if (pin) {
        cert.pin = Pin{0, true};
        const std::size_t m = op.rows();
        std::vector<BitVec> rows;
        rows.reserve(m);
        BitVec rhs(m);
        for (std::size_t i = 0; i < m; ++i) {
            BitVec row(t);
            for (std::size_t j = 1; j < t + 1; ++j)
                if (cert.system.row(i).get(j)) row.set(j - 1, true);
            rows.push_back(std::move(row));
            if (cert.system.row(i).get(0)) rhs.set(i, true);
        }
        cert.pinned_system = AffineSystem(std::move(rows), std::move(rhs));
    }
    return cert;
}

/// Solution map of the forward reduction: K = P * Q_gamma. gamma must be the full
/// (t+1)-bit assignment with any pinned bit restored.
inline Gf2Poly lift_solution(const MinPmInstance& inst, const Assignment& gamma) {
    if (gamma.size() != inst.t() + 1)
        throw input_error("assignment length " + std::to_string(gamma.size()) +
                          " does not match t+1 = " + std::to_string(inst.t() + 1));
    if (gamma.none()) throw solve_error("zero multiple excluded");
    return inst.p * Gf2Poly::from_coeff_bits(gamma);
}

enum class Engine { exhaustive, hill_climb, simulated_anneal };

inline Engine parse_engine(std::string_view name) {
    if (name == "exhaustive") return Engine::exhaustive;
    if (name == "hc" || name == "hill-climb" || name == "hill_climb") return Engine::hill_climb;
    if (name == "sa" || name == "simulated-anneal" || name == "simulated_anneal")
        return Engine::simulated_anneal;
    throw input_error("unknown engine '" + std::string(name) + "'");
}

struct SolveResult {
    Gf2Poly k;
    std::size_t weight = 0;
    Assignment assignment;  // full t+1 bits
    bool exact = false;     // true only for the exhaustive engine
};

/// Full solve pipeline: build the system, solve it with the chosen
/// engine, lift the assignment back to the multiple K = P * Q. The first
/// metaheuristic run is warm-started at Q = 1 (the trivial multiple K = P,
/// whose weight already beats a random assignment); restarts draw fresh
/// uniform random starts. Run r is seeded cfg.seed + 1 + r while the
/// restart starts come from a stream seeded cfg.seed.
inline SolveResult solve_min_pm(const MinPmInstance& inst, Engine engine,
                                const SolverConfig& cfg = {}, bool pin = true,
                                std::size_t cap = 26) {
    const ReductionCertificate cert = forward_reduce(inst, pin);
    const std::size_t t = cert.t;

    Assignment gamma;
    if (engine == Engine::exhaustive) {
        if (t + 1 > cap) throw input_error("instance too large for exhaustive search");
        if (pin)
            gamma = cert.restore(exhaustive_solve(*cert.pinned_system, false, cap).assignment);
        else
            gamma = exhaustive_solve(cert.system, true, cap).assignment;
    } else if (t == 0) {
        gamma = Assignment(1);
        gamma.set(0, true);  // the only nonzero choice is Q = 1
    } else {
        const AffineSystem& sys = pin ? *cert.pinned_system : cert.system;
        Xoshiro256StarStar starts(cfg.seed);
        std::optional<Assignment> best;
        std::size_t best_viol = 0;
        for (std::uint32_t run = 0; run <= cfg.restarts; ++run) {
            Assignment start(pin ? t : t + 1);
            if (run == 0) {
                if (!pin) start.set(0, true);  // Q = 1 either way
            } else {
                start = pin ? starts.bits(t) : starts.nonzero_bits(t + 1);
            }
            SolverConfig run_cfg = cfg;
            run_cfg.seed = cfg.seed + 1 + run;
            run_cfg.forbid_zero = !pin;
            const Assignment result = engine == Engine::hill_climb
                                          ? hill_climb(sys, start, run_cfg)
                                          : simulated_anneal(sys, start, run_cfg);
            const std::size_t viol = violation_count(sys, result);
            if (!best || viol < best_viol) {
                best = result;
                best_viol = viol;
            }
        }
        gamma = pin ? cert.restore(*best) : *best;
    }

    SolveResult out;
    out.k = lift_solution(inst, gamma);
    out.weight = out.k.weight();
    out.assignment = std::move(gamma);
    out.exact = engine == Engine::exhaustive;
    return out;
}

/// mu*(P,n), exact; requires an exhaustive-capable instance.
inline std::size_t evaluate_min_pm(const MinPmInstance& inst, std::size_t cap = 26) {
    return solve_min_pm(inst, Engine::exhaustive, {}, true, cap).weight;
}

/// Is there a multiple of weight at most w and degree below n?
inline bool decide_min_pm(const MinPmInstance& inst, std::size_t w, std::size_t cap = 26) {
    if (w == 0) throw input_error("weight bound must be positive");
    return evaluate_min_pm(inst, cap) <= w;
}

struct ReverseReduction {
    MinPmInstance instance;
    Gf2Poly p;       // = instance.p, the projected polynomial
    std::size_t t;   // = cols(A)
};

/// Steps 1-2 of the probabilistic reverse reduction: project A to a
/// Toeplitz form, read off P, and form the instance with n = m + k + 1.
inline ReverseReduction reverse_reduce(const BinaryMatrix& a, ProjectionConfig proj = {}) {
    auto [p, t] = project_toeplitz(a, proj);
    MinPmInstance inst(p, static_cast<std::uint64_t>(a.rows() + a.cols() + 1));
    return ReverseReduction{std::move(inst), std::move(p), t};
}

enum class SeedTruncation { drop_last, drop_first };

struct ReverseLiftResult {
    Assignment assignment;
    std::size_t violations = 0;
    std::size_t satisfied = 0;
    std::size_t weight_k = 0;
};

/// Step 3 of the reverse reduction: seed an assignment for the system of A
/// from the coefficients of Q = K / P (Q has k+1 coefficients, A has k
/// variables; one is dropped per the truncation policy) and refine it with
/// the chosen local search method. rhs defaults to homogeneous.
inline ReverseLiftResult reverse_lift(const BinaryMatrix& a, const Gf2Poly& k, const Gf2Poly& p,
                                      Engine method, const SolverConfig& cfg = {},
                                      SeedTruncation trunc = SeedTruncation::drop_last,
                                      const BitVec* rhs = nullptr) {
    if (method == Engine::exhaustive)
        throw input_error("reverse lift requires a local search method");
    if (k.is_zero()) throw input_error("zero multiple excluded");
    auto [q, rem] = divmod(k, p);
    if (!rem.is_zero()) throw input_error("polynomial is not a multiple of P");

    const std::size_t vars = a.cols();
    Assignment gamma0(vars);
    const std::size_t base = trunc == SeedTruncation::drop_first ? 1 : 0;
    for (std::size_t j = 0; j < vars; ++j)
        if (q.coeff(base + j)) gamma0.set(j, true);

    const AffineSystem sys = rhs ? from_matrix_rows(a, *rhs) : from_matrix_rows(a);
    const Assignment refined = method == Engine::hill_climb ? hill_climb(sys, gamma0, cfg)
                                                            : simulated_anneal(sys, gamma0, cfg);
    ReverseLiftResult out;
    out.satisfied = satisfied_count(sys, refined);
    out.violations = sys.constraint_count() - out.satisfied;
    out.weight_k = k.weight();
    out.assignment = refined;
    return out;
}

/// Line-oriented certificate form, stable for test fixtures.
inline void write_certificate(std::ostream& out, const ReductionCertificate& cert) {
    out << "min-pm reduction\n";
    out << "d: " << cert.d << '\n';
    out << "t: " << cert.t << '\n';
    out << "n: " << cert.n << '\n';
    if (cert.pin)
        out << "pin: x" << cert.pin->var << "=" << (cert.pin->value ? 1 : 0) << '\n';
    else
        out << "pin: none\n";
    out << "system:\n";
    write_system(out, cert.system);
    if (cert.pinned_system) {
        out << "pinned-system:\n";
        write_system(out, *cert.pinned_system);
    }
}

inline void write_instance(std::ostream& out, const MinPmInstance& inst,
                           PolyStyle style = PolyStyle::algebraic) {
    out << "P: " << format_poly(inst.p, style) << '\n';
    out << "n: " << inst.n << '\n';
}

inline MinPmInstance parse_instance(std::istream& in, PolyStyle style = PolyStyle::algebraic) {
    std::string pline, nline;
    if (!std::getline(in, pline) || pline.rfind("P: ", 0) != 0)
        throw input_error("instance: expected 'P: <polynomial>' line");
    if (!std::getline(in, nline) || nline.rfind("n: ", 0) != 0)
        throw input_error("instance: expected 'n: <bound>' line");
    const Gf2Poly p = parse_poly(std::string_view(pline).substr(3), style);
    std::uint64_t n = 0;
    try {
        n = std::stoull(nline.substr(3));
    } catch (const std::exception&) {
        throw input_error("instance: bad degree bound '" + nline.substr(3) + "'");
    }
    return MinPmInstance(p, n);
}

}  // namespace lwpm
