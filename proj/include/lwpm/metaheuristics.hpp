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

#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lwpm/affine_sat.hpp"
#include "lwpm/bitvec.hpp"
#include "lwpm/errors.hpp"
#include "lwpm/rng.hpp"

namespace lwpm {

enum class SaReturn { best, final_state };
enum class HcVariant { stochastic, steepest };

struct SolverConfig {
    std::uint64_t seed = 1;
    std::uint64_t max_iters = 10000;
    std::uint32_t restarts = 0;
    double t_initial = 10.0;
    double t_min = 0.001;
    double alpha = 0.95;
    bool forbid_zero = false;
    SaReturn sa_return = SaReturn::best;
    HcVariant hc_variant = HcVariant::stochastic;

    void validate() const {
        if (max_iters == 0) throw input_error("config: max-iters must be positive");
        if (!(t_initial > 0)) throw input_error("config: t-initial must be positive");
        if (!(t_min > 0)) throw input_error("config: t-min must be positive");
        if (!(alpha > 0 && alpha < 1)) throw input_error("config: alpha must be in (0,1)");
    }
};

/// Applies one "key=value" setting. Keys match the CLI flag spellings.
inline void apply_config_kv(SolverConfig& cfg, std::string_view key, const std::string& value) {
    try {
        if (key == "seed")
            cfg.seed = std::stoull(value);
        else if (key == "max-iters")
            cfg.max_iters = std::stoull(value);
        else if (key == "restarts")
            cfg.restarts = static_cast<std::uint32_t>(std::stoul(value));
        else if (key == "t-initial")
            cfg.t_initial = std::stod(value);
        else if (key == "t-min")
            cfg.t_min = std::stod(value);
        else if (key == "alpha")
            cfg.alpha = std::stod(value);
        else if (key == "forbid-zero")
            cfg.forbid_zero = value == "true" || value == "1";
        else if (key == "sa-return") {
            if (value == "best")
                cfg.sa_return = SaReturn::best;
            else if (value == "final")
                cfg.sa_return = SaReturn::final_state;
            else
                throw input_error("config: sa-return must be best or final, got '" + value + "'");
        } else if (key == "hc-variant") {
            if (value == "stochastic")
                cfg.hc_variant = HcVariant::stochastic;
            else if (value == "steepest")
                cfg.hc_variant = HcVariant::steepest;
            else
                throw input_error("config: hc-variant must be stochastic or steepest, got '" +
                                  value + "'");
        } else {
            throw input_error("config: unknown key '" + std::string(key) + "'");
        }
    } catch (const std::invalid_argument&) {
        throw input_error("config: bad value '" + value + "' for key '" + std::string(key) + "'");
    } catch (const std::out_of_range&) {
        throw input_error("config: value '" + value + "' out of range for key '" +
                          std::string(key) + "'");
    }
}

/// key=value lines; blank lines and lines starting with '#' are skipped.
inline void parse_config_stream(SolverConfig& cfg, std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        const std::size_t eq = line.find('=', start);
        if (eq == std::string::npos)
            throw input_error("config: expected key=value at line " + std::to_string(lineno));
        apply_config_kv(cfg, std::string_view(line).substr(start, eq - start),
                        line.substr(eq + 1));
    }
}

/// All assignments at Hamming distance exactly 1; the all-zero assignment
/// is excluded when forbid_zero is set.
inline std::vector<Assignment> neighbours(const Assignment& gamma, bool forbid_zero = false) {
    std::vector<Assignment> out;
    out.reserve(gamma.size());
    for (std::size_t j = 0; j < gamma.size(); ++j) {
        Assignment nb = gamma;
        nb.flip(j);
        if (forbid_zero && nb.none()) continue;
        out.push_back(std::move(nb));
    }
    return out;
}

namespace detail {

/// Per-constraint parity cache: flipping variable j touches only the
/// constraints containing j, so fitness deltas cost O(|column j|).
class FlipEvaluator {
   public:
    FlipEvaluator(const AffineSystem& s, Assignment start)
        : assign_(std::move(start)), cols_(s.variable_count()) {
        const std::size_t m = s.constraint_count();
        violated_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < s.variable_count(); ++j)
                if (s.row(i).get(j)) cols_[j].push_back(static_cast<std::uint32_t>(i));
            violated_[i] = s.row(i).and_parity(assign_) != s.rhs(i);
            nviol_ += violated_[i];
        }
    }

    std::size_t violations() const { return nviol_; }
    const Assignment& assignment() const { return assign_; }

    int delta(std::size_t var) const {
        int d = 0;
        for (const std::uint32_t i : cols_[var]) d += violated_[i] ? -1 : 1;
        return d;
    }

    void flip(std::size_t var) {
        for (const std::uint32_t i : cols_[var]) {
            violated_[i] ^= 1;
            nviol_ += violated_[i] ? 1 : -1;
        }
        assign_.flip(var);
    }

   private:
    Assignment assign_;
    std::vector<std::vector<std::uint32_t>> cols_;
    std::vector<std::uint8_t> violated_;
    std::size_t nviol_ = 0;
};

inline void check_start(const AffineSystem& s, const Assignment& gamma0, const SolverConfig& cfg) {
    cfg.validate();
    if (gamma0.size() != s.variable_count())
        throw input_error("start assignment length " + std::to_string(gamma0.size()) +
                          " does not match " + std::to_string(s.variable_count()) + " variables");
    if (cfg.forbid_zero && gamma0.none())
        throw solve_error("all-zero start with the zero assignment forbidden");
}

/// Index of the single set bit of a weight-1 vector.
inline std::size_t lone_bit(const Assignment& a) {
    for (std::size_t w = 0; w < a.words().size(); ++w)
        if (a.words()[w]) return 64 * w + static_cast<std::size_t>(std::countr_zero(a.words()[w]));
    return 0;
}

}  // namespace detail

/// Stochastic hill climbing: repeatedly pick a uniformly random member of
/// the best-fitness neighbour set, move if it does not worsen the fitness
/// (violation count), and stop once no neighbour is strictly better or the
/// iteration budget runs out. The steepest variant takes the lowest-index
/// best neighbour and only strictly improving moves.
inline Assignment hill_climb(const AffineSystem& s, const Assignment& gamma0,
                             const SolverConfig& cfg) {
    detail::check_start(s, gamma0, cfg);
    const std::size_t k = s.variable_count();
    detail::FlipEvaluator eval(s, gamma0);
    Xoshiro256StarStar rng(cfg.seed);

    std::vector<std::size_t> best;
    best.reserve(k);
    int dbest = 0;
    const auto scan = [&] {
        best.clear();
        dbest = std::numeric_limits<int>::max();
        const bool excl = cfg.forbid_zero && eval.assignment().count() == 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (excl && eval.assignment().get(j)) continue;  // this flip would reach zero
            const int d = eval.delta(j);
            if (d < dbest) {
                dbest = d;
                best.clear();
            }
            if (d == dbest) best.push_back(j);
        }
    };

    scan();
    for (std::uint64_t it = 0; it < cfg.max_iters && !best.empty(); ++it) {
        const std::size_t pick = cfg.hc_variant == HcVariant::stochastic
                                     ? best[rng.below(best.size())]
                                     : best.front();
        const bool take = cfg.hc_variant == HcVariant::stochastic ? dbest <= 0 : dbest < 0;
        if (take) eval.flip(pick);
        scan();
        if (dbest >= 0) break;  // current solution is no worse than all its neighbours
    }
    return eval.assignment();
}

/// Simulated annealing with geometric cooling: one uniformly random
/// neighbour per temperature step, worsening moves accepted with
/// probability exp((f_cur - f_neigh)/T), stop at T <= t_min. Returns the
/// best assignment visited unless cfg.sa_return selects the final state.
inline Assignment simulated_anneal(const AffineSystem& s, const Assignment& gamma0,
                                   const SolverConfig& cfg) {
    detail::check_start(s, gamma0, cfg);
    const std::size_t k = s.variable_count();
    detail::FlipEvaluator eval(s, gamma0);
    Xoshiro256StarStar rng(cfg.seed);

    Assignment best = eval.assignment();
    std::size_t best_f = eval.violations();

    for (double temp = cfg.t_initial; temp > cfg.t_min; temp *= cfg.alpha) {
        const bool excl = cfg.forbid_zero && eval.assignment().count() == 1;
        const std::size_t navail = k - (excl ? 1 : 0);
        if (navail == 0) break;
        std::size_t j = rng.below(navail);
        if (excl) {
            const std::size_t skip = detail::lone_bit(eval.assignment());
            if (j >= skip) ++j;
        }
        const int d = eval.delta(j);
        const bool accept = d <= 0 || rng.unit() < std::exp(-static_cast<double>(d) / temp);
        if (accept) {
            eval.flip(j);
            if (eval.violations() < best_f) {
                best_f = eval.violations();
                best = eval.assignment();
            }
        }
    }
    return cfg.sa_return == SaReturn::best ? best : eval.assignment();
}

}  // namespace lwpm
