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

#include <sstream>

#include <catch2/catch.hpp>

#include "helpers.hpp"
#include "lwpm/metaheuristics.hpp"

using lwpm::Assignment;
using lwpm::BitVec;
using lwpm::SolverConfig;

TEST_CASE("neighbourhood is the Hamming-1 sphere", "[metaheuristics]") {
    const auto n0 = lwpm::neighbours(BitVec(2));
    REQUIRE(n0.size() == 2);
    CHECK(n0[0].to_string() == "10");
    CHECK(n0[1].to_string() == "01");

    CHECK(lwpm::neighbours(BitVec::from_string("1"), true).empty());

    lwpm::Xoshiro256StarStar rng(71);
    for (int i = 0; i < 20; ++i) {
        const std::size_t k = 1 + rng.below(30);
        const auto gamma = rng.bits(k);
        CHECK(lwpm::neighbours(gamma).size() == k);
        for (const auto& nb : lwpm::neighbours(gamma, true)) CHECK(nb.any());
    }
}

TEST_CASE("hill climbing solves the one-variable system", "[metaheuristics]") {
    const auto s = lwpm::parse_system("1 1\n1: 0\n");
    const auto result = lwpm::hill_climb(s, BitVec(1), {});
    CHECK(result.to_string() == "1");
    CHECK(lwpm::violation_count(s, result) == 0);
}

TEST_CASE("hill climbing never worsens and ends at a local minimum", "[metaheuristics]") {
    lwpm::Xoshiro256StarStar rng(73);
    for (int i = 0; i < 100; ++i) {
        const auto s = testutil::random_system(rng, 1 + rng.below(30), 1 + rng.below(15));
        const auto gamma0 = rng.bits(s.variable_count());
        SolverConfig cfg;
        cfg.seed = rng.next();
        const auto result = lwpm::hill_climb(s, gamma0, cfg);
        const std::size_t f = lwpm::violation_count(s, result);
        CHECK(f <= lwpm::violation_count(s, gamma0));
        for (const auto& nb : lwpm::neighbours(result))
            CHECK(lwpm::violation_count(s, nb) >= f);  // no strictly better neighbour
    }
}

TEST_CASE("a local minimum start keeps its fitness", "[metaheuristics]") {
    // x_0 = 0, x_1 = 0: the zero assignment is the global optimum.
    const auto s = lwpm::parse_system("2 2\n0: 0\n0: 1\n");
    const auto result = lwpm::hill_climb(s, BitVec(2), {});
    CHECK(lwpm::violation_count(s, result) == 0);
}

TEST_CASE("solvers are deterministic given the seed", "[metaheuristics]") {
    lwpm::Xoshiro256StarStar rng(79);
    for (int i = 0; i < 20; ++i) {
        const auto s = testutil::random_system(rng, 1 + rng.below(25), 1 + rng.below(12));
        const auto gamma0 = rng.bits(s.variable_count());
        SolverConfig cfg;
        cfg.seed = rng.next();
        CHECK(lwpm::hill_climb(s, gamma0, cfg) == lwpm::hill_climb(s, gamma0, cfg));
        CHECK(lwpm::simulated_anneal(s, gamma0, cfg) == lwpm::simulated_anneal(s, gamma0, cfg));
        SolverConfig steep = cfg;
        steep.hc_variant = lwpm::HcVariant::steepest;
        CHECK(lwpm::hill_climb(s, gamma0, steep) == lwpm::hill_climb(s, gamma0, steep));
    }
}

TEST_CASE("start assignment errors", "[metaheuristics]") {
    const auto s = lwpm::parse_system("1 2\n1: 0 1\n");
    CHECK_THROWS_AS(lwpm::hill_climb(s, BitVec(3), {}), lwpm::input_error);
    SolverConfig forbid;
    forbid.forbid_zero = true;
    CHECK_THROWS_AS(lwpm::hill_climb(s, BitVec(2), forbid), lwpm::solve_error);
    CHECK_THROWS_AS(lwpm::simulated_anneal(s, BitVec(2), forbid), lwpm::solve_error);
    SolverConfig bad;
    bad.alpha = 1.0;
    CHECK_THROWS_AS(lwpm::simulated_anneal(s, BitVec(2), bad), lwpm::input_error);
}

TEST_CASE("forbid_zero is honored by both solvers", "[metaheuristics]") {
    lwpm::Xoshiro256StarStar rng(83);
    for (int i = 0; i < 50; ++i) {
        // homogeneous systems pull toward zero, the hardest case for the flag
        std::vector<BitVec> rows;
        const std::size_t m = 1 + rng.below(15), k = 1 + rng.below(8);
        for (std::size_t r = 0; r < m; ++r) rows.push_back(rng.bits(k));
        const auto s = lwpm::AffineSystem::homogeneous(std::move(rows));
        SolverConfig cfg;
        cfg.seed = rng.next();
        cfg.forbid_zero = true;
        const auto gamma0 = rng.nonzero_bits(k);
        CHECK(lwpm::hill_climb(s, gamma0, cfg).any());
        CHECK(lwpm::simulated_anneal(s, gamma0, cfg).any());
    }
}

TEST_CASE("annealing returns the start when already cold", "[metaheuristics]") {
    const auto s = lwpm::parse_system("1 1\n1: 0\n");
    SolverConfig cfg;
    cfg.t_initial = 0.5;
    cfg.t_min = 1.0;
    const auto gamma0 = BitVec(1);
    CHECK(lwpm::simulated_anneal(s, gamma0, cfg) == gamma0);
}

TEST_CASE("annealing finds the one-flip optimum", "[metaheuristics]") {
    const auto s = lwpm::parse_system("1 1\n1: 0\n");
    SolverConfig cfg;
    cfg.t_initial = 10.0;
    cfg.t_min = 0.01;
    cfg.alpha = 0.9;
    const auto result = lwpm::simulated_anneal(s, BitVec(1), cfg);
    CHECK(result.to_string() == "1");
}

TEST_CASE("annealing best-visited never exceeds the start fitness", "[metaheuristics]") {
    lwpm::Xoshiro256StarStar rng(89);
    for (int i = 0; i < 50; ++i) {
        const auto s = testutil::random_system(rng, 1 + rng.below(25), 1 + rng.below(12));
        const auto gamma0 = rng.bits(s.variable_count());
        SolverConfig cfg;
        cfg.seed = rng.next();
        const auto best = lwpm::simulated_anneal(s, gamma0, cfg);
        CHECK(lwpm::violation_count(s, best) <= lwpm::violation_count(s, gamma0));

        SolverConfig fin = cfg;
        fin.sa_return = lwpm::SaReturn::final_state;
        CHECK(lwpm::violation_count(s, best) <=
              lwpm::violation_count(s, lwpm::simulated_anneal(s, gamma0, fin)));
    }
}

TEST_CASE("a single near-frozen step never accepts a worsening move", "[metaheuristics]") {
    // gamma0 = (1) is optimal; the only neighbour strictly worsens.
    const auto s = lwpm::parse_system("1 1\n1: 0\n");
    const auto gamma0 = BitVec::from_string("1");
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        SolverConfig cfg;
        cfg.seed = seed;
        cfg.t_initial = 1e-3;
        cfg.t_min = 0.9e-3;
        cfg.alpha = 0.5;  // one temperature step, worsening probability exp(-1000)
        cfg.sa_return = lwpm::SaReturn::final_state;
        CHECK(lwpm::simulated_anneal(s, gamma0, cfg) == gamma0);
    }
}

TEST_CASE("steepest variant improves monotonically", "[metaheuristics]") {
    lwpm::Xoshiro256StarStar rng(97);
    for (int i = 0; i < 30; ++i) {
        const auto s = testutil::random_system(rng, 1 + rng.below(25), 1 + rng.below(12));
        const auto gamma0 = rng.bits(s.variable_count());
        SolverConfig cfg;
        cfg.hc_variant = lwpm::HcVariant::steepest;
        const auto result = lwpm::hill_climb(s, gamma0, cfg);
        CHECK(lwpm::violation_count(s, result) <= lwpm::violation_count(s, gamma0));
        for (const auto& nb : lwpm::neighbours(result))
            CHECK(lwpm::violation_count(s, nb) >= lwpm::violation_count(s, result));
    }
}

TEST_CASE("config files parse and reject unknown keys", "[metaheuristics]") {
    SolverConfig cfg;
    std::istringstream in(
        "# solver settings\n"
        "seed=42\n"
        "max-iters=500\n"
        "t-initial=2.5\n"
        "alpha=0.9\n"
        "forbid-zero=true\n"
        "sa-return=final\n"
        "hc-variant=steepest\n");
    lwpm::parse_config_stream(cfg, in);
    CHECK(cfg.seed == 42);
    CHECK(cfg.max_iters == 500);
    CHECK(cfg.t_initial == 2.5);
    CHECK(cfg.alpha == 0.9);
    CHECK(cfg.forbid_zero);
    CHECK(cfg.sa_return == lwpm::SaReturn::final_state);
    CHECK(cfg.hc_variant == lwpm::HcVariant::steepest);

    std::istringstream bad1("cooling=0.5\n");
    CHECK_THROWS_WITH(lwpm::parse_config_stream(cfg, bad1), Catch::Contains("cooling"));
    std::istringstream bad2("alpha=hot\n");
    CHECK_THROWS_AS(lwpm::parse_config_stream(cfg, bad2), lwpm::input_error);
    std::istringstream bad3("just a line\n");
    CHECK_THROWS_AS(lwpm::parse_config_stream(cfg, bad3), lwpm::input_error);
}
