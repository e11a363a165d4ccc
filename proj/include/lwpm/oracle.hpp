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
#include <vector>

#include "lwpm/affine_sat.hpp"
#include "lwpm/bitvec.hpp"
#include "lwpm/errors.hpp"
#include "lwpm/gf2poly.hpp"

// Ground-truth brute-force solvers for small instances. These deliberately
// re-implement multiplication and constraint evaluation with their own
// naive loops instead of calling the main code paths, so that a bug in one
// side cannot cancel against the other in tests.

namespace lwpm {

// Lexicographic order on coefficient/assignment bits with index 0 most
// significant, for deterministic tie-breaking.
namespace oracle_detail {
inline bool lex_less_u64(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (!diff) return false;
    return ((a >> std::countr_zero(diff)) & 1u) == 0;
}
}  // namespace oracle_detail

struct BruteMinPmResult {
    Gf2Poly k;
    Gf2Poly q;
    std::size_t weight = 0;
};

/// Enumerates every nonzero Q with deg(Q) <= t = n - d - 1 and multiplies
/// it out coefficient by coefficient; keeps the minimum-weight product,
/// ties broken by the smallest coefficient vector of Q read as a
/// little-endian integer (the first one found).
inline BruteMinPmResult brute_min_pm(const Gf2Poly& p, std::uint64_t n, std::size_t cap = 26) {
    if (p.is_zero()) throw input_error("instance polynomial must be nonzero");
    const std::size_t d = *p.degree();
    if (n <= d) throw input_error("degree bound must exceed deg(P)");
    const std::size_t t = static_cast<std::size_t>(n) - d - 1;
    if (t + 1 > cap) throw input_error("instance too large for exhaustive search");

    const std::vector<std::size_t> pexp = p.exponents();
    std::vector<std::uint8_t> kbits(static_cast<std::size_t>(n));
    std::uint64_t best_q = 0;
    std::size_t best_w = 0;
    bool have_best = false;

    const std::uint64_t total = std::uint64_t{1} << (t + 1);
    for (std::uint64_t qb = 1; qb < total; ++qb) {
        kbits.assign(kbits.size(), 0);
        for (std::size_t i = 0; i <= t; ++i)
            if ((qb >> i) & 1u)
                for (const std::size_t e : pexp) kbits[e + i] ^= 1;
        std::size_t w = 0;
        for (const std::uint8_t b : kbits) w += b;
        if (!have_best || w < best_w) {
            have_best = true;
            best_w = w;
            best_q = qb;
        }
    }

    std::vector<std::size_t> qexp;
    for (std::size_t i = 0; i <= t; ++i)
        if ((best_q >> i) & 1u) qexp.push_back(i);
    BruteMinPmResult out;
    out.q = Gf2Poly::from_exponents(qexp);
    out.k = p * out.q;
    out.weight = best_w;
    return out;
}

struct BruteMaxSatResult {
    Assignment assignment;
    std::size_t satisfied = 0;
};

/// Plain enumeration of all 2^k assignments with full per-row re-evaluation.
/// Same contract as exhaustive_solve, separate implementation.
inline BruteMaxSatResult brute_maxsat(const AffineSystem& s, bool forbid_zero = false,
                                      std::size_t cap = 26) {
    const std::size_t k = s.variable_count(), m = s.constraint_count();
    if (k > cap) throw input_error("instance too large for exhaustive search");
    if (forbid_zero && k == 0) throw solve_error("no nonzero assignment exists");

    std::vector<std::uint64_t> masks(m);
    std::vector<std::uint8_t> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        masks[i] = k ? s.row(i).words()[0] : 0;
        rhs[i] = s.rhs(i);
    }

    std::uint64_t best_x = 0;
    std::size_t best_sat = 0;
    bool have_best = false;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t x = forbid_zero ? 1 : 0; x < total; ++x) {
        std::size_t sat = 0;
        for (std::size_t i = 0; i < m; ++i)
            sat += (std::popcount(masks[i] & x) & 1) == rhs[i];
        if (!have_best || sat > best_sat ||
            (sat == best_sat && oracle_detail::lex_less_u64(x, best_x))) {
            have_best = true;
            best_sat = sat;
            best_x = x;
        }
    }

    Assignment out(k);
    for (std::size_t j = 0; j < k; ++j)
        if ((best_x >> j) & 1u) out.set(j, true);
    return {std::move(out), best_sat};
}

}  // namespace lwpm
