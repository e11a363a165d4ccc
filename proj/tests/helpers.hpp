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

#include <cstdint>
#include <vector>

#include "lwpm/affine_sat.hpp"
#include "lwpm/gf2poly.hpp"
#include "lwpm/rng.hpp"

namespace testutil {

/// Random polynomial of degree exactly d.
inline lwpm::Gf2Poly random_poly(lwpm::Xoshiro256StarStar& rng, std::size_t d) {
    lwpm::BitVec bits = rng.bits(d + 1);
    bits.set(d, true);
    return lwpm::Gf2Poly::from_coeff_bits(bits);
}

inline lwpm::Gf2Poly random_poly_up_to(lwpm::Xoshiro256StarStar& rng, std::size_t max_degree) {
    return random_poly(rng, rng.below(max_degree + 1));
}

/// Test-local multiplication oracle: plain bit-by-bit convolution mod 2,
/// independent of the word-packed implementation under test.
inline lwpm::Gf2Poly convolve_oracle(const lwpm::Gf2Poly& a, const lwpm::Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t da = *a.degree(), db = *b.degree();
    std::vector<std::size_t> exps;
    for (std::size_t n = 0; n <= da + db; ++n) {
        bool bit = false;
        for (std::size_t i = 0; i <= n && i <= da; ++i)
            if (n - i <= db) bit = bit != (a.coeff(i) && b.coeff(n - i));
        if (bit) exps.push_back(n);
    }
    return lwpm::Gf2Poly::from_exponents(exps);
}

/// Random affine system with m constraints over k variables.
inline lwpm::AffineSystem random_system(lwpm::Xoshiro256StarStar& rng, std::size_t m,
                                        std::size_t k) {
    std::vector<lwpm::BitVec> rows;
    rows.reserve(m);
    for (std::size_t i = 0; i < m; ++i) rows.push_back(rng.bits(k));
    return lwpm::AffineSystem(std::move(rows), rng.bits(m));
}

}  // namespace testutil
