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

#include "lwpm/bitvec.hpp"

namespace lwpm {

/// splitmix64, used to expand seeds.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

   private:
    std::uint64_t state_;
};

/// xoshiro256** with splitmix64 seeding. The generator is pinned (not
/// std::mt19937 or libc rand) so seeded runs reproduce bit-identically
/// across platforms and standard libraries.
class Xoshiro256StarStar {
   public:
    explicit Xoshiro256StarStar(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& s : state_) s = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Unbiased integer in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        unsigned __int128 mul = static_cast<unsigned __int128>(next()) * n;
        auto low = static_cast<std::uint64_t>(mul);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                mul = static_cast<unsigned __int128>(next()) * n;
                low = static_cast<std::uint64_t>(mul);
            }
        }
        return static_cast<std::uint64_t>(mul >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bit() { return next() >> 63; }

    /// Uniform random bit vector of length n.
    BitVec bits(std::size_t n) {
        BitVec v(n);
        for (std::size_t i = 0; i < n; ++i)
            if (bit()) v.set(i, true);
        return v;
    }

    /// Uniform random nonzero bit vector of length n >= 1.
    BitVec nonzero_bits(std::size_t n) {
        while (true) {
            BitVec v = bits(n);
            if (v.any()) return v;
        }
    }

   private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

}  // namespace lwpm
