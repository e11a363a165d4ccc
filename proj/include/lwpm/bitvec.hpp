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
#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lwpm/errors.hpp"

namespace lwpm {

/// Fixed-length bit vector packed 64 bits per word, index 0 in the lowest
/// bit of word 0. Bits beyond size() are kept zero so whole-word operations
/// (popcount, equality) need no masking.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static BitVec from_string(std::string_view s) {
        BitVec v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(i, true);
            else if (s[i] != '0')
                throw input_error("bit string: unexpected character '" + std::string(1, s[i]) +
                                  "' at position " + std::to_string(i));
        }
        return v;
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        assert(i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool v) {
        assert(i < size_);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) {
        assert(i < size_);
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    std::span<const std::uint64_t> words() const { return words_; }

    /// Parity of the AND with another vector of the same size.
    bool and_parity(const BitVec& other) const {
        assert(size_ == other.size_);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
        return std::popcount(acc) & 1u;
    }

    std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    bool operator==(const BitVec&) const = default;

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Lexicographic order with index 0 most significant: the vector with a 0 at
/// the first differing index is the smaller one. Sizes must match.
inline bool lex_less(const BitVec& a, const BitVec& b) {
    assert(a.size() == b.size());
    const auto wa = a.words(), wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) {
        const std::uint64_t diff = wa[i] ^ wb[i];
        if (diff) {
            const int j = std::countr_zero(diff);
            return ((wa[i] >> j) & 1u) == 0;
        }
    }
    return false;
}

}  // namespace lwpm
