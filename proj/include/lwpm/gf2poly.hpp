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
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lwpm/bitvec.hpp"
#include "lwpm/errors.hpp"

namespace lwpm {

namespace detail {

/// dst ^= src << shift, word-packed. dst must be large enough.
inline void xor_shifted(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src,
                        std::size_t shift) {
    const std::size_t wordoff = shift >> 6;
    const unsigned bitoff = shift & 63;
    if (bitoff == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[wordoff + i] ^= src[i];
    } else {
        for (std::size_t i = 0; i < src.size(); ++i) {
            dst[wordoff + i] ^= src[i] << bitoff;
            dst[wordoff + i + 1] ^= src[i] >> (64 - bitoff);
        }
    }
}

inline std::optional<std::size_t> top_bit(const std::vector<std::uint64_t>& words) {
    for (std::size_t i = words.size(); i-- > 0;)
        if (words[i]) return 64 * i + (63 - static_cast<std::size_t>(std::countl_zero(words[i])));
    return std::nullopt;
}

}  // namespace detail

/// Polynomial over GF(2), coefficient of x^i stored in bit i. Values are
/// immutable after construction; the zero polynomial has no degree.
class Gf2Poly {
   public:
    Gf2Poly() = default;

    static Gf2Poly zero() { return {}; }

    static Gf2Poly one() { return monomial(0); }

    static Gf2Poly monomial(std::size_t k) {
        Gf2Poly p;
        p.words_.resize(k / 64 + 1, 0);
        p.words_[k / 64] = std::uint64_t{1} << (k & 63);
        return p;
    }

    /// Exponents toggle, so duplicates cancel mod 2.
    static Gf2Poly from_exponents(std::span<const std::size_t> exps) {
        Gf2Poly p;
        for (std::size_t e : exps) p.toggle(e);
        p.trim();
        return p;
    }

    static Gf2Poly from_exponents(std::initializer_list<std::size_t> exps) {
        return from_exponents(std::span<const std::size_t>(exps.begin(), exps.size()));
    }

    static Gf2Poly from_coeff_bits(const BitVec& bits) {
        Gf2Poly p;
        p.words_.assign(bits.words().begin(), bits.words().end());
        p.trim();
        return p;
    }

    bool is_zero() const { return words_.empty(); }

    bool coeff(std::size_t i) const {
        if (i / 64 >= words_.size()) return false;
        return (words_[i / 64] >> (i & 63)) & 1u;
    }

    std::optional<std::size_t> degree() const { return detail::top_bit(words_); }

    std::size_t weight() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// The first n coefficients a_0..a_{n-1} as a bit vector.
    BitVec coeff_bits(std::size_t n) const {
        BitVec v(n);
        for (std::size_t i = 0; i < n; ++i)
            if (coeff(i)) v.set(i, true);
        return v;
    }

    std::vector<std::size_t> exponents() const {
        std::vector<std::size_t> out;
        out.reserve(weight());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(64 * i + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    std::span<const std::uint64_t> words() const { return words_; }

    friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
        Gf2Poly r;
        const auto &longer = a.words_.size() >= b.words_.size() ? a.words_ : b.words_,
                   &shorter = a.words_.size() >= b.words_.size() ? b.words_ : a.words_;
        r.words_ = longer;
        for (std::size_t i = 0; i < shorter.size(); ++i) r.words_[i] ^= shorter[i];
        r.trim();
        return r;
    }

    /// Carryless schoolbook convolution, word-shifted XOR per set bit.
    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Gf2Poly r;
        r.words_.assign((*a.degree() + *b.degree()) / 64 + 2, 0);
        for (std::size_t i = 0; i < b.words_.size(); ++i) {
            std::uint64_t w = b.words_[i];
            while (w) {
                const std::size_t j = 64 * i + static_cast<std::size_t>(std::countr_zero(w));
                detail::xor_shifted(r.words_, a.words_, j);
                w &= w - 1;
            }
        }
        r.trim();
        return r;
    }

    bool operator==(const Gf2Poly&) const = default;

   private:
    void toggle(std::size_t i) {
        if (i / 64 >= words_.size()) words_.resize(i / 64 + 1, 0);
        words_[i / 64] ^= std::uint64_t{1} << (i & 63);
    }

    void trim() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }

    friend std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& k, const Gf2Poly& p);

    std::vector<std::uint64_t> words_;
};

/// Long division over GF(2): k = q*p + r with r = 0 or deg(r) < deg(p).
inline std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& k, const Gf2Poly& p) {
    if (p.is_zero()) throw input_error("zero divisor");
    Gf2Poly q, r = k;
    r.words_.push_back(0);  // headroom for the shifted-xor high word
    const std::size_t dp = *p.degree();
    for (auto dr = detail::top_bit(r.words_); dr && *dr >= dp; dr = detail::top_bit(r.words_)) {
        const std::size_t shift = *dr - dp;
        detail::xor_shifted(r.words_, p.words(), shift);
        q.toggle(shift);
    }
    q.trim();
    r.trim();
    return {std::move(q), std::move(r)};
}

inline bool divides(const Gf2Poly& p, const Gf2Poly& k) {
    if (p.is_zero()) throw input_error("zero divisor");
    if (k.is_zero()) return true;
    return divmod(k, p).second.is_zero();
}

enum class PolyStyle { algebraic, exponent_list };

namespace detail {

inline std::size_t parse_uint(std::string_view text, std::size_t& pos, const char* what) {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
        throw input_error(std::string("expected ") + what + " at position " + std::to_string(pos));
    std::size_t v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (v > 100'000'000)
            throw input_error(std::string(what) + " too large at position " + std::to_string(pos));
        ++pos;
    }
    return v;
}

}  // namespace detail

/// Accepted styles: algebraic terms "1", "x", "x^k" joined by "+"
/// (whitespace-insensitive, "0" stands for the zero polynomial), or a
/// comma-separated exponent list. Duplicate terms cancel mod 2.
inline Gf2Poly parse_poly(std::string_view text, PolyStyle style = PolyStyle::algebraic) {
    std::vector<std::size_t> exps;
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    if (style == PolyStyle::algebraic) {
        skip_ws();
        if (pos >= text.size()) throw input_error("expected term at position 0");
        bool want_term = true;
        while (pos < text.size()) {
            if (want_term) {
                const char c = text[pos];
                if (c == '0') {
                    ++pos;  // zero contributes nothing
                } else if (c == '1') {
                    exps.push_back(0);
                    ++pos;
                } else if (c == 'x') {
                    ++pos;
                    if (pos < text.size() && text[pos] == '^') {
                        ++pos;
                        exps.push_back(detail::parse_uint(text, pos, "exponent"));
                    } else {
                        exps.push_back(1);
                    }
                } else {
                    throw input_error("expected term at position " + std::to_string(pos));
                }
            } else {
                if (text[pos] != '+')
                    throw input_error("expected '+' at position " + std::to_string(pos));
                ++pos;
            }
            want_term = !want_term;
            skip_ws();
        }
        if (want_term) throw input_error("expected term at position " + std::to_string(pos));
    } else {
        skip_ws();
        if (pos >= text.size()) return {};  // empty list is the zero polynomial
        while (true) {
            exps.push_back(detail::parse_uint(text, pos, "exponent"));
            skip_ws();
            if (pos >= text.size()) break;
            if (text[pos] != ',')
                throw input_error("expected ',' at position " + std::to_string(pos));
            ++pos;
            skip_ws();
        }
    }
    return Gf2Poly::from_exponents(exps);
}

inline std::string format_poly(const Gf2Poly& p, PolyStyle style = PolyStyle::algebraic) {
    const auto exps = p.exponents();
    std::string out;
    if (style == PolyStyle::algebraic) {
        if (exps.empty()) return "0";
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (i) out += " + ";
            if (exps[i] == 0)
                out += "1";
            else if (exps[i] == 1)
                out += "x";
            else
                out += "x^" + std::to_string(exps[i]);
        }
    } else {
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(exps[i]);
        }
    }
    return out;
}

}  // namespace lwpm
