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
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lwpm/bitvec.hpp"
#include "lwpm/errors.hpp"
#include "lwpm/toeplitz.hpp"

namespace lwpm {

using Assignment = BitVec;

/// m affine constraints x_{i1} xor ... xor x_{il} = b over k variables,
/// stored as dense coefficient rows plus a right-hand-side bit per row.
/// Empty supports ("0 = b") are allowed, and k may be 0 for systems whose
/// every variable has been eliminated by pinning.
class AffineSystem {
   public:
    AffineSystem(std::vector<BitVec> rows, BitVec rhs)
        : rows_(std::move(rows)), rhs_(std::move(rhs)) {
        if (rows_.empty()) throw input_error("affine system must have at least one constraint");
        if (rhs_.size() != rows_.size())
            throw input_error("affine system: rhs length does not match constraint count");
        k_ = rows_.front().size();
        for (const auto& r : rows_)
            if (r.size() != k_) throw input_error("affine system: ragged constraint rows");
    }

    static AffineSystem homogeneous(std::vector<BitVec> rows) {
        BitVec rhs(rows.size());
        return AffineSystem(std::move(rows), std::move(rhs));
    }

    std::size_t constraint_count() const { return rows_.size(); }
    std::size_t variable_count() const { return k_; }
    const BitVec& row(std::size_t i) const { return rows_[i]; }
    bool rhs(std::size_t i) const { return rhs_.get(i); }
    const BitVec& rhs_bits() const { return rhs_; }

    bool operator==(const AffineSystem&) const = default;

   private:
    std::vector<BitVec> rows_;
    BitVec rhs_;
    std::size_t k_;
};

inline std::size_t satisfied_count(const AffineSystem& s, const Assignment& gamma) {
    if (gamma.size() != s.variable_count())
        throw input_error("assignment length " + std::to_string(gamma.size()) +
                          " does not match " + std::to_string(s.variable_count()) + " variables");
    std::size_t count = 0;
    for (std::size_t i = 0; i < s.constraint_count(); ++i)
        count += s.row(i).and_parity(gamma) == s.rhs(i);
    return count;
}

inline std::size_t violation_count(const AffineSystem& s, const Assignment& gamma) {
    return s.constraint_count() - satisfied_count(s, gamma);
}

/// One homogeneous constraint per operator row: the measure of an
/// assignment under this system complements the weight of the lifted
/// product polynomial.
inline AffineSystem from_toeplitz(const ToeplitzOperator& op) {
    std::vector<BitVec> rows;
    rows.reserve(op.rows());
    for (std::size_t i = 0; i < op.rows(); ++i) {
        BitVec row(op.cols());
        const std::size_t jlo = i >= op.degree() ? i - op.degree() : 0;
        const std::size_t jhi = i < op.cols() ? i : op.cols() - 1;
        for (std::size_t j = jlo; j <= jhi; ++j)
            if (op.entry(i, j)) row.set(j, true);
        rows.push_back(std::move(row));
    }
    return AffineSystem::homogeneous(std::move(rows));
}

/// Constraint rows taken directly from a 0/1 matrix; zero rhs unless given.
inline AffineSystem from_matrix_rows(const BinaryMatrix& a) {
    std::vector<BitVec> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
    return AffineSystem::homogeneous(std::move(rows));
}

inline AffineSystem from_matrix_rows(const BinaryMatrix& a, BitVec rhs) {
    std::vector<BitVec> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
    return AffineSystem(std::move(rows), std::move(rhs));
}

struct ExhaustiveResult {
    Assignment assignment;
    std::size_t satisfied;
};

/// Scans all 2^k assignments with a Gray-code walk and incremental parity
/// updates. Ties break toward the lexicographically smallest assignment
/// (bit 0 most significant).
inline ExhaustiveResult exhaustive_solve(const AffineSystem& s, bool forbid_zero = false,
                                         std::size_t cap = 26) {
    const std::size_t k = s.variable_count(), m = s.constraint_count();
    if (k > cap) throw input_error("instance too large for exhaustive search");
    if (k == 0) {
        if (forbid_zero) throw solve_error("no nonzero assignment exists");
        return {Assignment(0), satisfied_count(s, Assignment(0))};
    }

    std::vector<std::vector<std::uint32_t>> cols(k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (s.row(i).get(j)) cols[j].push_back(static_cast<std::uint32_t>(i));

    std::vector<std::uint8_t> violated(m);
    std::size_t nviol = 0;
    for (std::size_t i = 0; i < m; ++i) {
        violated[i] = s.rhs(i);  // all-zero assignment violates rows with rhs 1
        nviol += violated[i];
    }

    const auto lex_less_bits = [](std::uint64_t a, std::uint64_t b) {
        const std::uint64_t diff = a ^ b;
        if (!diff) return false;
        return ((a >> std::countr_zero(diff)) & 1u) == 0;
    };

    std::uint64_t current = 0, best_bits = 0;
    std::size_t best_sat = 0;
    bool have_best = false;
    const auto consider = [&] {
        const std::size_t sat = m - nviol;
        if (!have_best || sat > best_sat || (sat == best_sat && lex_less_bits(current, best_bits))) {
            have_best = true;
            best_sat = sat;
            best_bits = current;
        }
    };
    if (!forbid_zero) consider();

    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t c = 1; c < total; ++c) {
        const int j = std::countr_zero(c);  // Gray-code step flips exactly this bit
        current ^= std::uint64_t{1} << j;
        for (const std::uint32_t i : cols[static_cast<std::size_t>(j)]) {
            violated[i] ^= 1;
            nviol += violated[i] ? 1 : -1;
        }
        consider();
    }

    Assignment out(k);
    for (std::size_t j = 0; j < k; ++j)
        if ((best_bits >> j) & 1u) out.set(j, true);
    return {std::move(out), best_sat};
}

/// Text format: first line "m k", then m lines "b: i1 i2 ... il" with a
/// rhs bit, a colon and 0-based variable indices. Repeated indices cancel.
inline AffineSystem parse_system(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    const auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                while (!line.empty() &&
                       (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
                    line.pop_back();
                return true;
            }
        }
        return false;
    };
    if (!next_line()) throw input_error("system: missing header line");
    std::istringstream hdr(line);
    long long m = 0, k = -1;
    std::string rest;
    if (!(hdr >> m >> k) || m < 1 || k < 0 || (hdr >> rest))
        throw input_error("system: bad header at line " + std::to_string(lineno));
    std::vector<BitVec> rows;
    BitVec rhs(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line())
            throw input_error("system: expected " + std::to_string(m) + " constraints, got " +
                              std::to_string(i));
        std::istringstream row(line);
        int b = -1;
        char colon = 0;
        if (!(row >> b >> colon) || (b != 0 && b != 1) || colon != ':')
            throw input_error("system: bad constraint at line " + std::to_string(lineno));
        rhs.set(static_cast<std::size_t>(i), b == 1);
        BitVec support(static_cast<std::size_t>(k));
        long long idx;
        while (row >> idx) {
            if (idx < 0 || idx >= k)
                throw input_error("system: variable index " + std::to_string(idx) +
                                  " out of range at line " + std::to_string(lineno));
            support.flip(static_cast<std::size_t>(idx));
        }
        if (!row.eof())
            throw input_error("system: bad constraint at line " + std::to_string(lineno));
        rows.push_back(std::move(support));
    }
    return AffineSystem(std::move(rows), std::move(rhs));
}

inline AffineSystem parse_system(const std::string& text) {
    std::istringstream in(text);
    return parse_system(in);
}

inline void write_system(std::ostream& out, const AffineSystem& s) {
    out << s.constraint_count() << ' ' << s.variable_count() << '\n';
    for (std::size_t i = 0; i < s.constraint_count(); ++i) {
        out << (s.rhs(i) ? '1' : '0') << ':';
        for (std::size_t j = 0; j < s.variable_count(); ++j)
            if (s.row(i).get(j)) out << ' ' << j;
        out << '\n';
    }
}

inline std::string format_system(const AffineSystem& s) {
    std::ostringstream out;
    write_system(out, s);
    return out.str();
}

}  // namespace lwpm
