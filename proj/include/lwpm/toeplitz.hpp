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
#include "lwpm/gf2poly.hpp"

namespace lwpm {

/// The banded lower-triangular operator of a polynomial P of degree d with
/// t+1 columns: entry(i,j) = a_{i-j} for 0 <= i-j <= d, else 0. Column j is
/// column j-1 shifted down one position; multiplying by a coefficient vector
/// of Q yields the coefficient vector of P*Q. Stored implicitly as P plus
/// the column count.
class ToeplitzOperator {
   public:
    ToeplitzOperator(Gf2Poly poly, std::size_t cols) : poly_(std::move(poly)), cols_(cols) {
        if (poly_.is_zero()) throw input_error("Toeplitz operator of the zero polynomial");
        degree_ = *poly_.degree();
    }

    std::size_t rows() const { return degree_ + cols_; }
    std::size_t cols() const { return cols_; }
    std::size_t degree() const { return degree_; }
    const Gf2Poly& poly() const { return poly_; }

    bool entry(std::size_t i, std::size_t j) const {
        if (j > i || i - j > degree_) return false;
        return poly_.coeff(i - j);
    }

   private:
    Gf2Poly poly_;
    std::size_t cols_;
    std::size_t degree_;
};

/// Operator with d+t+1 rows and t+1 columns; first column is
/// (a_0,...,a_d,0,...,0).
inline ToeplitzOperator build(const Gf2Poly& p, std::size_t t) {
    return ToeplitzOperator(p, t + 1);
}

/// Matrix-vector product over GF(2), computed from the coefficients. The
/// result is the coefficient vector of P*Q for v = coefficients of Q.
inline BitVec matvec(const ToeplitzOperator& op, const BitVec& v) {
    if (v.size() != op.cols())
        throw input_error("matvec: vector length " + std::to_string(v.size()) +
                          " does not match " + std::to_string(op.cols()) + " columns");
    BitVec out(op.rows());
    for (std::size_t i = 0; i < op.rows(); ++i) {
        bool acc = false;
        const std::size_t jlo = i >= op.degree() ? i - op.degree() : 0;
        const std::size_t jhi = i < op.cols() ? i : op.cols() - 1;
        for (std::size_t j = jlo; j <= jhi; ++j) acc ^= op.entry(i, j) && v.get(j);
        if (acc) out.set(i, true);
    }
    return out;
}

/// Dense 0/1 matrix, row-major packed bits.
class BinaryMatrix {
   public:
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), bits_(rows, BitVec(cols)) {
        if (rows == 0 || cols == 0) throw input_error("matrix must have at least one row and column");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t i, std::size_t j) const { return bits_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { bits_[i].set(j, v); }
    const BitVec& row(std::size_t i) const { return bits_[i]; }

    bool operator==(const BinaryMatrix&) const = default;

   private:
    std::size_t rows_, cols_;
    std::vector<BitVec> bits_;
};

/// Text format: first line "m k", then m lines of exactly k characters from
/// {0,1}. Whitespace-only lines are ignored.
inline BinaryMatrix parse_matrix(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    const auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
                    line.pop_back();
                return true;
            }
        }
        return false;
    };
    if (!next_line()) throw input_error("matrix: missing header line");
    std::istringstream hdr(line);
    long long m = 0, k = 0;
    if (!(hdr >> m >> k) || m < 1 || k < 1)
        throw input_error("matrix: bad header at line " + std::to_string(lineno));
    std::string rest;
    if (hdr >> rest) throw input_error("matrix: bad header at line " + std::to_string(lineno));
    BinaryMatrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!next_line())
            throw input_error("matrix: expected " + std::to_string(m) + " rows, got " +
                              std::to_string(i));
        if (line.size() != a.cols())
            throw input_error("matrix: row at line " + std::to_string(lineno) + " has " +
                              std::to_string(line.size()) + " entries, expected " +
                              std::to_string(k));
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (line[j] == '1')
                a.set(i, j, true);
            else if (line[j] != '0')
                throw input_error("matrix: unexpected character '" + std::string(1, line[j]) +
                                  "' at line " + std::to_string(lineno));
        }
    }
    return a;
}

inline BinaryMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

inline void write_matrix(std::ostream& out, const BinaryMatrix& a) {
    out << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) out << a.row(i).to_string() << '\n';
}

inline std::string format_matrix(const BinaryMatrix& a) {
    std::ostringstream out;
    write_matrix(out, a);
    return out.str();
}

/// Dense materialization, for display and small tests.
inline BinaryMatrix to_matrix(const ToeplitzOperator& op) {
    BinaryMatrix a(op.rows(), op.cols());
    for (std::size_t i = 0; i < op.rows(); ++i)
        for (std::size_t j = 0; j < op.cols(); ++j)
            if (op.entry(i, j)) a.set(i, j, true);
    return a;
}

enum class ProjectionPolicy { majority, first_occurrence };

struct ProjectionConfig {
    ProjectionPolicy policy = ProjectionPolicy::majority;
    bool tie = true;  // majority ties resolve to this bit
};

/// Projects an m-by-k matrix to the nearest Toeplitz form: coefficient
/// a_delta is the majority bit of the diagonal i-j = delta (ties per
/// config), a_m is forced to 1 so deg(P) = m, and negative diagonals are
/// discarded. Returns (P, t) with t = k.
inline std::pair<Gf2Poly, std::size_t> project_toeplitz(const BinaryMatrix& a,
                                                        ProjectionConfig cfg = {}) {
    const std::size_t m = a.rows(), k = a.cols();
    std::vector<std::size_t> exps;
    for (std::size_t delta = 0; delta < m; ++delta) {
        bool bit;
        if (cfg.policy == ProjectionPolicy::first_occurrence) {
            bit = a.get(delta, 0);
        } else {
            const std::size_t len = std::min(m - delta, k);
            std::size_t ones = 0;
            for (std::size_t j = 0; j < len; ++j) ones += a.get(delta + j, j);
            if (2 * ones > len)
                bit = true;
            else if (2 * ones < len)
                bit = false;
            else
                bit = cfg.tie;
        }
        if (bit) exps.push_back(delta);
    }
    exps.push_back(m);  // forced leading coefficient
    return {Gf2Poly::from_exponents(exps), k};
}

}  // namespace lwpm
