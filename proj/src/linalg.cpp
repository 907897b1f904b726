/*
   Copyright 2026 the tasep-tq authors

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

#include "tasep/linalg.hpp"

#include <stdexcept>

#include "tasep/errors.hpp"

namespace tasep {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

Rational RatMatrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

Rational RatMatrix::max_abs() const {
    Rational m = 0;
    for (const auto& v : a_) {
        Rational w = abs(v);
        if (w > m) m = w;
    }
    return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] = a.a_[k] + b.a_[k];
    return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] = a.a_[k] - b.a_[k];
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
    RatMatrix out = a;
    for (auto& v : out.a_) v *= s;
    return out;
}

std::vector<Rational> solve_exact(const RatMatrix& a, const std::vector<Rational>& rhs) {
    const std::size_t m = a.rows(), n = a.cols();
    if (rhs.size() != m) throw std::invalid_argument("rhs size mismatch");
    RatMatrix w = a;
    std::vector<Rational> b = rhs;
    std::vector<std::size_t> pivot_row_of_col(n, SIZE_MAX);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t r = rank; r < m; ++r)
            if (w.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv == SIZE_MAX) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(rank, j));
        std::swap(b[piv], b[rank]);
        const Rational inv = 1 / w.at(rank, col);
        for (std::size_t j = col; j < n; ++j) w.at(rank, j) *= inv;
        b[rank] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank || w.at(r, col) == 0) continue;
            const Rational f = w.at(r, col);
            for (std::size_t j = col; j < n; ++j) w.at(r, j) -= f * w.at(rank, j);
            b[r] -= f * b[rank];
        }
        pivot_row_of_col[col] = rank;
        ++rank;
    }
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_row_of_col[col] == SIZE_MAX)
            throw SolverInconsistency("linear system is rank-deficient (free column " + std::to_string(col) + ")");
    for (std::size_t r = rank; r < m; ++r)
        if (b[r] != 0) throw SolverInconsistency("linear system is inconsistent (leftover row " + std::to_string(r) + ")");

    std::vector<Rational> u(n);
    for (std::size_t col = 0; col < n; ++col) u[col] = b[pivot_row_of_col[col]];

    // Exact re-verification against the original system.
    for (std::size_t r = 0; r < m; ++r) {
        Rational acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += a.at(r, j) * u[j];
        if (acc != rhs[r]) throw SolverInconsistency("solution fails original row " + std::to_string(r));
    }
    return u;
}

Poly charpoly(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: square matrix required");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RatMatrix acc = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc;
        Rational ck = -acc.trace() / Rational(static_cast<long>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += ck;
    }
    return Poly(std::move(c));
}

}  // namespace tasep
