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

#ifndef TASEP_LINALG_HPP
#define TASEP_LINALG_HPP

#include <cstddef>
#include <vector>

#include "tasep/poly.hpp"
#include "tasep/rational.hpp"

namespace tasep {

// Dense matrix over Rational, row-major.
class RatMatrix {
   public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    Rational trace() const;
    Rational max_abs() const;

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

   private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

// Solves an (over)determined exact linear system A u = rhs with a unique
// solution. Throws SolverInconsistency when the system is rank-deficient
// or inconsistent; the full solution is re-verified against every row.
std::vector<Rational> solve_exact(const RatMatrix& a, const std::vector<Rational>& rhs);

// Characteristic polynomial det(xI - m) by the Faddeev-LeVerrier recursion.
Poly charpoly(const RatMatrix& m);

}  // namespace tasep

#endif
