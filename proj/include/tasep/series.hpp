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

#ifndef TASEP_SERIES_HPP
#define TASEP_SERIES_HPP

#include <vector>

#include "tasep/poly.hpp"
#include "tasep/rational.hpp"

namespace tasep {

// Truncated formal power series with Rational coefficients. A series of
// order N stores exactly N+1 coefficients; binary operations truncate to
// the smaller order and never extend.
class RatSeries {
   public:
    RatSeries() : coeffs_(1) {}
    explicit RatSeries(int order) : coeffs_(order + 1) {}
    RatSeries(int order, std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int k) const { return coeffs_[k]; }
    void set_coeff(int k, const Rational& v) { coeffs_[k] = v; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    RatSeries truncated(int order) const;

    RatSeries operator-() const;
    friend RatSeries operator+(const RatSeries& a, const RatSeries& b);
    friend RatSeries operator-(const RatSeries& a, const RatSeries& b);
    friend RatSeries operator*(const RatSeries& a, const RatSeries& b);
    friend RatSeries operator*(const Rational& s, const RatSeries& a);
    friend bool operator==(const RatSeries& a, const RatSeries& b) { return a.coeffs_ == b.coeffs_; }

    // 1/s; requires a nonzero constant term.
    RatSeries inverse() const;

    // Evaluation of the truncation at a numeric point.
    double eval_double(double t) const;

   private:
    std::vector<Rational> coeffs_;
};

// Series in B with Rational coefficients (the matrix-ansatz expansion
// parameter); structurally identical to any other scalar series.
using BSeries = RatSeries;

// log s with s(0) = 1.
RatSeries series_log(const RatSeries& s);
// exp s with s(0) = 0.
RatSeries series_exp(const RatSeries& s);
// outer(inner) with inner(0) = 0.
RatSeries series_compose(const RatSeries& outer, const RatSeries& inner);
// t with s(t(y)) = y + O(y^(N+1)); requires s(0) = 0 and s'(0) != 0.
RatSeries series_reversion(const RatSeries& s);
// exp(c*u) truncated at order N.
RatSeries exp_series(const Rational& c, int order);

// Truncated series in mu whose coefficients are polynomials in x.
class MuSeries {
   public:
    MuSeries() : coeffs_(1) {}
    explicit MuSeries(int order) : coeffs_(order + 1) {}
    MuSeries(int order, std::vector<Poly> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Poly& operator[](int j) const { return coeffs_[j]; }
    void set_coeff(int j, const Poly& p) { coeffs_[j] = p; }

    MuSeries truncated(int order) const;

    friend MuSeries operator+(const MuSeries& a, const MuSeries& b);
    friend MuSeries operator-(const MuSeries& a, const MuSeries& b);
    friend MuSeries operator*(const MuSeries& a, const MuSeries& b);
    friend MuSeries operator*(const Poly& p, const MuSeries& a);
    friend MuSeries operator*(const Rational& s, const MuSeries& a);
    friend bool operator==(const MuSeries& a, const MuSeries& b) { return a.coeffs_ == b.coeffs_; }

    // Substitutes a Rational x, leaving a scalar series in mu.
    RatSeries eval_x(const Rational& x) const;
    // d/dx applied to every coefficient.
    MuSeries derivative_x() const;
    // Numeric evaluation of the truncation.
    double eval_double(double x, double mu) const;

   private:
    std::vector<Poly> coeffs_;
};

// log s where the mu-constant coefficient is the constant polynomial 1.
MuSeries series_log(const MuSeries& s);

}  // namespace tasep

#endif
