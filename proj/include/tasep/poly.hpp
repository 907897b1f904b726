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

#ifndef TASEP_POLY_HPP
#define TASEP_POLY_HPP

#include <initializer_list>
#include <vector>

#include "tasep/rational.hpp"

namespace tasep {

// Dense univariate polynomial over Rational. Coefficients are stored by
// ascending power with trailing zeros trimmed; the zero polynomial has an
// empty coefficient vector and degree() == -1.
class Poly {
   public:
    Poly() = default;
    Poly(const Rational& constant);  // NOLINT: implicit by design
    Poly(int constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly monomial(int power, const Rational& coeff = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of x^k; zero beyond the degree.
    const Rational& operator[](int k) const;
    void set_coeff(int k, const Rational& value);

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }
    friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly pow(unsigned exponent) const;

    // p(x0 + s) as a polynomial in s.
    Poly shifted(const Rational& x0) const;

    std::string str() const;  // human-readable, for diagnostics

   private:
    void trim();
    std::vector<Rational> coeffs_;
};

// sum_k coeff_k(p) x^(m-k); requires degree(p) <= m.
Poly poly_reverse(const Poly& p, int m);

}  // namespace tasep

#endif
