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

#include "tasep/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace tasep {

namespace {
const Rational kZero = 0;
}

Poly::Poly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::monomial(int power, const Rational& coeff) {
    Poly p;
    if (coeff != 0) {
        p.coeffs_.assign(power + 1, Rational(0));
        p.coeffs_[power] = coeff;
    }
    return p;
}

const Rational& Poly::operator[](int k) const {
    if (k < 0 || k > degree()) return kZero;
    return coeffs_[k];
}

void Poly::set_coeff(int k, const Rational& value) {
    if (k < 0) throw std::invalid_argument("negative power");
    if (k >= static_cast<int>(coeffs_.size())) coeffs_.resize(k + 1);
    coeffs_[k] = value;
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly();
    Poly out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    out.trim();
    return out;
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s == 0) return Poly();
    Poly out = p;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    Poly out;
    if (degree() < 1) return out;
    out.coeffs_.resize(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) out.coeffs_[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
    out.trim();
    return out;
}

Poly Poly::pow(unsigned exponent) const {
    Poly acc = Poly(Rational(1));
    Poly base = *this;
    unsigned n = exponent;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        if (n >>= 1) base = base * base;
    }
    return acc;
}

Poly Poly::shifted(const Rational& x0) const {
    // Taylor shift by repeated synthetic division.
    const int n = degree();
    Poly out;
    if (n < 0) return out;
    out.coeffs_ = coeffs_;
    for (int k = 0; k < n; ++k)
        for (int i = n - 1; i >= k; --i) out.coeffs_[i] += x0 * out.coeffs_[i + 1];
    out.trim();
    return out;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << " + ";
        os << to_string(coeffs_[k]);
        if (k > 0) os << "*x^" << k;
        first = false;
    }
    return os.str();
}

Poly poly_reverse(const Poly& p, int m) {
    if (p.degree() > m) throw std::invalid_argument("poly_reverse: degree exceeds target power");
    Poly out;
    for (int k = 0; k <= p.degree(); ++k)
        if (p[k] != 0) out += Poly::monomial(m - k, p[k]);
    return out;
}

}  // namespace tasep
