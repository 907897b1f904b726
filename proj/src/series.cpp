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

#include "tasep/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace tasep {

RatSeries::RatSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

RatSeries RatSeries::truncated(int order) const {
    RatSeries out(std::min(order, this->order()));
    for (int k = 0; k <= out.order(); ++k) out.coeffs_[k] = coeffs_[k];
    return out;
}

RatSeries RatSeries::operator-() const {
    RatSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

RatSeries operator+(const RatSeries& a, const RatSeries& b) {
    RatSeries out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) out.coeffs_[k] = a[k] + b[k];
    return out;
}

RatSeries operator-(const RatSeries& a, const RatSeries& b) {
    RatSeries out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) out.coeffs_[k] = a[k] - b[k];
    return out;
}

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
    RatSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= out.order(); ++j) out.coeffs_[i + j] += a[i] * b[j];
    }
    return out;
}

RatSeries operator*(const Rational& s, const RatSeries& a) {
    RatSeries out = a;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

RatSeries RatSeries::inverse() const {
    if (coeffs_[0] == 0) throw std::domain_error("series inverse: zero constant term");
    RatSeries out(order());
    out.coeffs_[0] = 1 / coeffs_[0];
    for (int n = 1; n <= order(); ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
        out.coeffs_[n] = -acc / coeffs_[0];
    }
    return out;
}

double RatSeries::eval_double(double t) const {
    double acc = 0;
    for (int k = order(); k >= 0; --k) acc = acc * t + to_double(coeffs_[k]);
    return acc;
}

RatSeries series_log(const RatSeries& s) {
    if (s[0] != 1) throw std::domain_error("series_log: constant term must be 1");
    const int n = s.order();
    RatSeries v = s;
    v.set_coeff(0, 0);
    RatSeries out(n), power = v;
    for (int k = 1; k <= n; ++k) {
        Rational sign = (k % 2 == 1) ? 1 : -1;
        out = out + (sign / Rational(k)) * power;
        if (k < n) power = power * v;
    }
    return out;
}

RatSeries series_exp(const RatSeries& s) {
    if (s[0] != 0) throw std::domain_error("series_exp: constant term must be 0");
    const int n = s.order();
    RatSeries out(n), term(n);
    out.set_coeff(0, 1);
    term.set_coeff(0, 1);
    for (int k = 1; k <= n; ++k) {
        term = term * s;
        out = out + (Rational(1) / Rational(factorial(k))) * term;
    }
    return out;
}

RatSeries series_compose(const RatSeries& outer, const RatSeries& inner) {
    if (inner[0] != 0) throw std::domain_error("series_compose: inner constant term must be 0");
    const int n = std::min(outer.order(), inner.order());
    RatSeries out(n);
    for (int k = n; k >= 0; --k) {
        out = out * inner;
        out.set_coeff(0, out[0] + outer[k]);
    }
    return out;
}

RatSeries series_reversion(const RatSeries& s) {
    if (s[0] != 0) throw std::domain_error("series_reversion: constant term must be 0");
    if (s.order() < 1 || s[1] == 0) throw std::domain_error("series_reversion: zero linear coefficient");
    const int n = s.order();
    RatSeries t(n);
    t.set_coeff(1, 1 / s[1]);
    for (int m = 2; m <= n; ++m) {
        // With t known through y^(m-1), [y^m] s(t(y)) = s1 * t_m + (terms from t_<m).
        const RatSeries composed = series_compose(s, t);
        t.set_coeff(m, -composed[m] / s[1]);
    }
    return t;
}

RatSeries exp_series(const Rational& c, int order) {
    RatSeries out(order);
    Rational term = 1;
    out.set_coeff(0, 1);
    for (int k = 1; k <= order; ++k) {
        term *= c / Rational(k);
        out.set_coeff(k, term);
    }
    return out;
}

MuSeries::MuSeries(int order, std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

MuSeries MuSeries::truncated(int order) const {
    MuSeries out(std::min(order, this->order()));
    for (int j = 0; j <= out.order(); ++j) out.coeffs_[j] = coeffs_[j];
    return out;
}

MuSeries operator+(const MuSeries& a, const MuSeries& b) {
    MuSeries out(std::min(a.order(), b.order()));
    for (int j = 0; j <= out.order(); ++j) out.coeffs_[j] = a[j] + b[j];
    return out;
}

MuSeries operator-(const MuSeries& a, const MuSeries& b) {
    MuSeries out(std::min(a.order(), b.order()));
    for (int j = 0; j <= out.order(); ++j) out.coeffs_[j] = a[j] - b[j];
    return out;
}

MuSeries operator*(const MuSeries& a, const MuSeries& b) {
    MuSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= out.order(); ++j) out.coeffs_[i + j] += a[i] * b[j];
    }
    return out;
}

MuSeries operator*(const Poly& p, const MuSeries& a) {
    MuSeries out = a;
    for (auto& c : out.coeffs_) c = p * c;
    return out;
}

MuSeries operator*(const Rational& s, const MuSeries& a) {
    MuSeries out = a;
    for (auto& c : out.coeffs_) c = s * c;
    return out;
}

RatSeries MuSeries::eval_x(const Rational& x) const {
    RatSeries out(order());
    for (int j = 0; j <= order(); ++j) out.set_coeff(j, coeffs_[j].eval(x));
    return out;
}

MuSeries MuSeries::derivative_x() const {
    MuSeries out(order());
    for (int j = 0; j <= order(); ++j) out.coeffs_[j] = coeffs_[j].derivative();
    return out;
}

double MuSeries::eval_double(double x, double mu) const {
    double acc = 0;
    for (int j = order(); j >= 0; --j) {
        double pj = 0;
        for (int k = coeffs_[j].degree(); k >= 0; --k) pj = pj * x + to_double(coeffs_[j][k]);
        acc = acc * mu + pj;
    }
    return acc;
}

MuSeries series_log(const MuSeries& s) {
    if (!(s[0] == Poly(1))) throw std::domain_error("series_log: mu-constant coefficient must be 1");
    const int n = s.order();
    MuSeries v = s;
    v.set_coeff(0, Poly());
    MuSeries out(n), power = v;
    for (int k = 1; k <= n; ++k) {
        Rational sign = (k % 2 == 1) ? 1 : -1;
        out = out + (sign / Rational(k)) * power;
        if (k < n) power = power * v;
    }
    return out;
}

}  // namespace tasep
