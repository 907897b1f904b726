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

#include "tasep/tq.hpp"

#include <cmath>
#include <stdexcept>

#include "tasep/errors.hpp"
#include "tasep/linalg.hpp"

namespace tasep {

namespace {

void copy_poly_rows(RatMatrix& m, std::size_t col, const Poly& p, std::size_t n_rows) {
    for (std::size_t row = 0; row < n_rows; ++row) m.at(row, col) = p[static_cast<int>(row)];
}

std::vector<Rational> poly_to_rhs(const Poly& p, std::size_t n_rows) {
    std::vector<Rational> rhs(n_rows);
    for (std::size_t row = 0; row < n_rows; ++row) rhs[row] = -p[static_cast<int>(row)];
    return rhs;
}

}  // namespace

Poly q0_closed(int L, const Rational& b) {
    if (L < 0) throw std::invalid_argument("q0_closed requires L >= 0");
    Poly out;
    for (int k = 0; k <= L; ++k) {
        Rational inner = 0;
        Rational bpow = 1;  // b^(k-p), built backwards from p = k
        for (int p = k; p >= 0; --p) {
            inner += bpow * Rational(L - p + 1) / Rational(2 * L - p + 2) * Rational(binomial(2 * L + 1, p));
            bpow *= b;
        }
        const Rational sign = (k % 2 == 0) ? 1 : -1;
        out.set_coeff(k, 2 * sign * inner);
    }
    return out;
}

TQSolution solve_tq_original(const ModelParams& params, int N) {
    params.validate();
    if (params.L < 1) throw std::invalid_argument("solve_tq_original requires L >= 1");
    if (N < 0) throw std::invalid_argument("order must be nonnegative");
    const int L = params.L;
    const Rational &a = params.a, &b = params.b;
    const Poly x = Poly::monomial(1);
    const Poly D = (Poly(1) + a * x) * (Poly(1) + b * x);
    // A(x) multiplies the reversed companion polynomial once denominators
    // are cleared; C(x) is the inhomogeneity shared by every order.
    const Poly A = Poly::monomial(L + 1) * (Poly(b) + x) * (Poly(1) + a * x);
    const Poly C = (x - Poly(1)).pow(2 * L) * (x * x - Poly(1));
    const std::size_t n_rows = 2 * L + 4;

    // Order 0: unknowns q_1..q_L with q_0 pinned to 1.
    std::vector<Poly> S(static_cast<std::size_t>(N) + 1), Q(static_cast<std::size_t>(N) + 1);
    S[0] = D;
    {
        RatMatrix m(n_rows, L);
        for (int k = 1; k <= L; ++k)
            copy_poly_rows(m, k - 1, D * Poly::monomial(k) - A * Poly::monomial(L - k), n_rows);
        const Poly inhom = D - A * Poly::monomial(L) + C * (Poly(1) + a * x);
        const auto u = solve_exact(m, poly_to_rhs(inhom, n_rows));
        Poly q0 = Poly(1);
        for (int k = 1; k <= L; ++k) q0 += Poly::monomial(k, u[k - 1]);
        Q[0] = q0;
        if (!(Q[0] == q0_closed(L, b)))
            throw SolverInconsistency("order-0 solution disagrees with the closed form");
    }

    for (int j = 1; j <= N; ++j) {
        const std::size_t n_cols = (L + 2) + L;
        RatMatrix m(n_rows, n_cols);
        for (int k = 1; k <= L + 2; ++k) copy_poly_rows(m, k - 1, Poly::monomial(k) * Q[0], n_rows);
        for (int k = 1; k <= L; ++k)
            copy_poly_rows(m, (L + 2) + k - 1, S[0] * Poly::monomial(k) - A * Poly::monomial(L - k), n_rows);
        const Rational inv_fact = reciprocal_factorial(j);
        Poly inhom = inv_fact * Q[0] + inv_fact * C;
        for (int i = 1; i < j; ++i) inhom += S[i] * Q[j - i];
        const auto u = solve_exact(m, poly_to_rhs(inhom, n_rows));
        Poly Sj = Poly(inv_fact);
        for (int k = 1; k <= L + 2; ++k) Sj += Poly::monomial(k, u[k - 1]);
        Poly Qj;
        for (int k = 1; k <= L; ++k) Qj += Poly::monomial(k, u[(L + 2) + k - 1]);
        S[j] = Sj;
        Q[j] = Qj;
    }

    TQSolution sol;
    sol.params = params;
    sol.order = N;
    sol.flavor = TQFlavor::original;
    sol.lambda_num = MuSeries(N, std::move(S));
    sol.denom = D;
    sol.q = MuSeries(N, std::move(Q));
    return sol;
}

TQSolution solve_tq_equivalent(const ModelParams& params, int N) {
    params.validate();
    if (params.L < 0) throw std::invalid_argument("solve_tq_equivalent requires L >= 0");
    if (N < 0) throw std::invalid_argument("order must be nonnegative");
    const int L = params.L;
    const Rational &a = params.a, &b = params.b;
    if (L == 0 && a * b != 0)
        throw std::invalid_argument(
            "L = 0 with a*b != 0 is unsupported: the order-0 form of the relation fails");
    const Poly x = Poly::monomial(1);
    const Poly D = (Poly(1) + a * x) * (Poly(1) + b * x);
    const Poly W = Poly::monomial(L) * (x + Poly(a)) * (x + Poly(b)) * D;
    const Poly G = (Poly(1) - x).pow(2 * L + 2) * (x + Poly(1)) * (x + Poly(1));
    const Poly Qbar0 = Poly::monomial(L) * (x + Poly(a)) * (x + Poly(b));
    const std::size_t n_rows = 2 * L + 5;

    std::vector<Poly> S(static_cast<std::size_t>(N) + 1), Q(static_cast<std::size_t>(N) + 1);
    S[0] = D;
    Q[0] = Qbar0;
    if (!(D * Qbar0 == W + Qbar0[0] * G))
        throw SolverInconsistency("order-0 identity of the equivalent relation fails");

    for (int j = 1; j <= N; ++j) {
        const std::size_t n_cols = (L + 2) + (L + 2);
        RatMatrix m(n_rows, n_cols);
        for (int k = 1; k <= L + 2; ++k) copy_poly_rows(m, k - 1, Poly::monomial(k) * Q[0], n_rows);
        for (int k = 0; k <= L + 1; ++k) {
            Poly col = S[0] * Poly::monomial(k);
            if (k == 0) col -= G;
            copy_poly_rows(m, (L + 2) + k, col, n_rows);
        }
        const Rational inv_fact = reciprocal_factorial(j);
        const Rational sign = (j % 2 == 0) ? 1 : -1;
        Poly inhom = inv_fact * Q[0] - sign * inv_fact * W;
        for (int i = 1; i < j; ++i) inhom += S[i] * Q[j - i];
        Rational past_q0 = 0;  // sum over earlier orders of qbar_0 e^mu weights
        for (int i = 0; i < j; ++i) past_q0 += Q[i][0] * reciprocal_factorial(j - i);
        inhom -= past_q0 * G;
        const auto u = solve_exact(m, poly_to_rhs(inhom, n_rows));
        Poly Sj = Poly(inv_fact);
        for (int k = 1; k <= L + 2; ++k) Sj += Poly::monomial(k, u[k - 1]);
        Poly Qj;
        for (int k = 0; k <= L + 1; ++k) Qj += Poly::monomial(k, u[(L + 2) + k]);
        S[j] = Sj;
        Q[j] = Qj;
    }

    TQSolution sol;
    sol.params = params;
    sol.order = N;
    sol.flavor = TQFlavor::equivalent;
    sol.lambda_num = MuSeries(N, std::move(S));
    sol.denom = D;
    sol.q = MuSeries(N, std::move(Q));
    return sol;
}

EquivalenceReport check_equivalence(const ModelParams& params, int N) {
    const TQSolution lhs = solve_tq_original(params, N);
    const TQSolution rhs = solve_tq_equivalent(params, N);
    EquivalenceReport report;
    for (int j = 0; j <= N; ++j) {
        const Poly &p = lhs.lambda_num[j], &q = rhs.lambda_num[j];
        const int top = std::max(p.degree(), q.degree());
        for (int k = 0; k <= top; ++k) {
            if (p[k] == q[k]) continue;
            report.agree = false;
            report.first_order = j;
            report.first_power = k;
            report.lhs = p[k];
            report.rhs = q[k];
            return report;
        }
    }
    report.agree = true;
    return report;
}

RatSeries lambda_of_mu(const TQSolution& sol) {
    const Rational d1 = sol.denom.eval(1);
    const Rational dp1 = sol.denom.derivative().eval(1);
    RatSeries out(sol.order);
    for (int j = 0; j <= sol.order; ++j) {
        const Poly& s = sol.lambda_num[j];
        const Rational v = (s.derivative().eval(1) * d1 - s.eval(1) * dp1) / (d1 * d1);
        out.set_coeff(j, -v / 2);
    }
    return out;
}

RatSeries charge_from_lambda(const TQSolution& sol, int r) {
    if (r < 1) throw std::invalid_argument("charge index r must be >= 1");
    const int N = sol.order;

    // Taylor coefficients of Lambda(1+s) in s through s^r, per mu order.
    const Poly den_shift = sol.denom.shifted(1);
    RatSeries den_series(r);
    for (int k = 0; k <= r; ++k) den_series.set_coeff(k, den_shift[k]);
    const RatSeries den_inv = den_series.inverse();

    // eps[k] is the mu-series multiplying s^k.
    std::vector<RatSeries> eps(r + 1, RatSeries(N));
    for (int j = 0; j <= N; ++j) {
        const Poly sh = sol.lambda_num[j].shifted(1);
        for (int k = 0; k <= r; ++k) {
            Rational acc = 0;
            for (int l = 0; l <= k; ++l) acc += sh[l] * den_inv[k - l];
            eps[k].set_coeff(j, acc);
        }
    }
    const Rational expect0 = 1;
    for (int j = 0; j <= N; ++j)
        if (eps[0][j] != (j == 0 ? expect0 : Rational(0)))
            throw SolverInconsistency("Lambda(1) != 1; cannot take the logarithm");

    // log(1 + V) truncated at s^r with mu-series coefficients.
    std::vector<RatSeries> v = eps;
    v[0] = RatSeries(N);
    std::vector<RatSeries> log_c(r + 1, RatSeries(N)), power = v;
    for (int m = 1; m <= r; ++m) {
        const Rational sign = (m % 2 == 1) ? 1 : -1;
        for (int k = m; k <= r; ++k) log_c[k] = log_c[k] + (sign / Rational(m)) * power[k];
        if (m < r) {
            std::vector<RatSeries> next(r + 1, RatSeries(N));
            for (int i = m; i <= r; ++i)
                for (int j2 = 1; i + j2 <= r; ++j2) next[i + j2] = next[i + j2] + power[i] * v[j2];
            power = std::move(next);
        }
    }
    const Rational factor = Rational(r) / 2 * ((r % 2 == 0) ? 1 : -1);
    return factor * log_c[r];
}

ResidualReport bethe_residual(const BetheRootSet& roots, const ModelParams& params, double mu) {
    if (roots.roots.empty()) throw std::invalid_argument("empty root set");
    using C = std::complex<double>;
    const double a = to_double(params.a), b = to_double(params.b);
    const int L = params.L;
    ResidualReport report;
    report.log_residual.resize(roots.roots.size());
    report.singular.assign(roots.roots.size(), false);

    // Accumulates log|factor|, flagging exact zeros.
    struct LogMag {
        double value = 0;
        bool singular = false;
        void mul(const C& f) {
            const double m = std::abs(f);
            if (m == 0.0)
                singular = true;
            else
                value += std::log(m);
        }
    };

    double worst = 0;
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
        const C u = roots.roots[i];
        LogMag lhs, rhs;
        if (roots.flavor == TQFlavor::original) {
            lhs.mul(a * u + std::exp(mu));
            for (int k = 0; k < 2 * L; ++k) lhs.mul(u - 1.0);
            lhs.mul(u * u - 1.0);
            for (int k = 0; k < L + 1; ++k) rhs.mul(u);
            rhs.mul(a * u + 1.0);
            rhs.mul(u + b);
            for (const C& other : roots.roots) rhs.mul(u - 1.0 / other);
        } else {
            for (int k = 0; k < L; ++k) lhs.mul(u);
            lhs.mul(u + b);
            lhs.mul(u + a);
            lhs.mul(a * u + 1.0);
            lhs.mul(b * u + 1.0);
            rhs.value += 2 * mu;
            for (int k = 0; k < 2 * L + 2; ++k) rhs.mul(1.0 - u);
            rhs.mul(u + 1.0);
            rhs.mul(u + 1.0);
            for (const C& other : roots.roots) rhs.mul(other);
        }
        if (lhs.singular || rhs.singular) {
            report.singular[i] = true;
            report.log_residual[i] = 0;
            continue;
        }
        report.log_residual[i] = std::abs(lhs.value - rhs.value);
        worst = std::max(worst, report.log_residual[i]);
    }
    report.max_log_residual = worst;
    return report;
}

namespace {

// mu-series with constant polynomial coefficients.
MuSeries lift(const RatSeries& s) {
    MuSeries out(s.order());
    for (int j = 0; j <= s.order(); ++j) out.set_coeff(j, Poly(s[j]));
    return out;
}

MuSeries lift(const Poly& p, int order) {
    MuSeries out(order);
    out.set_coeff(0, p);
    return out;
}

}  // namespace

TQSolution reference_solution_L0(int N) {
    const Poly x = Poly::monomial(1);
    const MuSeries e_plus = lift(exp_series(1, N));
    const MuSeries e_minus = lift(exp_series(-1, N));
    const MuSeries one = lift(Poly(1), N);

    TQSolution sol;
    sol.params = ModelParams{0, 0, 0, 1};
    sol.order = N;
    sol.flavor = TQFlavor::equivalent;
    sol.denom = Poly(1);
    sol.lambda_num = one - (e_plus - one) * lift(x * x - Poly(1), N);
    sol.q = lift(x * x, N) + e_minus - one;
    return sol;
}

TQSolution reference_solution_L1(int N, TQFlavor flavor) {
    const Poly x = Poly::monomial(1);
    const Poly one_p = Poly(1);
    const MuSeries e_half = lift(exp_series(Rational(1, 2), N));
    const MuSeries e_mhalf = lift(exp_series(Rational(-1, 2), N));
    const MuSeries e_minus = lift(exp_series(-1, N));
    const MuSeries one = lift(one_p, N);

    TQSolution sol;
    sol.params = ModelParams{1, 0, 0, 1};
    sol.order = N;
    sol.flavor = flavor;
    sol.denom = Poly(1);
    sol.lambda_num =
        one + (e_half - one) * (lift(x, N) * e_half - e_half - one) * lift(x * x - one_p, N);
    if (flavor == TQFlavor::original) {
        sol.q = one - lift(x, N) - lift(x, N) * e_mhalf;
    } else {
        sol.q = lift((x * x - one_p) * (x - one_p), N) + lift(x, N) * e_minus +
                lift(x * x - one_p, N) * e_mhalf;
    }
    return sol;
}

}  // namespace tasep
