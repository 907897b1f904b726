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

#include "tasep/operators.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "tasep/errors.hpp"
#include "tasep/series.hpp"

namespace tasep {

void ModelParams::validate() const {
    if (L < 0) throw std::invalid_argument("L must be nonnegative");
    if (a < 0 || b < 0) throw std::invalid_argument("boundary parameters a, b must be nonnegative");
    if (g <= 0) throw std::invalid_argument("fugacity weight g must be positive");
}

namespace {

// The physical space has n sites; site j (1-based) sits at bit n-j. The
// monodromy is kept as a 2x2 matrix in the auxiliary space whose entries
// are dense operators on the physical space, with scalar type T either
// Rational (evaluated builds) or Poly (symbolic builds).
template <class T>
struct AuxOp {
    int n_sites = 0;
    std::size_t dim = 0;
    std::array<std::vector<T>, 4> block;  // index 2*row + col in aux space

    static AuxOp from_scalars(int n_sites, const std::array<T, 4>& k) {
        AuxOp u;
        u.n_sites = n_sites;
        u.dim = std::size_t(1) << n_sites;
        for (int e = 0; e < 4; ++e) {
            u.block[e].assign(u.dim * u.dim, T());
            if (!(k[e] == T())) {
                for (std::size_t i = 0; i < u.dim; ++i) u.block[e][i * u.dim + i] = k[e];
            }
        }
        return u;
    }
};

// out = m * O_site where O acts on one site; o[2*s_out + s_in].
template <class T>
std::vector<T> apply_site_op(const std::vector<T>& m, std::size_t dim, int n_sites, int site,
                             const std::array<T, 4>& o) {
    const int shift = n_sites - site;
    std::vector<T> out(dim * dim, T());
    for (std::size_t c = 0; c < dim; ++c) {
        const std::size_t bit = (c >> shift) & 1;
        for (std::size_t sp = 0; sp < 2; ++sp) {
            const T& w = o[2 * sp + bit];
            if (w == T()) continue;
            const std::size_t cp = (c & ~(std::size_t(1) << shift)) | (sp << shift);
            for (std::size_t r = 0; r < dim; ++r) {
                const T& v = m[r * dim + cp];
                if (!(v == T())) out[r * dim + c] += v * w;
            }
        }
    }
    return out;
}

// 4x4 bulk vertex weights; entries R[row][col] with row = 2*out_first +
// out_second over the ordered pair of spaces it acts on.
template <class T>
std::array<std::array<T, 4>, 4> r_entries(const T& x) {
    std::array<std::array<T, 4>, 4> r{};
    const T one(1);
    r[0][0] = one;
    r[1][2] = x;
    r[2][1] = one;
    r[2][2] = one - x;
    r[3][3] = one;
    return r;
}

// Aux-space 2x2 blocks of the vertex acting on (aux, site j).
template <class T>
std::array<std::array<T, 4>, 4> vertex_aux_first(const T& x) {
    auto r = r_entries(x);
    std::array<std::array<T, 4>, 4> blocks{};
    for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c)
            for (int s = 0; s < 2; ++s)
                for (int sp = 0; sp < 2; ++sp) blocks[2 * a + c][2 * s + sp] = r[2 * a + s][2 * c + sp];
    return blocks;
}

// Aux-space 2x2 blocks of the vertex acting on (site j, aux).
template <class T>
std::array<std::array<T, 4>, 4> vertex_site_first(const T& x) {
    auto r = r_entries(x);
    std::array<std::array<T, 4>, 4> blocks{};
    for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c)
            for (int s = 0; s < 2; ++s)
                for (int sp = 0; sp < 2; ++sp) blocks[2 * a + c][2 * s + sp] = r[2 * s + a][2 * sp + c];
    return blocks;
}

template <class T>
void right_multiply_vertex(AuxOp<T>& u, int site, const std::array<std::array<T, 4>, 4>& blocks) {
    std::array<std::vector<T>, 4> next;
    for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c) {
            std::vector<T> acc(u.dim * u.dim, T());
            for (int b = 0; b < 2; ++b) {
                auto term = apply_site_op(u.block[2 * a + b], u.dim, u.n_sites, site, blocks[2 * b + c]);
                for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += term[k];
            }
            next[2 * a + c] = std::move(acc);
        }
    u.block = std::move(next);
}

template <class T>
void right_multiply_scalars(AuxOp<T>& u, const std::array<T, 4>& k) {
    std::array<std::vector<T>, 4> next;
    for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c) {
            std::vector<T> acc(u.dim * u.dim, T());
            for (int b = 0; b < 2; ++b) {
                const T& w = k[2 * b + c];
                if (w == T()) continue;
                const auto& src = u.block[2 * a + b];
                for (std::size_t e = 0; e < acc.size(); ++e)
                    if (!(src[e] == T())) acc[e] += src[e] * w;
            }
            next[2 * a + c] = std::move(acc);
        }
    u.block = std::move(next);
}

// Numerator of t(x) over (1+a x)(1+b x): trace over the auxiliary space of
// Ktil R_{0L}..R_{01} K R_{10}..R_{L0}, denominators cleared.
template <class T>
std::vector<T> transfer_numerator(int L, const T& x, const T& a, const T& b, const T& g) {
    const T one(1);
    AuxOp<T> u = AuxOp<T>::from_scalars(L, {one, one, T(), x * b});
    const auto aux_first = vertex_aux_first(x);
    const auto site_first = vertex_site_first(x);
    for (int j = L; j >= 1; --j) right_multiply_vertex(u, j, aux_first);
    right_multiply_scalars(u, {(a + x) * x, T(), g * (one - x * x), x * a + one});
    for (int j = 1; j <= L; ++j) right_multiply_vertex(u, j, site_first);
    std::vector<T> out(u.dim * u.dim);
    for (std::size_t e = 0; e < out.size(); ++e) out[e] = u.block[0][e] + u.block[3][e];
    return out;
}

void embed_two_site(RatMatrix& m, int L, int k, const std::array<Rational, 16>& op) {
    // op[4*(2*s1+s2) + (2*t1+t2)] acting on sites k, k+1 (1-based).
    const std::size_t dim = std::size_t(1) << L;
    const int sh1 = L - k, sh2 = L - k - 1;
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t t1 = (col >> sh1) & 1, t2 = (col >> sh2) & 1;
        for (int s1 = 0; s1 < 2; ++s1)
            for (int s2 = 0; s2 < 2; ++s2) {
                const Rational& v = op[4 * (2 * s1 + s2) + (2 * t1 + t2)];
                if (v == 0) continue;
                std::size_t row = col & ~((std::size_t(1) << sh1) | (std::size_t(1) << sh2));
                row |= (std::size_t(s1) << sh1) | (std::size_t(s2) << sh2);
                m.at(row, col) += v;
            }
    }
}

}  // namespace

RatMatrix OperatorPoly::eval(const Rational& x) const {
    const Rational d = denom.eval(x);
    if (d == 0) throw std::invalid_argument("evaluation at a pole of the denominator");
    RatMatrix out(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const Poly& p = at(i, j);
            if (!p.is_zero()) out.at(i, j) = p.eval(x) / d;
        }
    return out;
}

RatMatrix OperatorPoly::eval_derivative(const Rational& x) const {
    const Rational d = denom.eval(x);
    if (d == 0) throw std::invalid_argument("evaluation at a pole of the denominator");
    const Rational dp = denom.derivative().eval(x);
    RatMatrix out(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const Poly& p = at(i, j);
            if (p.is_zero()) continue;
            out.at(i, j) = (p.derivative().eval(x) * d - p.eval(x) * dp) / (d * d);
        }
    return out;
}

std::vector<RatMatrix> OperatorPoly::taylor_at_one(int order) const {
    const Poly den_shift = denom.shifted(1);
    if (den_shift[0] == 0) throw std::invalid_argument("denominator vanishes at x = 1");
    RatSeries den_series(order);
    for (int k = 0; k <= order; ++k) den_series.set_coeff(k, den_shift[k]);
    const RatSeries den_inv = den_series.inverse();

    std::vector<RatMatrix> out(order + 1, RatMatrix(dim, dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const Poly& p = at(i, j);
            if (p.is_zero()) continue;
            const Poly sh = p.shifted(1);
            for (int k = 0; k <= order; ++k) {
                Rational acc = 0;
                for (int l = 0; l <= k; ++l) acc += sh[l] * den_inv[k - l];
                out[k].at(i, j) = acc;
            }
        }
    return out;
}

RatMatrix markov_matrix(const ModelParams& params) {
    params.validate();
    if (params.L < 1) throw std::invalid_argument("markov_matrix requires L >= 1");
    const int L = params.L;
    const std::size_t dim = std::size_t(1) << L;
    const Rational al = params.alpha(), be = params.beta();
    RatMatrix m(dim, dim);

    // Entry at site 1 (rate alpha, weighted by g), exit at site L (rate beta).
    const int sh1 = L - 1;
    for (std::size_t col = 0; col < dim; ++col) {
        if (((col >> sh1) & 1) == 0) {
            m.at(col, col) -= al;
            m.at(col | (std::size_t(1) << sh1), col) += al * params.g;
        }
        if ((col & 1) == 1) {
            m.at(col, col) -= be;
            m.at(col & ~std::size_t(1), col) += be;
        }
    }
    // Bulk hops k -> k+1 at rate 1.
    for (int k = 1; k < L; ++k) {
        std::array<Rational, 16> w{};
        w[4 * 1 + 2] = 1;   // |01><10|
        w[4 * 2 + 2] = -1;  // -|10><10|
        embed_two_site(m, L, k, w);
    }
    return m;
}

OperatorPoly build_markov(const ModelParams& params) {
    const RatMatrix m = markov_matrix(params);
    OperatorPoly op;
    op.dim = m.rows();
    op.denom = Poly(1);
    op.entries.resize(op.dim * op.dim);
    for (std::size_t i = 0; i < op.dim; ++i)
        for (std::size_t j = 0; j < op.dim; ++j) op.at(i, j) = Poly(m.at(i, j));
    return op;
}

OperatorPoly build_transfer(const ModelParams& params) {
    params.validate();
    if (params.L < 1) throw std::invalid_argument("build_transfer requires L >= 1");
    if (params.L > 6) throw std::invalid_argument("symbolic transfer build capped at L <= 6");
    const Poly x = Poly::monomial(1);
    OperatorPoly op;
    op.dim = std::size_t(1) << params.L;
    op.entries = transfer_numerator<Poly>(params.L, x, Poly(params.a), Poly(params.b), Poly(params.g));
    op.denom = (Poly(1) + params.a * x) * (Poly(1) + params.b * x);
    return op;
}

RatMatrix transfer_eval(const ModelParams& params, const Rational& x) {
    params.validate();
    if (params.L < 1) throw std::invalid_argument("transfer_eval requires L >= 1");
    if (params.L > 12) throw std::invalid_argument("evaluated transfer capped at L <= 12");
    const Rational den = (1 + params.a * x) * (1 + params.b * x);
    if (den == 0) throw std::invalid_argument("evaluation at a pole of the denominator");
    auto num = transfer_numerator<Rational>(params.L, x, params.a, params.b, params.g);
    const std::size_t dim = std::size_t(1) << params.L;
    RatMatrix out(dim, dim);
    const Rational inv = 1 / den;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) out.at(i, j) = num[i * dim + j] * inv;
    return out;
}

CommutationCheck check_commutativity(const ModelParams& params, const Rational& x, const Rational& y) {
    const RatMatrix tx = transfer_eval(params, x);
    const RatMatrix ty = transfer_eval(params, y);
    const RatMatrix c = commutator(tx, ty);
    CommutationCheck out;
    out.max_defect = c.max_abs();
    out.commute = (out.max_defect == 0);
    return out;
}

ChargeMatrix higher_charge(const ModelParams& params, int r) {
    if (r < 1) throw std::invalid_argument("charge index r must be >= 1");
    if (r > 16) throw std::invalid_argument("charge order capped at r <= 16");
    const OperatorPoly t = build_transfer(params);
    const auto taylor = t.taylor_at_one(r);
    const std::size_t dim = t.dim;
    if (!(taylor[0] == RatMatrix::identity(dim)))
        throw SolverInconsistency("transfer matrix is not the identity at x = 1");

    // log(1 + N) with N the strictly positive-order part of the expansion.
    std::vector<RatMatrix> log_coeffs(r + 1, RatMatrix(dim, dim));
    std::vector<RatMatrix> power(taylor);  // N^1 coefficients (index 0 is zero)
    power[0] = RatMatrix(dim, dim);
    for (int m = 1; m <= r; ++m) {
        const Rational sign = (m % 2 == 1) ? 1 : -1;
        for (int k = m; k <= r; ++k) log_coeffs[k] = log_coeffs[k] + (sign / Rational(m)) * power[k];
        if (m < r) {
            // power <- power * N, truncated at order r.
            std::vector<RatMatrix> next(r + 1, RatMatrix(dim, dim));
            for (int i = m; i <= r; ++i)
                for (int j = 1; i + j <= r; ++j) next[i + j] = next[i + j] + power[i] * taylor[j];
            power = std::move(next);
        }
    }
    ChargeMatrix out;
    out.dim = dim;
    out.r = r;
    const Rational factor = Rational(r) / 2 * ((r % 2 == 0) ? 1 : -1);
    out.h = factor * log_coeffs[r];
    return out;
}

RatMatrix build_twisted_periodic(int L, const Rational& g, const Rational& x) {
    if (L < 0) throw std::invalid_argument("L must be nonnegative");
    const int n = 2 * L + 4;
    if (n > 8) throw std::invalid_argument("twisted-periodic oracle capped at 2L+4 <= 8 sites");
    if (g == 0) throw std::invalid_argument("twist weight must be nonzero");
    AuxOp<Rational> u = AuxOp<Rational>::from_scalars(n, {1 / g, 0, 0, g});
    const auto plus = vertex_aux_first<Rational>(x);
    const auto minus = vertex_aux_first<Rational>(-x);
    for (int j = n; j >= 1; --j) right_multiply_vertex(u, j, (j >= n - 1) ? minus : plus);
    const std::size_t dim = std::size_t(1) << n;
    RatMatrix out(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) out.at(i, j) = u.block[0][i * dim + j] + u.block[3][i * dim + j];
    return out;
}

std::vector<std::size_t> sector_indices(int n_sites, int n_particles) {
    std::vector<std::size_t> idx;
    const std::size_t dim = std::size_t(1) << n_sites;
    for (std::size_t i = 0; i < dim; ++i)
        if (std::popcount(i) == n_particles) idx.push_back(i);
    return idx;
}

RatMatrix extract_sector(const RatMatrix& m, const std::vector<std::size_t>& indices) {
    RatMatrix out(indices.size(), indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = 0; j < indices.size(); ++j) out.at(i, j) = m.at(indices[i], indices[j]);
    return out;
}

}  // namespace tasep
