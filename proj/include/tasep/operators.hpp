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

#ifndef TASEP_OPERATORS_HPP
#define TASEP_OPERATORS_HPP

#include <cstddef>
#include <vector>

#include "tasep/linalg.hpp"
#include "tasep/poly.hpp"
#include "tasep/rational.hpp"

namespace tasep {

// Chain length plus boundary data. a and b parameterize the boundary rates
// alpha = 1/(1+a), beta = 1/(1+b); g > 0 plays the role of the fugacity
// weight on entry events (g = 1 is the undeformed process).
struct ModelParams {
    int L = 1;
    Rational a = 0;
    Rational b = 0;
    Rational g = 1;

    Rational alpha() const { return Rational(1) / (1 + a); }
    Rational beta() const { return Rational(1) / (1 + b); }
    void validate() const;  // throws std::invalid_argument
};

// Square operator with polynomial entries over a shared scalar denominator.
// Basis convention everywhere: configurations are indexed by the occupation
// bits with site 1 as the most significant bit.
struct OperatorPoly {
    std::size_t dim = 0;
    std::vector<Poly> entries;  // row-major, dim*dim
    Poly denom = Poly(1);

    const Poly& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
    Poly& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }

    // Entrywise value at a Rational point; requires denom(x) != 0.
    RatMatrix eval(const Rational& x) const;

    // Entrywise d/dx of entry/denom, evaluated at x.
    RatMatrix eval_derivative(const Rational& x) const;

    // Taylor coefficients around x = 1 of entry/denom, through order `order`.
    std::vector<RatMatrix> taylor_at_one(int order) const;
};

// Markov generator of the deformed process, dimension 2^L. Requires L >= 1.
RatMatrix markov_matrix(const ModelParams& params);
OperatorPoly build_markov(const ModelParams& params);

// Boundary transfer matrix with exact polynomial entries over the
// denominator (1+a x)(1+b x). Capped at L <= 6.
OperatorPoly build_transfer(const ModelParams& params);

// t(x) evaluated directly at a Rational spectral parameter (cheaper than
// building polynomial entries). Capped at L <= 12.
RatMatrix transfer_eval(const ModelParams& params, const Rational& x);

struct CommutationCheck {
    bool commute = false;
    Rational max_defect = 0;  // largest |entry| of [t(x), t(y)]
};
CommutationCheck check_commutativity(const ModelParams& params, const Rational& x, const Rational& y);

struct ChargeMatrix {
    std::size_t dim = 0;
    int r = 0;
    RatMatrix h;
};

// H^(r), the r-th conserved charge from the log-derivative of t at x = 1.
// H^(1) is the deformed Markov generator.
ChargeMatrix higher_charge(const ModelParams& params, int r);

// Transfer matrix of the quasi-periodic chain with 2L+4 sites, twist
// diag(1/g, g), and the two reversed-parameter sites at the far end.
// Requires 2L+4 <= 8.
RatMatrix build_twisted_periodic(int L, const Rational& g, const Rational& x);

// Configuration indices of the fixed-particle-number sector of an n-site
// chain, ascending.
std::vector<std::size_t> sector_indices(int n_sites, int n_particles);
RatMatrix extract_sector(const RatMatrix& m, const std::vector<std::size_t>& indices);

}  // namespace tasep

#endif
