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

#ifndef TASEP_TQ_HPP
#define TASEP_TQ_HPP

#include <complex>
#include <vector>

#include "tasep/operators.hpp"
#include "tasep/series.hpp"

namespace tasep {

enum class TQFlavor { original, equivalent };

// Perturbative solution of a functional relation for the transfer-matrix
// eigenvalue branch that equals 1 at mu = 0. lambda_num holds the
// polynomial numerators S^(j)(x) of Lambda over denom = (a x+1)(b x+1);
// q holds the companion polynomial family (Q for the original relation,
// Qbar for the equivalent one).
struct TQSolution {
    ModelParams params;
    int order = 0;
    TQFlavor flavor = TQFlavor::original;
    MuSeries lambda_num;
    Poly denom;
    MuSeries q;
};

// Closed form for the mu = 0 companion polynomial of the original relation
// (degree L, constant term 1, independent of a).
Poly q0_closed(int L, const Rational& b);

// Order-by-order exact solution of the original relation. Requires L >= 1.
// Every order solves an overdetermined linear system; inconsistency or
// rank deficiency raises SolverInconsistency.
TQSolution solve_tq_original(const ModelParams& params, int N);

// Same for the equivalent relation. L = 0 is supported only when a*b = 0.
TQSolution solve_tq_equivalent(const ModelParams& params, int N);

struct EquivalenceReport {
    bool agree = false;
    int first_order = -1;  // mu order of the first discrepancy, -1 if none
    int first_power = -1;  // x power of the first discrepancy
    Rational lhs, rhs;     // the two disagreeing coefficients
};

// Coefficientwise comparison of Lambda from the two relations.
EquivalenceReport check_equivalence(const ModelParams& params, int N);

// lambda(mu) = -1/2 d/dx Lambda(x) at x = 1, exactly.
RatSeries lambda_of_mu(const TQSolution& sol);

// Exact mu-series of the r-th conserved-charge eigenvalue on this branch,
// from the Taylor expansion of log Lambda around x = 1. r = 1 coincides
// with lambda_of_mu.
RatSeries charge_from_lambda(const TQSolution& sol, int r);

struct BetheRootSet {
    TQFlavor flavor = TQFlavor::original;
    std::vector<std::complex<double>> roots;
};

struct ResidualReport {
    std::vector<double> log_residual;  // | log|LHS| - log|RHS| | per root
    std::vector<bool> singular;        // an exactly-zero factor on either side
    double max_log_residual = 0;       // over nonsingular roots
};

// Log-scale defect of the product-form root equations satisfied by the
// companion-polynomial roots, evaluated in double precision.
ResidualReport bethe_residual(const BetheRootSet& roots, const ModelParams& params, double mu);

// Exact closed-form reference solutions for the two smallest chains at
// a = b = 0, expanded to mu-order N.
TQSolution reference_solution_L0(int N);
TQSolution reference_solution_L1(int N, TQFlavor flavor);

}  // namespace tasep

#endif
