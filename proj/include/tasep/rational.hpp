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

#ifndef TASEP_RATIONAL_HPP
#define TASEP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace tasep {

// The ground field. GMP keeps values canonical (lowest terms, positive
// denominator) as long as every value entering an operation is canonical;
// the parsing helpers below canonicalize explicitly.
using Rational = mpq_class;
using Int = mpz_class;

// Parses "p" or "p/q" in base 10. Decimal or otherwise malformed input is
// rejected with std::invalid_argument; q = 0 as well.
Rational rational_from_string(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

// C(n, k); 0 when k < 0 or k > n.
Int binomial(unsigned long n, long k);

Int factorial(unsigned long n);

// 1/n! extended by 0 for negative n (the usual convention for sums whose
// out-of-range terms vanish).
Rational reciprocal_factorial(long n);

// r^e for integer e (negative allowed; r must be nonzero then).
Rational pow_rational(const Rational& r, long e);

}  // namespace tasep

#endif
