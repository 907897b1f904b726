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

#include "tasep/rational.hpp"

#include <stdexcept>

namespace tasep {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : text) {
        const bool ok = (ch >= '0' && ch <= '9') || ch == '/' || ch == '-' || ch == '+';
        if (!ok) throw std::invalid_argument("rational literal must be \"p\" or \"p/q\": '" + text + "'");
    }
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("unparsable rational literal: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Int binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), n, static_cast<unsigned long>(k));
    return result;
}

Int factorial(unsigned long n) {
    Int result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Rational reciprocal_factorial(long n) {
    if (n < 0) return 0;
    return Rational(1) / Rational(factorial(static_cast<unsigned long>(n)));
}

Rational pow_rational(const Rational& r, long e) {
    if (e == 0) return 1;
    if (r == 0 && e < 0) throw std::domain_error("0 raised to a negative power");
    Rational base = e > 0 ? r : Rational(1) / r;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc = 1;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

}  // namespace tasep
