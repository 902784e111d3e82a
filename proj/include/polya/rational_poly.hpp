/**
Copyright 2026 the polya authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
**/

#ifndef POLYA_RATIONAL_POLY_HPP_
#define POLYA_RATIONAL_POLY_HPP_

#include <vector>

#include <gmpxx.h>

namespace polya {

/* Polynomial with exact rational coefficients, stored ascending by degree.
   Trailing zeros are stripped on construction, so the leading coefficient
   is nonzero; the zero polynomial has an empty list and degree -1. */
class rational_polynomial {
  public:
    rational_polynomial() = default;
    explicit rational_polynomial(std::vector<mpq_class> ascending);

    const std::vector<mpq_class>& coefficients() const { return c_; }
    int degree() const { return int(c_.size()) - 1; }
    mpq_class eval(const mpq_class& t) const;

    bool operator==(const rational_polynomial&) const = default;

  private:
    std::vector<mpq_class> c_;
};

/* Coefficients c_0..c_deg with f = sum c_i * binomial(X, i), computed as
   iterated finite differences of f at 0, 1, ..., deg. */
std::vector<mpq_class> binomial_basis_coeffs(const rational_polynomial& f);

/* f maps all integers to integers.  Equivalent to every binomial basis
   coefficient being an integer, and to integrality of f at 0..deg. */
bool is_integer_valued(const rational_polynomial& f);

}  // namespace polya

#endif  // POLYA_RATIONAL_POLY_HPP_
