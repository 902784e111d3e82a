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

#ifndef POLYA_QUAD_FIELD_HPP
#define POLYA_QUAD_FIELD_HPP

#include <vector>

#include "polya/integer_math.hpp"

namespace polya {

/*
 * Real or imaginary quadratic field Q(sqrt(d)).
 *
 * Invariants:
 *   d is squarefree and d != 0, 1
 *   disc = d when d = 1 (mod 4), otherwise 4d
 *   is_real iff d > 0
 */
struct quad_field {
    mpz_class d;
    mpz_class disc;
    bool is_real = false;

    bool operator==(const quad_field&) const = default;
};

/* Builds the field for any nonsquare integer, squarefree-reducing first.
   Throws std::invalid_argument for d in {0, 1} after reduction. */
quad_field field_from_d(const mpz_class& d, const factor_limits& limits = {});

/* Primes dividing the field discriminant, ascending. Their count is the
   ramified-prime count r of the field. */
std::vector<mpz_class> ramified_primes(const quad_field& K,
                                       const factor_limits& limits = {});

}  // namespace polya

#endif
