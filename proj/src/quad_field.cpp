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

#include "polya/quad_field.hpp"

#include <stdexcept>

namespace polya {

quad_field field_from_d(const mpz_class& d, const factor_limits& limits) {
    if (d == 0 || d == 1)
        throw std::invalid_argument("field_from_d: d must not be 0 or 1");
    quad_field K;
    K.d = squarefree_part(d, limits);
    if (K.d == 1)
        throw std::invalid_argument("field_from_d: d is a perfect square");
    /* mpz_fdiv_ui gives the nonnegative residue even for negative d */
    K.disc = mpz_fdiv_ui(K.d.get_mpz_t(), 4) == 1 ? K.d : 4 * K.d;
    K.is_real = K.d > 0;
    return K;
}

std::vector<mpz_class> ramified_primes(const quad_field& K,
                                       const factor_limits& limits) {
    factorization f = factor(K.disc, limits);
    std::vector<mpz_class> out;
    out.reserve(f.factors.size());
    for (const auto& pp : f.factors)
        out.push_back(pp.p);
    return out;
}

}  // namespace polya
