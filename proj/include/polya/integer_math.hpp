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

#ifndef POLYA_INTEGER_MATH_HPP_
#define POLYA_INTEGER_MATH_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace polya {

/* Thrown when a computation would exceed a configured work bound (factoring
   iteration caps, class group enumeration limits, search bounds).  Callers
   that can degrade gracefully catch it; the CLI maps it to exit code 2. */
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct factor_limits {
    /* trial division by everything up to this bound comes first */
    unsigned long trial_division_bound = 100000;
    /* total Pollard rho iterations allowed across all pending cofactors */
    unsigned long rho_iteration_cap = 30000000;
};

struct prime_power {
    mpz_class p;
    unsigned e = 1;
    bool operator==(const prime_power&) const = default;
};

/* n = sign * prod p_i^{e_i}, primes strictly increasing.  n = +-1 has an
   empty factor list. */
struct factorization {
    int sign = 1;
    std::vector<prime_power> factors;

    mpz_class value() const;
    bool operator==(const factorization&) const = default;
};

/* Deterministic Miller-Rabin for inputs below 3317044064679887385961981
   (first twelve prime bases suffice there, which covers anything 64-bit);
   the same bases plus 25 pseudo-random rounds above, with the generator
   seeded from n so results are reproducible. */
bool is_prime(const mpz_class& n);

factorization factor(const mpz_class& n, const factor_limits& limits = {});

/* Jacobi symbol (a/n) for odd n > 0, computed with the quadratic
   reciprocity loop.  Zero when gcd(a, n) > 1. */
int jacobi(const mpz_class& a, const mpz_class& n);

/* Largest divisor of n of the form s*t^2 -> s.  Keeps the sign:
   squarefree_part(-45) = -5. */
mpz_class squarefree_part(const mpz_class& n, const factor_limits& limits = {});

/* Number of distinct prime divisors of |n|. */
unsigned omega(const mpz_class& n, const factor_limits& limits = {});

/* x = residue (mod modulus), normalized so 0 <= residue < modulus and
   modulus >= 2. */
struct congruence {
    mpz_class residue;
    mpz_class modulus;

    congruence(mpz_class r, mpz_class m);
    bool operator==(const congruence&) const = default;
};

/* Simultaneous solution of a system with pairwise coprime moduli; the least
   non-negative representative is returned together with the product modulus.
   A shared factor raises std::invalid_argument naming the offending pair. */
congruence crt(const std::vector<congruence>& system);

/* floor(sqrt(n)) for n >= 0 */
mpz_class isqrt(const mpz_class& n);
long long isqrt_ll(long long n);

}  // namespace polya

#endif  // POLYA_INTEGER_MATH_HPP_
