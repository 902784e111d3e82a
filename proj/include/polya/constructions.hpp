// Copyright 2026 the polya authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYA_CONSTRUCTIONS_HPP
#define POLYA_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "polya/class_group.hpp"
#include "polya/integer_math.hpp"

namespace polya {

/*
 * CRT constructions of runs of consecutive real quadratic fields whose class
 * numbers (or Polya group orders) all clear a requested bound, with
 * machine-checkable certificates, plus exploratory scans over consecutive
 * discriminants.
 */

/* class_number: certify 2^n | h(K_i); polya: certify |Po(K_i)| >= 2^n, with
   every grid prime = 3 (mod 4) so the fundamental unit has norm +1. */
enum class construction_variant {
    class_number,
    polya,
};

const char* variant_name(construction_variant v);

/* One certified field of a construction.  For the consecutive construction
   the field value is d+i (i = 1..k); for the multiplicative one it is j*d
   (recorded with i = j).
 *
 * Invariants:
 *   reduced_d = squarefree part of field_value
 *   exact_divisibility iff every own-grid prime divides field_value exactly
 *     once
 *   disjoint iff no other grid's prime divides field_value (consecutive), or
 *     reduced_d differs from every earlier check's reduced_d (multiplicative)
 *   odd_prime_count = number of odd primes dividing reduced_d
 *   guaranteed_divisor = 2^n (resp. 2^t), the genus-theory divisor of the
 *     class number, or lower bound on the Polya group order
 */
struct certificate_check {
    long i = 0;
    mpz_class field_value;
    mpz_class reduced_d;
    bool exact_divisibility = false;
    bool disjoint = false;
    unsigned odd_prime_count = 0;
    mpz_class guaranteed_divisor;

    bool operator==(const certificate_check&) const = default;
};

/* Certificate that the k consecutive fields Q(sqrt(d+1)), ..., Q(sqrt(d+k))
   are pairwise distinct real quadratic fields with 2^n | h (class_number
   variant) or |Po| >= 2^n (polya variant).
 *
 * Invariants:
 *   2^n > M and n >= 1
 *   prime_grid holds k pairwise disjoint lists of n+2 odd primes, each
 *     prime > k, ascending within and across lists (polya variant: every
 *     prime = 3 mod 4)
 *   modulus = product of the squares of all grid primes
 *   0 <= d < modulus and d + i = p (mod p^2) for every prime p of grid i,
 *     so p divides d+i exactly once
 *   checks has one entry per field, in field order
 */
struct construction_certificate {
    unsigned long k = 0;
    double M = 0.0;
    unsigned n = 0;
    construction_variant variant = construction_variant::class_number;
    std::vector<std::vector<mpz_class>> prime_grid;
    mpz_class d;
    mpz_class modulus;
    std::vector<certificate_check> checks;

    bool operator==(const construction_certificate&) const = default;
};

/* Certificate that the fields Q(sqrt(j*d)), j = 1..k, all have 2^t | h
   (class_number variant) or |Po| >= 2^t (polya variant).
 *
 * Invariants:
 *   2^t > M and t >= 1
 *   primes holds the t+2 smallest admissible primes > k, ascending; d is
 *     their product (squarefree, coprime to every j <= k)
 *   fields_distinct iff the squarefree parts of j*d are pairwise distinct;
 *     this holds exactly when k <= 3, since sqrt(4d) and sqrt(d) generate
 *     the same field
 */
struct multiplicative_certificate {
    unsigned long k = 0;
    double M = 0.0;
    unsigned t = 0;
    construction_variant variant = construction_variant::class_number;
    std::vector<mpz_class> primes;
    mpz_class d;
    bool fields_distinct = false;
    std::vector<certificate_check> checks;

    bool operator==(const multiplicative_certificate&) const = default;
};

/* Outcome of re-deriving a certificate from scratch.  structural covers the
   divisibility, disjointness and prime-count facts; oracle covers the exact
   class-number (or Polya-order and unit-norm) confirmations attempted for
   fields whose discriminant magnitude is within the oracle budget. */
struct verification_report {
    bool structural_ok = true;
    bool oracle_ok = true;
    unsigned oracle_checked = 0;
    unsigned oracle_skipped = 0;
    std::vector<std::string> failures;

    bool ok() const { return structural_ok && oracle_ok; }

    bool operator==(const verification_report&) const = default;
};

/* Builds the certificate for k consecutive fields clearing the bound M > 0:
   picks the smallest n >= 1 with 2^n > M, fills the grid with the smallest
   admissible primes in increasing order, and solves X = -i + p (mod p^2) for
   the least non-negative d.  The result is self-verified structurally before
   it is returned.  Throws std::invalid_argument on bad parameters and
   resource_limit_error when the CRT modulus leaves desk scale. */
construction_certificate construct_consecutive(
    unsigned long k, double M,
    construction_variant variant = construction_variant::class_number,
    const factor_limits& limits = {});

/* Re-derives every certified fact from scratch.  Structural checks always
   run: grid shape, modulus product, exact divisibility p || d+i, cross-grid
   non-divisibility, squarefree parts with at least n+2 odd prime divisors,
   and the guaranteed divisor value.  Fields whose discriminant magnitude is
   at most oracle_budget additionally get the exact confirmation
   2^n | h(d+i), or unit norm +1 and |Po(d+i)| >= 2^n; the rest are counted
   in oracle_skipped.  Budget 0 therefore means structural checks only.
   Every failed check appends a human-readable entry to failures. */
verification_report verify_certificate(const construction_certificate& cert,
                                       int64_t oracle_budget = 0,
                                       const factor_limits& limits = {});

verification_report verify_certificate(const multiplicative_certificate& cert,
                                       int64_t oracle_budget = 0,
                                       const factor_limits& limits = {});

/* Runs the consecutive construction count times, raising the bound to the
   certified 2^n after each round, so every later tuple clears the earlier
   bound.  Grids never reuse a prime from an earlier round, nor any prime
   dividing an earlier field value, so a fresh grid prime divides each new
   field and no earlier one: the field sets are pairwise disjoint. */
std::vector<construction_certificate> iterate_tuples(
    unsigned long k, double M, unsigned count,
    construction_variant variant = construction_variant::class_number,
    const factor_limits& limits = {});

/* Single-modulus variant: d is the product of the t+2 smallest admissible
   primes > k, where t >= 1 is minimal with 2^t > M, and every field
   Q(sqrt(j*d)) for j = 1..k inherits all t+2 ramified primes because
   gcd(j, d) = 1.  Self-verified structurally before return. */
multiplicative_certificate construct_multiplicative(
    unsigned long k, double M,
    construction_variant variant = construction_variant::class_number,
    const factor_limits& limits = {});

/* One consecutive pair (d, d+1), both taken through their squarefree parts.
 *
 * Invariants:
 *   left_d, right_d are the squarefree parts of d and d+1, both != 0, 1
 *   left_value, right_value are the compared quantities (class number or
 *     Polya group order) of Q(sqrt(left_d)), Q(sqrt(right_d))
 *   gap = |left_value - right_value|
 */
struct scan_record {
    int64_t d = 0;
    mpz_class left_d;
    mpz_class right_d;
    mpz_class left_value;
    mpz_class right_value;
    mpz_class gap;

    bool operator==(const scan_record&) const = default;
};

/* min_gap is empty when no pair in the range survived the squarefree
   reduction; records lists every pair attaining the minimum, ascending. */
struct scan_result {
    std::optional<mpz_class> min_gap;
    std::vector<scan_record> records;

    bool operator==(const scan_result&) const = default;
};

/* Scans pairs (d, d+1) for d in [d_min, d_max], comparing class numbers of
   the squarefree parts.  Pairs where either part reduces to 1 are skipped.
   Requires 2 <= d_min; d_min > d_max yields the empty result.  jobs > 1
   splits the range across threads; the merged result is identical to the
   serial one. */
scan_result scan_class_gap(int64_t d_min, int64_t d_max,
                           const oracle_limits& limits = default_oracle_limits(),
                           unsigned jobs = 1);

/* Same sweep comparing Polya group orders, computed by the closed-form
   order formula. */
scan_result scan_polya_gap(int64_t d_min, int64_t d_max,
                           const factor_limits& limits = {},
                           unsigned jobs = 1);

/* All pairs (m, m+1) with 2 <= m <= limit whose squarefree parts each have
   exactly k distinct prime divisors, ascending.  Requires limit >= 2. */
std::vector<std::pair<int64_t, int64_t>> scan_odd_exponent_pairs(
    int64_t limit, unsigned k, const factor_limits& limits = {});

/* Raw data for the candidate pair (2^(2^n), 2^(2^n) + 1).
 *
 * Invariants:
 *   power = 2^(2^n), fermat = power + 1
 *   pair is present iff fermat is prime
 *   sf_left/right and omega_left/right report the squarefree parts of the
 *     pair members and their distinct-prime counts; for n >= 1 the exponent
 *     2^n is even, so sf_left = 1 and omega_left = 0
 */
struct fermat_report {
    unsigned n = 0;
    mpz_class power;
    mpz_class fermat;
    bool fermat_prime = false;
    std::optional<std::pair<mpz_class, mpz_class>> pair;
    mpz_class sf_left;
    mpz_class sf_right;
    unsigned omega_left = 0;
    unsigned omega_right = 0;

    bool operator==(const fermat_report&) const = default;
};

/* Reports on the n-th candidate pair.  n beyond the cap raises
   resource_limit_error (the default cap 5 covers every known prime and the
   first composite). */
fermat_report fermat_pair(unsigned n, unsigned cap = 5);

}  // namespace polya

#endif
