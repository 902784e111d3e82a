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

#ifndef POLYA_POLYA_QUAD_HPP
#define POLYA_POLYA_QUAD_HPP

#include <optional>
#include <vector>

#include "polya/class_group.hpp"
#include "polya/quad_field.hpp"

namespace polya {

/* The five shapes of d giving a quadratic Polya field. */
enum class polya_case {
    not_polya,
    odd_prime,       /* d = p, odd prime */
    twice_prime,     /* d = 2p, p = 3 mod 4, or p = 1 mod 4 with unit norm +1 */
    two_odd_primes,  /* d = pq, both = 3 mod 4, or both = 1 mod 4 with unit norm +1 */
    small_d,         /* d = -1, -2 or 2 */
    minus_prime,     /* d = -p, p = 3 mod 4 */
};

const char* case_name(polya_case c);
unsigned case_number(polya_case c); /* 1..5, 0 for not_polya */

struct polya_classification {
    bool polya = false;
    polya_case label = polya_case::not_polya;

    bool operator==(const polya_classification&) const = default;
};

/* Shape test for Q(sqrt(d)); evaluates the fundamental unit norm only for
   the shapes that depend on it. Throws std::invalid_argument unless d is
   squarefree and not 0 or 1. */
polya_classification is_polya_quadratic(const mpz_class& d,
                                        const factor_limits& limits = {});

/* |Po(K)| in closed form: 2^(r-2) for real fields whose fundamental unit
   has norm +1, else 2^(r-1), with r the ramified-prime count. A negative
   exponent is clamped to 0 and reported through *clamped; no field is known
   to reach the clamp. */
mpz_class polya_order_formula(const quad_field& K, bool* clamped = nullptr,
                              const factor_limits& limits = {});

/* Po(K) computed from first principles: the subgroup of the ordinary class
   group generated by the classes of the ramified prime forms. Split and
   inert primes give principal classes and are not enumerated. Throws
   resource_limit_error past the oracle bound. */
class_group_structure polya_group_direct(const quad_field& K,
                                         const oracle_limits& limits =
                                             default_oracle_limits());

/* |H^1(Gal, units)| = 2^r / |Po(K)|; always 2, or 4 exactly for real fields
   whose fundamental unit has norm +1. */
mpz_class h1_order(const quad_field& K, const factor_limits& limits = {});

/*
 * Everything this library can say about one quadratic field.
 *
 * Invariants (checked en masse by verify_range):
 *   order_formula = *order_direct when the oracle ran
 *   is_polya iff order_formula = 1, and iff label != not_polya
 *   h1 * order_formula = 2^r with h1 in {2, 4}
 */
struct quad_report {
    mpz_class d;
    mpz_class disc;
    unsigned r = 0;
    int unit_norm = 0; /* +1 or -1; 0 means not applicable (imaginary) */
    mpz_class order_formula = 1;
    bool clamped = false;
    std::optional<mpz_class> order_direct; /* absent: oracle bound exceeded */
    std::vector<mpz_class> structure;      /* elementary divisors of Po(K) */
    bool is_polya = false;
    polya_case label = polya_case::not_polya;
    mpz_class h1 = 1;

    bool operator==(const quad_report&) const = default;
};

/* Builds the report for Q(sqrt(d)), squarefree-reducing d first. The direct
   group is attempted and silently omitted past the oracle bound. */
quad_report analyze_quad(const mpz_class& d,
                         const oracle_limits& limits = default_oracle_limits());

/*
 * Cross-validation sweep over every squarefree d in [d_min, d_max]:
 * formula order vs direct order, shape classification vs triviality, and
 * the exact-sequence identity. Fields past the oracle bound keep their
 * formula-side checks and are listed in skipped. All lists are sorted.
 */
struct range_report {
    int64_t d_min = 0;
    int64_t d_max = 0;
    long long checked = 0;
    std::vector<int64_t> skipped;
    std::vector<int64_t> violations;
    std::vector<int64_t> clamp_events;

    bool ok() const { return violations.empty(); }

    bool operator==(const range_report&) const = default;
};

range_report verify_range(int64_t d_min, int64_t d_max,
                          const oracle_limits& limits = default_oracle_limits(),
                          unsigned jobs = 1);

}  // namespace polya

#endif
