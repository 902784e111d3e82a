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

#ifndef POLYA_CLASS_GROUP_HPP
#define POLYA_CLASS_GROUP_HPP

#include <vector>

#include "polya/forms.hpp"
#include "polya/quad_field.hpp"

namespace polya {

/*
 * Fundamental unit epsilon = (x + y sqrt(d)) / sigma of the real field
 * Q(sqrt(d)), found from the continued fraction of sqrt(d) (sigma = 1) or
 * of (P0 + sqrt(d))/2 (sigma = 2, d = 1 mod 4).
 *
 * Invariants:
 *   x, y > 0 and epsilon > 1
 *   x^2 - d y^2 = norm * sigma^2
 *   norm = (-1)^period
 */
struct unit_info {
    mpz_class x;
    mpz_class y;
    int sigma = 1;
    int norm = 0;
    unsigned period = 0;

    bool operator==(const unit_info&) const = default;
};

unit_info fundamental_unit(const mpz_class& d);

/* Norm of the fundamental unit only: the same continued fraction walk
   without convergents, cached. */
int unit_norm(const mpz_class& d);

/* Enumeration budget for the brute-force class group oracle. The default can
   be overridden with the POLYA_ORACLE_BOUND environment variable. */
struct oracle_limits {
    int64_t max_abs_disc = 100'000'000;
};
oracle_limits default_oracle_limits();

/*
 * Finite abelian group presented by elementary divisors d1 | d2 | ... and a
 * matching generator for each cyclic factor.
 *
 * Invariants:
 *   product of elementary_divisors = order
 *   generators[i] has order elementary_divisors[i]
 */
struct class_group_structure {
    mpz_class order = 1;
    std::vector<mpz_class> elementary_divisors;
    std::vector<form> generators;
};

/* Canonical representatives of the form classes: reduced forms (definite),
   rho-cycles (indefinite narrow), or cycle pairs merged by the minus-one
   class (indefinite ordinary). For definite fields narrow and ordinary
   coincide. Throws resource_limit_error past the enumeration budget. */
std::vector<form> class_representatives(const quad_field& K, bool narrow,
                                        const oracle_limits& limits =
                                            default_oracle_limits());

/* Canonical representative of f's class in the ordinary class group. */
form ordinary_form(const form& f);

mpz_class class_number(const quad_field& K, bool narrow = false,
                       const oracle_limits& limits = default_oracle_limits());

/* Full structure: order, elementary divisors, generators. Results are
   memoized per (disc, narrow) in a read-mostly cache. */
class_group_structure class_group(const quad_field& K, bool narrow = false,
                                  const oracle_limits& limits =
                                      default_oracle_limits());

/* Structure of the subgroup generated by the given forms inside the narrow
   or ordinary class group of discriminant disc. */
class_group_structure subgroup_structure(int64_t disc,
                                         const std::vector<form>& gens,
                                         bool narrow);

/* 2-rank of the narrow class group: log2 of the number of classes equal to
   their own inverse. */
unsigned narrow_two_rank(const quad_field& K,
                         const oracle_limits& limits = default_oracle_limits());

/* Triviality of f's class in the ordinary class group of K.
   Throws std::invalid_argument when the discriminants differ. */
bool is_principal(const quad_field& K, const form& f);

}  // namespace polya

#endif
