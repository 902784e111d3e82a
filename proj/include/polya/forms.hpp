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

#ifndef POLYA_FORMS_HPP
#define POLYA_FORMS_HPP

#include <cstdint>
#include <vector>

#include "polya/integer_math.hpp"

namespace polya {

/* Largest |discriminant| the int64 form arithmetic accepts. Keeps every
   intermediate product inside __int128 with a wide margin. */
inline constexpr int64_t max_form_disc = 1'000'000'000;

/*
 * Integral binary quadratic form a x^2 + b xy + c y^2.
 *
 * Invariants:
 *   a != 0
 *   disc() = b^2 - 4ac is not a perfect square (so c != 0 as well)
 *   |disc()| <= max_form_disc for every operation below
 */
struct form {
    int64_t a = 0;
    int64_t b = 0;
    int64_t c = 0;

    int64_t disc() const;

    bool operator==(const form&) const = default;
    /* lexicographic on (a, b, c); used for canonical class representatives */
    bool operator<(const form& o) const;
};

bool is_primitive(const form& f);

/* Definite: |b| <= a <= c with b >= 0 when |b| = a or a = c.
   Indefinite with s = isqrt(disc): 0 < b <= s, 2|a| - b <= s, 2|a| + b >= s+1
   (the integer form of |sqrt(disc) - 2|a|| < b < sqrt(disc)). */
bool is_reduced(const form& f);

/* One step along the reduction / cycle operator for indefinite forms:
   (a, b, c) -> (c, b', *) with b' = -b mod 2|c| placed in the window
   (s - 2|c|, s] when |c| <= s, otherwise (-|c|, |c|].
   Applied to a reduced form it walks the form's cycle. */
form rho(const form& f);

/* Canonical reduced representative for definite forms; some reduced form on
   the cycle for indefinite ones. Throws std::invalid_argument for imprimitive
   or degenerate input, resource_limit_error beyond max_form_disc. */
form reduce(const form& f);

/* Full rho-cycle starting at reduce(f); a single element for definite forms.
   The cycle is one class of the narrow class group. */
std::vector<form> form_cycle(const form& f);

/* Unique per-class representative: the reduced form (definite) or the
   lexicographically least form of the cycle (indefinite). Classes are equal
   iff their canonical forms are equal. */
form canonical_form(const form& f);

/* (a, -b, c): represents the inverse class. */
form opposite(const form& f);

/* Gauss composition. Inputs must share a discriminant and be primitive.
   Returns a reduced form in the product class. */
form compose(const form& f, const form& g);

/* (1, 0, -disc/4) or (1, 1, (1-disc)/4): the identity class. */
form principal_form(int64_t disc);

/* The reduced form with leading coefficient -1 (indefinite only). Its class
   is trivial in the narrow group exactly when the fundamental unit has
   norm -1; otherwise it generates the kernel of narrow -> ordinary. */
form minus_one_form(int64_t disc);

/* Form (p, B, (B^2 - disc)/(4p)) for a ramified prime p | disc, with the
   canonical B in [0, 2p): B = p or 0 for odd p (disc odd / even), and for
   p = 2, B = 2 when disc = 12 (mod 16), B = 0 when disc = 8 (mod 16).
   Represents the class of the prime ideal above p. */
form ramified_prime_form(int64_t disc, int64_t p);

/* True iff the class of f is trivial in the narrow class group: the reduced
   form has a = 1 (definite) or the cycle contains a form with a = 1. */
bool is_narrow_principal(const form& f);

/* True iff the class of f is trivial in the ordinary class group: as above
   but a form with a = -1 also qualifies (it absorbs the sign class when the
   fundamental unit has norm +1). */
bool is_ordinary_principal(const form& f);

}  // namespace polya

#endif
