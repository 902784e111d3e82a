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

#ifndef POLYA_FAMILIES_HPP
#define POLYA_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polya/integer_math.hpp"
#include "polya/polya_quad.hpp"

namespace polya {

/*
 * Published Polya-field criteria for number fields of degree > 2, packaged
 * as hypothesis-checked decision procedures. Each procedure returns
 * theorem_claim records: which criterion was consulted, which hypotheses
 * held (and how they were checked), and what follows. A claim never
 * asserts more than its hypotheses warrant; when a criterion simply does
 * not apply the conclusion is not_applicable, and when it depends on an
 * unfinished search or an unsupplied caller assertion it is
 * unknown_within_bound.
 */

/* One criterion from the registry, named by the field shape it decides. */
enum class theorem_tag {
    biquad_two_polya_subfields,      /* compositum of two Polya quadratics */
    compositum_coprime_ramification, /* coprime ramification indices */
    pqr_order2_p3_q1_r1mod8,         /* Q(sqrt p, sqrt qr), Po = Z/2 */
    pqr_order2_all1mod4,             /* Q(sqrt p, sqrt qr), Po = Z/2 */
    pqr_polya_p3_q3_r5mod8,          /* Q(sqrt p, sqrt qr), Polya */
    pqr_polya_p3_q1_r5mod8,          /* Q(sqrt p, sqrt qr), Polya */
    p_2q_polya_both3mod8,            /* Q(sqrt p, sqrt 2q), Polya */
    minus_p_minus_q_polya,           /* Q(sqrt -p, sqrt -q), Polya */
    pqr_order2_p3_q1mod8_r1mod8,     /* Q(sqrt p, sqrt qr), Po = Z/2 */
    pqr_order2_p3_q3_r1mod8,         /* Q(sqrt p, sqrt qr), Po = Z/2 */
    two_pq_order2,                   /* Q(sqrt 2, sqrt pq), Po = Z/2 */
    cyclic_cubic_minpoly,            /* cyclic cubic generator families */
    cyclic_quartic_cases,            /* cyclic quartic six-case criterion */
    cyclic_quintic_order,            /* |Po| formula in degree 5 */
    lehmer_quintic_rank,             /* Lehmer quintic Po rank */
    sextic_pure_cubic_norms,         /* Q(zeta_3, cbrt m) norm criterion */
};

const char* tag_name(theorem_tag t);

enum class claim_conclusion {
    not_applicable,      /* some hypothesis failed; nothing follows */
    polya,               /* Po(K) trivial */
    not_polya,           /* Po(K) nontrivial, order not asserted */
    po_is_z2,            /* Po(K) cyclic of order 2 */
    po_order,            /* |Po(K)| = theorem_claim::po_order */
    unknown_within_bound, /* search exhausted or assertion unavailable */
};

const char* conclusion_name(claim_conclusion c);

/* How one hypothesis was decided. */
struct hypothesis {
    std::string text;   /* the condition, in the theorem's variables */
    bool satisfied = false;
    std::string method; /* congruence, legendre-symbol, unit-norm-oracle,
                           primality-test, polya-shape-oracle, arithmetic,
                           caller-asserted, norm-form-search, not-evaluated */

    bool operator==(const hypothesis&) const = default;
};

/*
 * Invariants:
 *   a decisive conclusion (polya, not_polya, po_is_z2, po_order) implies
 *     every hypothesis is satisfied
 *   po_order is meaningful only when conclusion = po_order
 */
struct theorem_claim {
    theorem_tag tag;
    std::vector<hypothesis> hypotheses;
    claim_conclusion conclusion = claim_conclusion::not_applicable;
    mpz_class po_order;

    bool decisive() const {
        return conclusion == claim_conclusion::polya ||
               conclusion == claim_conclusion::not_polya ||
               conclusion == claim_conclusion::po_is_z2 ||
               conclusion == claim_conclusion::po_order;
    }

    bool operator==(const theorem_claim&) const = default;
};

/* True when the two claims pin |Po(K)| down to disjoint sets, e.g. one
   says Polya and the other says Po = Z/2. Indecisive claims never
   conflict. */
bool claims_conflict(const theorem_claim& a, const theorem_claim& b);

/*
 * Compositum Q(sqrt m, sqrt n) of two distinct quadratic fields. Applies
 * only when both subfields are Polya; the conclusion is then Polya except
 * for the two excluded shapes Q(sqrt -2, sqrt p) with p = 3 mod 4 prime
 * and Q(sqrt -1, sqrt 2q) with q an odd prime, which are not Polya.
 * Throws std::invalid_argument unless m, n are distinct squarefree
 * integers other than 0 and 1.
 */
theorem_claim classify_biquad_pair(const mpz_class& m, const mpz_class& n,
                                   const factor_limits& limits = {});

/* Prime-tuple biquadratic shapes covered by the registry. */
enum class biquad_shape {
    p_qr,            /* Q(sqrt p, sqrt qr), three distinct odd primes */
    p_2q,            /* Q(sqrt p, sqrt 2q), two distinct odd primes */
    minus_p_minus_q, /* Q(sqrt -p, sqrt -q), two distinct odd primes */
    two_pq,          /* Q(sqrt 2, sqrt pq), two distinct odd primes */
};

const char* shape_name(biquad_shape s);

/*
 * Evaluates every registry criterion matching the shape, plus the
 * two-Polya-subfield compositum criterion on the defining pair. The
 * returned claims never conflict (tested invariant). Shape p_qr takes
 * primes {p, q, r}; the others take {p, q}. Throws std::invalid_argument,
 * naming the offending entry, unless the entries are distinct odd primes
 * of the right count.
 */
std::vector<theorem_claim> classify_biquad_primes(
    biquad_shape shape, const std::vector<mpz_class>& primes,
    const factor_limits& limits = {});

/*
 * Compositum criterion for two Polya fields, Galois over Q, whose
 * ramification indices are coprime at every prime: e1 and e2 map each
 * ramified prime to its index. Polya status of the factors is the
 * caller's assertion. Concludes polya or not_applicable only.
 */
theorem_claim compositum_coprime_ramification(
    const std::map<mpz_class, unsigned>& e1,
    const std::map<mpz_class, unsigned>& e2, bool k1_polya, bool k2_polya);

/*
 * Cyclic cubic fields. The no-argument form is the field with generator
 * minimal polynomial X^3 - 3X + 1, which is Polya. The (u, w) form is the
 * family X^3 - 3pX - pu with 4p = u^2 + 27w^2: Polya when p is prime,
 * w >= 1 and u = 2 mod 3. A (u, w) outside those constraints says nothing
 * about the field (another generator may still match), so the conclusion
 * is not_applicable.
 */
theorem_claim cyclic_cubic_is_polya();
theorem_claim cyclic_cubic_is_polya(const mpz_class& u, const mpz_class& w,
                                    const factor_limits& limits = {});

/* |Po(K)| = ell^(r-1) for cyclic K of odd prime degree ell in {3, 5} with
   r ramified primes. Throws std::invalid_argument for other ell or r < 1. */
mpz_class cyclic_order_formula(unsigned ell, unsigned r);

/*
 * Cyclic quartic K = Q(sqrt(A(D + B sqrt D))) with A odd and squarefree,
 * D = B^2 + C^2 squarefree, B, C > 0 and gcd(A, D) = 1; every cyclic
 * quartic arises this way. K is Polya exactly in six parameter cases;
 * three of them hypothesize that the fundamental unit of Q(sqrt D) has
 * norm +1 *in the quartic sense the theorem requires*, which this library
 * does not compute: the caller may assert it through norm_is_plus_one.
 * Without the assertion those cases conclude unknown_within_bound; with
 * it, polya or not_polya. Parameter tuples matching no case are not
 * Polya. Throws std::invalid_argument naming the violated constraint.
 */
theorem_claim cyclic_quartic_classify(
    const mpz_class& A, const mpz_class& B, const mpz_class& C,
    const mpz_class& D, std::optional<bool> norm_is_plus_one = std::nullopt,
    const factor_limits& limits = {});

/*
 * Lehmer quintic field of index n: m = n^4 + 5n^3 + 15n^2 + 25n + 25.
 * When m is cube-free, Po(K) = (Z/5)^(omega(m) - 1) and K is Polya exactly
 * when m is prime or m = 25. Nothing is asserted otherwise.
 */
struct lehmer_report {
    mpz_class n;
    mpz_class m;
    bool cube_free = false;
    unsigned omega_m = 0;
    std::optional<unsigned> po_rank; /* absent unless cube-free */
    std::optional<bool> is_polya;    /* absent unless cube-free */

    bool operator==(const lehmer_report&) const = default;
};

lehmer_report lehmer_quintic(const mpz_class& n,
                             const factor_limits& limits = {});

/* A solution of x^3 + m y^3 + m^2 z^3 - 3mxyz = value, |value| = p. */
struct norm_witness {
    long x = 0;
    long y = 0;
    long z = 0;
    mpz_class value;

    bool operator==(const norm_witness&) const = default;
};

/*
 * Sextic field Q(zeta_3, cbrt m), m = a b^2 cube-free and >= 2. K is
 * Polya iff every prime p dividing 3m (or just m, when a^2 = b^2 mod 9)
 * is the absolute norm of an element of Q(cbrt m), i.e. a value +-p of
 * the norm form above. The search runs over |x|, |y|, |z| <= search_bound
 * in a fixed order; finding every prime proves polya (witnesses recorded,
 * one per required prime), exhausting the bound proves nothing and yields
 * unknown_within_bound. Throws std::invalid_argument unless m >= 2 is
 * cube-free, and resource_limit_error when m exceeds the search's exact
 * integer range.
 */
struct sextic_report {
    theorem_claim claim;
    mpz_class m;
    mpz_class a; /* squarefree part */
    mpz_class b; /* m = a b^2 */
    std::vector<mpz_class> required_primes;
    std::vector<std::optional<norm_witness>> witnesses; /* per prime */

    bool operator==(const sextic_report&) const = default;
};

sextic_report sextic_pure_cubic(const mpz_class& m, long search_bound = 50,
                                const factor_limits& limits = {});

}  // namespace polya

#endif
