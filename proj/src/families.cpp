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

#include "polya/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "polya/class_group.hpp"

namespace polya {

namespace {

constexpr const char* kCongruence = "congruence";
constexpr const char* kLegendre = "legendre-symbol";
constexpr const char* kUnitNorm = "unit-norm-oracle";
constexpr const char* kPrimality = "primality-test";
constexpr const char* kShapeOracle = "polya-shape-oracle";
constexpr const char* kArithmetic = "arithmetic";
constexpr const char* kCallerAsserted = "caller-asserted";
constexpr const char* kNormSearch = "norm-form-search";
constexpr const char* kNotEvaluated = "not-evaluated";

/* Accumulates hypotheses; a failed one downgrades the conclusion to
   not_applicable. */
struct claim_builder {
    theorem_claim c;
    bool all_ok = true;

    explicit claim_builder(theorem_tag t) { c.tag = t; }

    bool hyp(const char* text, bool satisfied, const char* method) {
        c.hypotheses.push_back({text, satisfied, method});
        all_ok = all_ok && satisfied;
        return satisfied;
    }

    void unevaluated(const char* text) {
        c.hypotheses.push_back({text, false, kNotEvaluated});
        all_ok = false;
    }

    theorem_claim done(claim_conclusion when_ok) {
        c.conclusion = all_ok ? when_ok : claim_conclusion::not_applicable;
        return std::move(c);
    }
};

unsigned long mod4(const mpz_class& n) { return mpz_fdiv_ui(n.get_mpz_t(), 4); }
unsigned long mod8(const mpz_class& n) { return mpz_fdiv_ui(n.get_mpz_t(), 8); }

/* |Po(K)| ranges compatible with a conclusion; second = 0 means no upper
   bound. Indecisive conclusions constrain nothing. */
std::pair<unsigned long, unsigned long> order_range(const theorem_claim& c) {
    switch (c.conclusion) {
        case claim_conclusion::polya:
            return {1, 1};
        case claim_conclusion::not_polya:
            return {2, 0};
        case claim_conclusion::po_is_z2:
            return {2, 2};
        case claim_conclusion::po_order: {
            unsigned long n = c.po_order.fits_ulong_p() ? c.po_order.get_ui() : 0;
            return n ? std::pair<unsigned long, unsigned long>{n, n}
                     : std::pair<unsigned long, unsigned long>{2, 0};
        }
        default:
            return {1, 0};
    }
}

void require_squarefree(const mpz_class& v, const char* what,
                        const factor_limits& limits) {
    if (v == 0 || v == 1)
        throw std::invalid_argument(std::string("biquadratic pair: ") + what +
                                    " must not be 0 or 1");
    if (squarefree_part(v, limits) != v)
        throw std::invalid_argument(std::string("biquadratic pair: ") + what +
                                    " must be squarefree");
}

const char* ordinal(size_t i) {
    switch (i) {
        case 0:
            return "first";
        case 1:
            return "second";
        default:
            return "third";
    }
}

}  // namespace

const char* tag_name(theorem_tag t) {
    switch (t) {
        case theorem_tag::biquad_two_polya_subfields:
            return "biquad-two-polya-subfields";
        case theorem_tag::compositum_coprime_ramification:
            return "compositum-coprime-ramification";
        case theorem_tag::pqr_order2_p3_q1_r1mod8:
            return "pqr-order2-p3-q1-r1mod8";
        case theorem_tag::pqr_order2_all1mod4:
            return "pqr-order2-all1mod4";
        case theorem_tag::pqr_polya_p3_q3_r5mod8:
            return "pqr-polya-p3-q3-r5mod8";
        case theorem_tag::pqr_polya_p3_q1_r5mod8:
            return "pqr-polya-p3-q1-r5mod8";
        case theorem_tag::p_2q_polya_both3mod8:
            return "p-2q-polya-both3mod8";
        case theorem_tag::minus_p_minus_q_polya:
            return "minus-p-minus-q-polya";
        case theorem_tag::pqr_order2_p3_q1mod8_r1mod8:
            return "pqr-order2-p3-q1mod8-r1mod8";
        case theorem_tag::pqr_order2_p3_q3_r1mod8:
            return "pqr-order2-p3-q3-r1mod8";
        case theorem_tag::two_pq_order2:
            return "two-pq-order2";
        case theorem_tag::cyclic_cubic_minpoly:
            return "cyclic-cubic-minpoly";
        case theorem_tag::cyclic_quartic_cases:
            return "cyclic-quartic-cases";
        case theorem_tag::cyclic_quintic_order:
            return "cyclic-quintic-order";
        case theorem_tag::lehmer_quintic_rank:
            return "lehmer-quintic-rank";
        case theorem_tag::sextic_pure_cubic_norms:
            return "sextic-pure-cubic-norms";
    }
    return "unknown";
}

const char* conclusion_name(claim_conclusion c) {
    switch (c) {
        case claim_conclusion::not_applicable:
            return "not-applicable";
        case claim_conclusion::polya:
            return "polya";
        case claim_conclusion::not_polya:
            return "not-polya";
        case claim_conclusion::po_is_z2:
            return "po-is-z2";
        case claim_conclusion::po_order:
            return "po-order";
        case claim_conclusion::unknown_within_bound:
            return "unknown-within-bound";
    }
    return "unknown";
}

const char* shape_name(biquad_shape s) {
    switch (s) {
        case biquad_shape::p_qr:
            return "p-qr";
        case biquad_shape::p_2q:
            return "p-2q";
        case biquad_shape::minus_p_minus_q:
            return "minus-p-minus-q";
        case biquad_shape::two_pq:
            return "2-pq";
    }
    return "unknown";
}

bool claims_conflict(const theorem_claim& a, const theorem_claim& b) {
    if (!a.decisive() || !b.decisive()) return false;
    auto [lo1, hi1] = order_range(a);
    auto [lo2, hi2] = order_range(b);
    if (hi1 && lo2 > hi1) return true;
    if (hi2 && lo1 > hi2) return true;
    return false;
}

theorem_claim classify_biquad_pair(const mpz_class& m, const mpz_class& n,
                                   const factor_limits& limits) {
    require_squarefree(m, "m", limits);
    require_squarefree(n, "n", limits);
    if (m == n)
        throw std::invalid_argument("biquadratic pair: m and n must be distinct");

    claim_builder b(theorem_tag::biquad_two_polya_subfields);
    bool m_polya = is_polya_quadratic(m, limits).polya;
    bool n_polya = is_polya_quadratic(n, limits).polya;
    b.hyp("Q(sqrt m) is a Polya field", m_polya, kShapeOracle);
    b.hyp("Q(sqrt n) is a Polya field", n_polya, kShapeOracle);
    if (!b.all_ok) return b.done(claim_conclusion::polya);

    const mpz_class& lo = std::min(m, n);
    const mpz_class& hi = std::max(m, n);
    bool excluded_minus2 =
        lo == -2 && hi > 2 && mod4(hi) == 3 && is_prime(hi);
    bool excluded_minus1 = false;
    if (lo == -1 && hi > 2 && mpz_even_p(hi.get_mpz_t())) {
        mpz_class half = hi / 2;
        excluded_minus1 = mpz_odd_p(half.get_mpz_t()) && is_prime(half);
    }
    if (excluded_minus2) {
        b.hyp("the pair is Q(sqrt -2), Q(sqrt p) with p = 3 (mod 4) prime",
              true, kCongruence);
        return b.done(claim_conclusion::not_polya);
    }
    if (excluded_minus1) {
        b.hyp("the pair is Q(sqrt -1), Q(sqrt 2q) with q an odd prime", true,
              kCongruence);
        return b.done(claim_conclusion::not_polya);
    }
    b.hyp("the pair avoids both excluded shapes", true, kCongruence);
    return b.done(claim_conclusion::polya);
}

std::vector<theorem_claim> classify_biquad_primes(
    biquad_shape shape, const std::vector<mpz_class>& primes,
    const factor_limits& limits) {
    size_t want = shape == biquad_shape::p_qr ? 3 : 2;
    if (primes.size() != want)
        throw std::invalid_argument(
            std::string("biquadratic shape ") + shape_name(shape) + " takes " +
            (want == 3 ? "three" : "two") + " primes");
    for (size_t i = 0; i < primes.size(); ++i) {
        if (primes[i] <= 2 || !is_prime(primes[i]))
            throw std::invalid_argument(std::string("biquadratic shape: ") +
                                        ordinal(i) + " entry must be an odd prime");
        for (size_t j = 0; j < i; ++j)
            if (primes[i] == primes[j])
                throw std::invalid_argument(
                    "biquadratic shape: primes must be distinct");
    }

    std::vector<theorem_claim> claims;
    if (shape == biquad_shape::p_qr) {
        const mpz_class &p = primes[0], &q = primes[1], &r = primes[2];
        unsigned long p4 = mod4(p), q4 = mod4(q), r4 = mod4(r);
        unsigned long q8 = mod8(q), r8 = mod8(r);

        {
            claim_builder b(theorem_tag::pqr_order2_p3_q1_r1mod8);
            b.hyp("p = 3 (mod 4)", p4 == 3, kCongruence);
            b.hyp("q = 1 (mod 4)", q4 == 1, kCongruence);
            b.hyp("r = 1 (mod 8)", r8 == 1, kCongruence);
            b.hyp("(q/r) = -1", jacobi(q, r) == -1, kLegendre);
            b.hyp("(p/r) = 1", jacobi(p, r) == 1, kLegendre);
            claims.push_back(b.done(claim_conclusion::po_is_z2));
        }
        {
            claim_builder b(theorem_tag::pqr_order2_all1mod4);
            b.hyp("p = 1 (mod 4)", p4 == 1, kCongruence);
            b.hyp("q = 1 (mod 4)", q4 == 1, kCongruence);
            b.hyp("r = 1 (mod 4)", r4 == 1, kCongruence);
            b.hyp("(p/r) = 1", jacobi(p, r) == 1, kLegendre);
            b.hyp("(q/r) = -1", jacobi(q, r) == -1, kLegendre);
            if (b.all_ok)
                b.hyp("fundamental unit of Q(sqrt pqr) has norm +1",
                      unit_norm(p * q * r) == 1, kUnitNorm);
            else
                b.unevaluated("fundamental unit of Q(sqrt pqr) has norm +1");
            claims.push_back(b.done(claim_conclusion::po_is_z2));
        }
        {
            claim_builder b(theorem_tag::pqr_polya_p3_q3_r5mod8);
            b.hyp("p = 3 (mod 4)", p4 == 3, kCongruence);
            b.hyp("q = 3 (mod 4)", q4 == 3, kCongruence);
            b.hyp("r = 5 (mod 8)", r8 == 5, kCongruence);
            claims.push_back(b.done(claim_conclusion::polya));
        }
        {
            claim_builder b(theorem_tag::pqr_polya_p3_q1_r5mod8);
            b.hyp("p = 3 (mod 4)", p4 == 3, kCongruence);
            b.hyp("q = 1 (mod 4)", q4 == 1, kCongruence);
            b.hyp("r = 5 (mod 8)", r8 == 5, kCongruence);
            b.hyp("(p/r) = 1", jacobi(p, r) == 1, kLegendre);
            b.hyp("(p/q) = -1", jacobi(p, q) == -1, kLegendre);
            claims.push_back(b.done(claim_conclusion::polya));
        }
        {
            claim_builder b(theorem_tag::pqr_order2_p3_q1mod8_r1mod8);
            b.hyp("p = 3 (mod 4)", p4 == 3, kCongruence);
            b.hyp("q = 1 (mod 8)", q8 == 1, kCongruence);
            b.hyp("r = 1 (mod 8)", r8 == 1, kCongruence);
            b.hyp("(q/r) = -1", jacobi(q, r) == -1, kLegendre);
            claims.push_back(b.done(claim_conclusion::po_is_z2));
        }
        {
            claim_builder b(theorem_tag::pqr_order2_p3_q3_r1mod8);
            b.hyp("p = 3 (mod 4)", p4 == 3, kCongruence);
            b.hyp("q = 3 (mod 4)", q4 == 3, kCongruence);
            b.hyp("r = 1 (mod 8)", r8 == 1, kCongruence);
            b.hyp("(p/r) = 1", jacobi(p, r) == 1, kLegendre);
            b.hyp("(q/r) = -1", jacobi(q, r) == -1, kLegendre);
            claims.push_back(b.done(claim_conclusion::po_is_z2));
        }
        claims.push_back(classify_biquad_pair(p, q * r, limits));
    } else if (shape == biquad_shape::p_2q) {
        const mpz_class &p = primes[0], &q = primes[1];
        claim_builder b(theorem_tag::p_2q_polya_both3mod8);
        b.hyp("p = 3 (mod 8)", mod8(p) == 3, kCongruence);
        b.hyp("q = 3 (mod 8)", mod8(q) == 3, kCongruence);
        claims.push_back(b.done(claim_conclusion::polya));
        claims.push_back(classify_biquad_pair(p, 2 * q, limits));
    } else if (shape == biquad_shape::minus_p_minus_q) {
        const mpz_class &p = primes[0], &q = primes[1];
        claim_builder b(theorem_tag::minus_p_minus_q_polya);
        b.hyp("p = 1 (mod 4)", mod4(p) == 1, kCongruence);
        b.hyp("q = 3 (mod 4)", mod4(q) == 3, kCongruence);
        b.hyp("(q/p) = -1", jacobi(q, p) == -1, kLegendre);
        claims.push_back(b.done(claim_conclusion::polya));
        claims.push_back(classify_biquad_pair(-p, -q, limits));
    } else {
        const mpz_class &p = primes[0], &q = primes[1];
        claim_builder b(theorem_tag::two_pq_order2);
        b.hyp("p = 1 (mod 4)", mod4(p) == 1, kCongruence);
        b.hyp("q = 1 (mod 4)", mod4(q) == 1, kCongruence);
        b.hyp("(p/q) = -1", jacobi(p, q) == -1, kLegendre);
        claims.push_back(b.done(claim_conclusion::po_is_z2));
        claims.push_back(classify_biquad_pair(2, p * q, limits));
    }
    return claims;
}

theorem_claim compositum_coprime_ramification(
    const std::map<mpz_class, unsigned>& e1,
    const std::map<mpz_class, unsigned>& e2, bool k1_polya, bool k2_polya) {
    for (const auto& m : {e1, e2})
        for (const auto& [p, e] : m)
            if (e < 1)
                throw std::invalid_argument(
                    "compositum: ramification indices must be positive");

    claim_builder b(theorem_tag::compositum_coprime_ramification);
    b.hyp("K1 is a Polya field, Galois over Q", k1_polya, kCallerAsserted);
    b.hyp("K2 is a Polya field, Galois over Q", k2_polya, kCallerAsserted);
    bool coprime = true;
    for (const auto& [p, e] : e1) {
        auto it = e2.find(p);
        if (it != e2.end() && std::gcd(e, it->second) != 1) coprime = false;
    }
    b.hyp("gcd(e1(p), e2(p)) = 1 at every prime", coprime, kArithmetic);
    return b.done(claim_conclusion::polya);
}

theorem_claim cyclic_cubic_is_polya() {
    claim_builder b(theorem_tag::cyclic_cubic_minpoly);
    b.hyp("a generator has minimal polynomial X^3 - 3X + 1", true, kArithmetic);
    return b.done(claim_conclusion::polya);
}

theorem_claim cyclic_cubic_is_polya(const mpz_class& u, const mpz_class& w,
                                    const factor_limits&) {
    claim_builder b(theorem_tag::cyclic_cubic_minpoly);
    b.hyp("w >= 1", w >= 1, kArithmetic);
    b.hyp("u = 2 (mod 3)", mpz_fdiv_ui(u.get_mpz_t(), 3) == 2, kCongruence);
    mpz_class four_p = u * u + 27 * w * w;
    if (b.hyp("u^2 + 27 w^2 = 0 (mod 4)", mod4(four_p) == 0, kArithmetic)) {
        mpz_class p = four_p / 4;
        b.hyp("p = (u^2 + 27 w^2)/4 is prime", is_prime(p), kPrimality);
    } else {
        b.unevaluated("p = (u^2 + 27 w^2)/4 is prime");
    }
    return b.done(claim_conclusion::polya);
}

mpz_class cyclic_order_formula(unsigned ell, unsigned r) {
    if (ell != 3 && ell != 5)
        throw std::invalid_argument("cyclic order formula: degree must be 3 or 5");
    if (r < 1)
        throw std::invalid_argument(
            "cyclic order formula: need at least one ramified prime");
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), ell, r - 1);
    return result;
}

namespace {

/* Resolves a quartic case whose remaining hypothesis is the caller's unit
   norm assertion. */
theorem_claim quartic_norm_case(claim_builder& b,
                                std::optional<bool> norm_is_plus_one) {
    if (!norm_is_plus_one) {
        /* shape hypotheses all hold here; only the norm is undecided */
        b.unevaluated("the unit norm condition N = 1 holds");
        b.c.conclusion = claim_conclusion::unknown_within_bound;
        return std::move(b.c);
    }
    if (*norm_is_plus_one) {
        b.hyp("the unit norm condition N = 1 holds", true, kCallerAsserted);
        return b.done(claim_conclusion::polya);
    }
    b.hyp("the unit norm condition N = 1 fails", true, kCallerAsserted);
    return b.done(claim_conclusion::not_polya);
}

}  // namespace

theorem_claim cyclic_quartic_classify(const mpz_class& A, const mpz_class& B,
                                      const mpz_class& C, const mpz_class& D,
                                      std::optional<bool> norm_is_plus_one,
                                      const factor_limits& limits) {
    if (mpz_even_p(A.get_mpz_t()))
        throw std::invalid_argument("cyclic quartic: A must be odd");
    if (A == 0 || squarefree_part(A, limits) != A)
        throw std::invalid_argument("cyclic quartic: A must be squarefree");
    if (B <= 0) throw std::invalid_argument("cyclic quartic: B must be positive");
    if (C <= 0) throw std::invalid_argument("cyclic quartic: C must be positive");
    if (D != B * B + C * C)
        throw std::invalid_argument("cyclic quartic: D must equal B^2 + C^2");
    if (squarefree_part(D, limits) != D)
        throw std::invalid_argument("cyclic quartic: D must be squarefree");
    if (gcd(A, D) != 1)
        throw std::invalid_argument("cyclic quartic: A and D must be coprime");

    claim_builder b(theorem_tag::cyclic_quartic_cases);
    if (D == 2) {
        if (A == 1 || A == -1) {
            b.hyp("A = 1 or A = -1", true, kArithmetic);
            b.hyp("D = 2, so K = Q(sqrt(+-(2 + sqrt 2)))", true, kArithmetic);
            return b.done(claim_conclusion::polya);
        }
        if (A > 2 && is_prime(A)) {
            b.hyp("A = q is an odd prime", true, kPrimality);
            b.hyp("D = 2, so K = Q(sqrt(q(2 + sqrt 2)))", true, kArithmetic);
            return quartic_norm_case(b, norm_is_plus_one);
        }
        b.hyp("the parameters match none of the six Polya cases", true,
              kArithmetic);
        return b.done(claim_conclusion::not_polya);
    }

    bool d_prime = is_prime(D);
    if (d_prime && A == 1) {
        b.hyp("A = 1 and D = p is a prime, p = 1 (mod 4)", true, kPrimality);
        if (mod4(B) == 0) {
            b.hyp("B = 0 (mod 4)", true, kCongruence);
            return b.done(claim_conclusion::polya);
        }
        b.hyp("B != 0 (mod 4)", true, kCongruence);
        return quartic_norm_case(b, norm_is_plus_one);
    }
    if (d_prime && A == -1) {
        b.hyp("A = -1 and D = p is a prime, p = 1 (mod 4)", true, kPrimality);
        if (mod4(B) == 2) {
            b.hyp("B = 2 (mod 4)", true, kCongruence);
            return b.done(claim_conclusion::polya);
        }
        b.hyp("the parameters match none of the six Polya cases", true,
              kCongruence);
        return b.done(claim_conclusion::not_polya);
    }
    if (d_prime && A > 2 && is_prime(A) && mod4(A + B) == 1) {
        b.hyp("A = q is an odd prime and D = p is a prime, p = 1 (mod 4)",
              true, kPrimality);
        b.hyp("q + B = 1 (mod 4)", true, kCongruence);
        return quartic_norm_case(b, norm_is_plus_one);
    }
    b.hyp("the parameters match none of the six Polya cases", true,
          kArithmetic);
    return b.done(claim_conclusion::not_polya);
}

lehmer_report lehmer_quintic(const mpz_class& n, const factor_limits& limits) {
    lehmer_report rep;
    rep.n = n;
    rep.m = (((n + 5) * n + 15) * n + 25) * n + 25;
    factorization f = factor(rep.m, limits);
    rep.omega_m = (unsigned)f.factors.size();
    rep.cube_free = std::all_of(f.factors.begin(), f.factors.end(),
                                [](const prime_power& pp) { return pp.e <= 2; });
    if (rep.cube_free && rep.omega_m >= 1) {
        rep.po_rank = rep.omega_m - 1;
        bool prime = f.factors.size() == 1 && f.factors[0].e == 1;
        rep.is_polya = prime || rep.m == 25;
    }
    return rep;
}

namespace {

using int128 = __int128;

int128 norm_form(int128 m, long x, long y, long z) {
    int128 X = x, Y = y, Z = z;
    return X * X * X + m * Y * Y * Y + m * m * Z * Z * Z - 3 * m * X * Y * Z;
}

}  // namespace

sextic_report sextic_pure_cubic(const mpz_class& m, long search_bound,
                                const factor_limits& limits) {
    if (m < 2) throw std::invalid_argument("sextic: m must be at least 2");
    if (search_bound < 1 || search_bound > 500)
        throw resource_limit_error("sextic: search bound out of range [1, 500]");
    if (m > mpz_class("1000000000000"))
        throw resource_limit_error("sextic: m exceeds the exact search range");
    factorization f = factor(m, limits);
    for (const prime_power& pp : f.factors)
        if (pp.e > 2) throw std::invalid_argument("sextic: m must be cube-free");

    sextic_report rep;
    rep.m = m;
    rep.a = 1;
    rep.b = 1;
    for (const prime_power& pp : f.factors) {
        if (pp.e & 1) rep.a *= pp.p;
        if (pp.e >= 2) rep.b *= pp.p;
    }

    bool avoid_three = (rep.a * rep.a - rep.b * rep.b) % 9 == 0;
    for (const prime_power& pp : f.factors) rep.required_primes.push_back(pp.p);
    if (!avoid_three &&
        std::find(rep.required_primes.begin(), rep.required_primes.end(), 3) ==
            rep.required_primes.end()) {
        rep.required_primes.push_back(3);
        std::sort(rep.required_primes.begin(), rep.required_primes.end());
    }

    claim_builder b(theorem_tag::sextic_pure_cubic_norms);
    b.hyp("m = a b^2 is cube-free and m >= 2", true, kArithmetic);
    b.hyp(avoid_three ? "a^2 = b^2 (mod 9): the primes dividing m suffice"
                      : "a^2 != b^2 (mod 9): every prime dividing 3m is needed",
          true, kArithmetic);

    int128 M = (int128)m.get_si(); /* fits: m <= 10^12 checked above */

    rep.witnesses.assign(rep.required_primes.size(), std::nullopt);
    std::vector<int128> targets;
    for (const mpz_class& p : rep.required_primes)
        targets.push_back((int128)p.get_si());

    size_t remaining = rep.required_primes.size();
    for (long s = 0; s <= search_bound && remaining > 0; ++s) {
        for (long x = -s; x <= s && remaining > 0; ++x) {
            for (long y = -s; y <= s && remaining > 0; ++y) {
                bool edge_xy = x == s || x == -s || y == s || y == -s;
                long step = edge_xy || s == 0 ? 1 : 2 * s;
                for (long z = -s; z <= s && remaining > 0; z += step) {
                    int128 N = norm_form(M, x, y, z);
                    int128 absN = N < 0 ? -N : N;
                    for (size_t i = 0; i < targets.size(); ++i) {
                        if (rep.witnesses[i] || absN != targets[i]) continue;
                        mpz_class value = rep.required_primes[i];
                        if (N < 0) value = -value;
                        rep.witnesses[i] = norm_witness{x, y, z, value};
                        --remaining;
                    }
                }
            }
        }
    }

    /* re-verify every recorded witness in exact arithmetic */
    for (size_t i = 0; i < rep.witnesses.size(); ++i) {
        if (!rep.witnesses[i]) continue;
        const norm_witness& wit = *rep.witnesses[i];
        mpz_class X = wit.x, Y = wit.y, Z = wit.z;
        mpz_class N = X * X * X + m * Y * Y * Y + m * m * Z * Z * Z -
                      3 * m * X * Y * Z;
        if (N != wit.value || abs(N) != rep.required_primes[i])
            throw std::logic_error("sextic: witness re-verification failed");
    }

    bool all_found = remaining == 0;
    b.hyp("every required prime is a norm from Q(cbrt m)", all_found,
          kNormSearch);
    rep.claim = b.done(claim_conclusion::polya);
    if (!all_found)
        rep.claim.conclusion = claim_conclusion::unknown_within_bound;
    return rep;
}

}  // namespace polya
