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

#include "polya/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <set>
#include <stdexcept>
#include <thread>

#include "polya/polya_quad.hpp"
#include "polya/quad_field.hpp"

namespace polya {

const char* variant_name(construction_variant v) {
    switch (v) {
    case construction_variant::class_number:
        return "class_number";
    case construction_variant::polya:
        return "polya";
    }
    return "?";
}

namespace {

/* Smallest exponent e >= 1 with 2^e > M.  The floor of 1 keeps degenerate
   bounds M < 1 from producing an empty divisibility claim. */
unsigned bound_exponent(double M, const std::string& who) {
    if (!(M > 0.0) || !std::isfinite(M))
        throw std::invalid_argument(who + ": M must be a positive finite bound");
    unsigned e = 1;
    while (std::ldexp(1.0, static_cast<int>(e)) <= M) {
        if (++e > 40)
            throw resource_limit_error(who + ": bound needs 2^e with e > 40");
    }
    return e;
}

/* Grid primes are odd primes > k; 2 is never admissible because the genus
   bound counts odd ramified primes.  The polya variant further restricts to
   p = 3 (mod 4), which forces unit norm +1 on every constructed field. */
bool admissible_prime(const mpz_class& p, unsigned long k,
                      construction_variant variant,
                      const std::set<mpz_class>& excluded) {
    if (p <= k || p == 2)
        return false;
    if (variant == construction_variant::polya &&
        mpz_fdiv_ui(p.get_mpz_t(), 4) != 3)
        return false;
    return excluded.count(p) == 0;
}

mpz_class next_admissible(mpz_class& cursor, unsigned long k,
                          construction_variant variant,
                          const std::set<mpz_class>& excluded) {
    mpz_class p = cursor;
    do {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    } while (!admissible_prime(p, k, variant, excluded));
    cursor = p;
    return p;
}

mpz_class two_to(unsigned e) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, e);
    return v;
}

/* Squarefree part and its odd-prime divisor count from a factorization. */
void squarefree_facts(const factorization& f, mpz_class& sf, unsigned& odd) {
    sf = f.sign;
    odd = 0;
    for (const auto& pp : f.factors) {
        if (pp.e % 2 == 0)
            continue;
        sf *= pp.p;
        if (pp.p != 2)
            odd++;
    }
}

construction_certificate build_consecutive(unsigned long k, double M,
                                           construction_variant variant,
                                           const std::set<mpz_class>& excluded,
                                           const factor_limits& limits) {
    if (k < 1)
        throw std::invalid_argument("construct_consecutive: k must be at least 1");

    construction_certificate cert;
    cert.k = k;
    cert.M = M;
    cert.n = bound_exponent(M, "construct_consecutive");
    cert.variant = variant;

    mpz_class cursor = k;
    mpz_class product = 1;
    std::vector<congruence> system;
    for (unsigned long i = 1; i <= k; i++) {
        std::vector<mpz_class> row;
        for (unsigned j = 0; j < cert.n + 2; j++) {
            mpz_class p = next_admissible(cursor, k, variant, excluded);
            mpz_class p2 = p * p;
            /* d + i = p (mod p^2), so p divides d+i exactly once */
            system.emplace_back(p - i, p2);
            product *= p2;
            row.push_back(std::move(p));
        }
        cert.prime_grid.push_back(std::move(row));
    }
    if (mpz_sizeinbase(product.get_mpz_t(), 2) > 512)
        throw resource_limit_error(
            "construct_consecutive: CRT modulus exceeds 512 bits");

    congruence solution = crt(system);
    cert.d = solution.residue;
    cert.modulus = solution.modulus;

    mpz_class guaranteed = two_to(cert.n);
    for (unsigned long i = 1; i <= k; i++) {
        certificate_check chk;
        chk.i = static_cast<long>(i);
        chk.field_value = cert.d + static_cast<long>(i);
        factorization f = factor(chk.field_value, limits);
        squarefree_facts(f, chk.reduced_d, chk.odd_prime_count);
        chk.exact_divisibility = true;
        for (const auto& p : cert.prime_grid[i - 1]) {
            mpz_class rest = chk.field_value / p;
            if (!mpz_divisible_p(chk.field_value.get_mpz_t(), p.get_mpz_t()) ||
                mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()))
                chk.exact_divisibility = false;
        }
        chk.disjoint = true;
        for (unsigned long g = 0; g < k; g++) {
            if (g == i - 1)
                continue;
            for (const auto& p : cert.prime_grid[g])
                if (mpz_divisible_p(chk.field_value.get_mpz_t(), p.get_mpz_t()))
                    chk.disjoint = false;
        }
        chk.guaranteed_divisor = guaranteed;
        cert.checks.push_back(std::move(chk));
    }

    verification_report self = verify_certificate(cert, 0, limits);
    if (!self.structural_ok)
        throw std::logic_error("construct_consecutive: self-verification failed: " +
                               self.failures.front());
    return cert;
}

/* Shared oracle step: exact confirmation for one field with squarefree part
   sf, claimed divisor 2^e.  Returns true when confirmed, false when refuted
   (with a message appended), and leaves the skip counter to the caller when
   the discriminant is out of budget. */
void oracle_confirm(const mpz_class& sf, const mpz_class& guaranteed,
                    construction_variant variant, int64_t oracle_budget,
                    const std::string& tag, verification_report& rep) {
    quad_field K = field_from_d(sf);
    if (abs(K.disc) > oracle_budget) {
        rep.oracle_skipped++;
        return;
    }
    oracle_limits olim;
    olim.max_abs_disc = oracle_budget;
    try {
        if (variant == construction_variant::class_number) {
            mpz_class h = class_number(K, false, olim);
            if (h % guaranteed != 0) {
                rep.oracle_ok = false;
                rep.failures.push_back(tag + ": class number " + h.get_str() +
                                       " is not divisible by " +
                                       guaranteed.get_str());
            }
        } else {
            if (unit_norm(sf) != 1) {
                rep.oracle_ok = false;
                rep.failures.push_back(tag + ": fundamental unit norm is not +1");
            }
            mpz_class po = polya_group_direct(K, olim).order;
            if (po < guaranteed) {
                rep.oracle_ok = false;
                rep.failures.push_back(tag + ": Polya group order " + po.get_str() +
                                       " is below " + guaranteed.get_str());
            }
        }
        rep.oracle_checked++;
    } catch (const resource_limit_error&) {
        rep.oracle_skipped++;
    }
}

}  // namespace

construction_certificate construct_consecutive(unsigned long k, double M,
                                               construction_variant variant,
                                               const factor_limits& limits) {
    return build_consecutive(k, M, variant, {}, limits);
}

verification_report verify_certificate(const construction_certificate& cert,
                                       int64_t oracle_budget,
                                       const factor_limits& limits) {
    verification_report rep;
    auto fail = [&rep](std::string msg) {
        rep.structural_ok = false;
        rep.failures.push_back(std::move(msg));
    };

    if (cert.k < 1)
        fail("certificate: k must be at least 1");
    if (cert.n < 1 || cert.n > 64)
        fail("certificate: exponent n out of range");
    else if (std::ldexp(1.0, static_cast<int>(cert.n)) <= cert.M)
        fail("certificate: 2^n does not exceed M");
    if (cert.prime_grid.size() != cert.k)
        fail("certificate: expected one prime grid per field");
    if (cert.checks.size() != cert.k)
        fail("certificate: expected one check per field");
    if (!rep.structural_ok)
        return rep;

    std::set<mpz_class> seen;
    mpz_class product = 1;
    mpz_class previous = 0;
    for (unsigned long g = 0; g < cert.k; g++) {
        const auto& row = cert.prime_grid[g];
        std::string where = "grid " + std::to_string(g + 1);
        if (row.size() != cert.n + 2)
            fail(where + ": expected " + std::to_string(cert.n + 2) + " primes");
        for (const auto& p : row) {
            if (p <= cert.k || p == 2 ||
                mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
                fail(where + ": " + p.get_str() +
                     " is not an odd prime greater than k");
            if (cert.variant == construction_variant::polya &&
                mpz_fdiv_ui(p.get_mpz_t(), 4) != 3)
                fail(where + ": " + p.get_str() + " is not 3 mod 4");
            if (p <= previous)
                fail(where + ": prime " + p.get_str() + " breaks ascending order");
            if (!seen.insert(p).second)
                fail(where + ": prime " + p.get_str() + " appears twice");
            product *= p * p;
            previous = p;
        }
    }
    if (cert.modulus != product)
        fail("certificate: modulus is not the product of the squared grid primes");
    if (cert.d < 0 || cert.d >= cert.modulus)
        fail("certificate: d is not the least non-negative CRT representative");
    if (!rep.structural_ok)
        return rep;

    mpz_class guaranteed = two_to(cert.n);
    std::vector<mpz_class> reduced;
    for (unsigned long i = 1; i <= cert.k; i++) {
        std::string tag = "field d+" + std::to_string(i);
        mpz_class value = cert.d + static_cast<long>(i);

        certificate_check truth;
        truth.i = static_cast<long>(i);
        truth.field_value = value;
        truth.exact_divisibility = true;
        for (const auto& p : cert.prime_grid[i - 1]) {
            bool divides = mpz_divisible_p(value.get_mpz_t(), p.get_mpz_t());
            bool twice = divides && mpz_divisible_p(mpz_class(value / p).get_mpz_t(),
                                                    p.get_mpz_t());
            if (!divides || twice) {
                truth.exact_divisibility = false;
                fail(tag + ": " + p.get_str() + " must divide it exactly once");
            }
        }
        truth.disjoint = true;
        for (unsigned long g = 0; g < cert.k; g++) {
            if (g == i - 1)
                continue;
            for (const auto& p : cert.prime_grid[g])
                if (mpz_divisible_p(value.get_mpz_t(), p.get_mpz_t())) {
                    truth.disjoint = false;
                    fail(tag + ": prime " + p.get_str() + " of grid " +
                         std::to_string(g + 1) + " divides it");
                }
        }
        factorization f = factor(value, limits);
        squarefree_facts(f, truth.reduced_d, truth.odd_prime_count);
        if (truth.odd_prime_count < cert.n + 2)
            fail(tag + ": squarefree part has " +
                 std::to_string(truth.odd_prime_count) +
                 " odd prime divisors, fewer than " +
                 std::to_string(cert.n + 2));
        truth.guaranteed_divisor = guaranteed;
        if (!(cert.checks[i - 1] == truth))
            fail(tag + ": recorded check disagrees with recomputation");
        reduced.push_back(truth.reduced_d);
    }
    for (unsigned long i = 0; i + 1 < cert.k; i++)
        for (unsigned long j = i + 1; j < cert.k; j++)
            if (reduced[i] == reduced[j])
                fail("fields d+" + std::to_string(i + 1) + " and d+" +
                     std::to_string(j + 1) + " share a squarefree part");
    if (!rep.structural_ok)
        return rep;

    for (unsigned long i = 1; i <= cert.k; i++)
        oracle_confirm(reduced[i - 1], guaranteed, cert.variant, oracle_budget,
                       "field d+" + std::to_string(i), rep);
    return rep;
}

multiplicative_certificate construct_multiplicative(unsigned long k, double M,
                                                    construction_variant variant,
                                                    const factor_limits& limits) {
    if (k < 1)
        throw std::invalid_argument("construct_multiplicative: k must be at least 1");

    multiplicative_certificate cert;
    cert.k = k;
    cert.M = M;
    cert.t = bound_exponent(M, "construct_multiplicative");
    cert.variant = variant;

    mpz_class cursor = k;
    cert.d = 1;
    for (unsigned j = 0; j < cert.t + 2; j++) {
        mpz_class p = next_admissible(cursor, k, variant, {});
        cert.d *= p;
        cert.primes.push_back(std::move(p));
    }
    if (mpz_sizeinbase(cert.d.get_mpz_t(), 2) > 512)
        throw resource_limit_error(
            "construct_multiplicative: modulus exceeds 512 bits");

    mpz_class guaranteed = two_to(cert.t);
    cert.fields_distinct = true;
    for (unsigned long j = 1; j <= k; j++) {
        certificate_check chk;
        chk.i = static_cast<long>(j);
        chk.field_value = j * cert.d;
        factorization f = factor(chk.field_value, limits);
        squarefree_facts(f, chk.reduced_d, chk.odd_prime_count);
        chk.exact_divisibility = true;
        for (const auto& p : cert.primes) {
            mpz_class rest = chk.field_value / p;
            if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()))
                chk.exact_divisibility = false;
        }
        chk.disjoint = true;
        for (const auto& earlier : cert.checks)
            if (earlier.reduced_d == chk.reduced_d)
                chk.disjoint = false;
        if (!chk.disjoint)
            cert.fields_distinct = false;
        chk.guaranteed_divisor = guaranteed;
        cert.checks.push_back(std::move(chk));
    }

    verification_report self = verify_certificate(cert, 0, limits);
    if (!self.structural_ok)
        throw std::logic_error("construct_multiplicative: self-verification failed: " +
                               self.failures.front());
    return cert;
}

verification_report verify_certificate(const multiplicative_certificate& cert,
                                       int64_t oracle_budget,
                                       const factor_limits& limits) {
    verification_report rep;
    auto fail = [&rep](std::string msg) {
        rep.structural_ok = false;
        rep.failures.push_back(std::move(msg));
    };

    if (cert.k < 1)
        fail("certificate: k must be at least 1");
    if (cert.t < 1 || cert.t > 64)
        fail("certificate: exponent t out of range");
    else if (std::ldexp(1.0, static_cast<int>(cert.t)) <= cert.M)
        fail("certificate: 2^t does not exceed M");
    if (cert.primes.size() != cert.t + 2)
        fail("certificate: expected t+2 primes");
    if (cert.checks.size() != cert.k)
        fail("certificate: expected one check per field");
    if (!rep.structural_ok)
        return rep;

    mpz_class product = 1;
    for (size_t idx = 0; idx < cert.primes.size(); idx++) {
        const mpz_class& p = cert.primes[idx];
        if (p <= cert.k || p == 2 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
            fail("prime " + p.get_str() + " is not an odd prime greater than k");
        if (cert.variant == construction_variant::polya &&
            mpz_fdiv_ui(p.get_mpz_t(), 4) != 3)
            fail("prime " + p.get_str() + " is not 3 mod 4");
        if (idx > 0 && !(cert.primes[idx - 1] < p))
            fail("prime " + p.get_str() + " breaks ascending order");
        product *= p;
    }
    if (cert.d != product)
        fail("certificate: d is not the product of the listed primes");
    if (!rep.structural_ok)
        return rep;

    mpz_class guaranteed = two_to(cert.t);
    bool all_distinct = true;
    std::vector<mpz_class> reduced;
    for (unsigned long j = 1; j <= cert.k; j++) {
        std::string tag = "field " + std::to_string(j) + "d";
        mpz_class value = j * cert.d;

        certificate_check truth;
        truth.i = static_cast<long>(j);
        truth.field_value = value;
        truth.exact_divisibility = true;
        for (const auto& p : cert.primes) {
            bool twice = mpz_divisible_p(mpz_class(value / p).get_mpz_t(),
                                         p.get_mpz_t());
            if (twice) {
                truth.exact_divisibility = false;
                fail(tag + ": " + p.get_str() + " must divide it exactly once");
            }
        }
        factorization f = factor(value, limits);
        squarefree_facts(f, truth.reduced_d, truth.odd_prime_count);
        if (truth.odd_prime_count < cert.t + 2)
            fail(tag + ": squarefree part has " +
                 std::to_string(truth.odd_prime_count) +
                 " odd prime divisors, fewer than " +
                 std::to_string(cert.t + 2));
        truth.disjoint = true;
        for (const auto& earlier : reduced)
            if (earlier == truth.reduced_d)
                truth.disjoint = false;
        if (!truth.disjoint)
            all_distinct = false;
        truth.guaranteed_divisor = guaranteed;
        if (!(cert.checks[j - 1] == truth))
            fail(tag + ": recorded check disagrees with recomputation");
        reduced.push_back(truth.reduced_d);
    }
    if (cert.fields_distinct != all_distinct)
        fail("certificate: fields_distinct flag disagrees with recomputation");
    if (!rep.structural_ok)
        return rep;

    for (unsigned long j = 1; j <= cert.k; j++)
        oracle_confirm(reduced[j - 1], guaranteed, cert.variant, oracle_budget,
                       "field " + std::to_string(j) + "d", rep);
    return rep;
}

std::vector<construction_certificate> iterate_tuples(unsigned long k, double M,
                                                     unsigned count,
                                                     construction_variant variant,
                                                     const factor_limits& limits) {
    if (count < 1)
        throw std::invalid_argument("iterate_tuples: count must be at least 1");

    std::vector<construction_certificate> out;
    std::set<mpz_class> excluded;
    double target = M;
    for (unsigned round = 0; round < count; round++) {
        construction_certificate cert =
            build_consecutive(k, target, variant, excluded, limits);
        for (const auto& row : cert.prime_grid)
            excluded.insert(row.begin(), row.end());
        /* also retire every prime of every field value: each later grid
           prime then divides its new field and no earlier one, so field
           sets cannot intersect across rounds */
        for (const auto& chk : cert.checks)
            for (const auto& pp : factor(chk.field_value, limits).factors)
                excluded.insert(pp.p);
        target = std::max(target, std::ldexp(1.0, static_cast<int>(cert.n)));
        out.push_back(std::move(cert));
    }
    return out;
}

namespace {

template <typename ValueOf>
scan_result run_gap_scan(int64_t d_min, int64_t d_max, unsigned jobs,
                         const factor_limits& flimits, ValueOf value_of) {
    if (d_min > d_max)
        return {};
    if (d_min < 2)
        throw std::invalid_argument("scan: d_min must be at least 2");
    if (jobs < 1)
        jobs = 1;

    struct local_best {
        std::optional<mpz_class> min;
        std::vector<scan_record> records;
    };
    std::vector<local_best> local(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::atomic<int64_t> next(d_min);

    auto worker = [&](unsigned t) {
        try {
            local_best& best = local[t];
            while (true) {
                int64_t d = next.fetch_add(1);
                if (d > d_max)
                    return;
                mpz_class left = squarefree_part(d, flimits);
                mpz_class right = squarefree_part(d + 1, flimits);
                if (left == 1 || right == 1)
                    continue;
                scan_record rec;
                rec.d = d;
                rec.left_d = std::move(left);
                rec.right_d = std::move(right);
                rec.left_value = value_of(rec.left_d);
                rec.right_value = value_of(rec.right_d);
                rec.gap = abs(rec.left_value - rec.right_value);
                if (!best.min || rec.gap < *best.min) {
                    best.min = rec.gap;
                    best.records.clear();
                }
                if (rec.gap == *best.min)
                    best.records.push_back(std::move(rec));
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; t++)
            pool.emplace_back(worker, t);
        for (auto& th : pool)
            th.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    scan_result res;
    for (const auto& best : local)
        if (best.min && (!res.min_gap || *best.min < *res.min_gap))
            res.min_gap = best.min;
    for (const auto& best : local)
        if (best.min && best.min == res.min_gap)
            res.records.insert(res.records.end(), best.records.begin(),
                               best.records.end());
    std::sort(res.records.begin(), res.records.end(),
              [](const scan_record& a, const scan_record& b) { return a.d < b.d; });
    return res;
}

}  // namespace

scan_result scan_class_gap(int64_t d_min, int64_t d_max,
                           const oracle_limits& limits, unsigned jobs) {
    return run_gap_scan(d_min, d_max, jobs, factor_limits{},
                        [&limits](const mpz_class& sf) {
                            return class_number(field_from_d(sf), false, limits);
                        });
}

scan_result scan_polya_gap(int64_t d_min, int64_t d_max,
                           const factor_limits& limits, unsigned jobs) {
    return run_gap_scan(d_min, d_max, jobs, limits,
                        [&limits](const mpz_class& sf) {
                            return polya_order_formula(field_from_d(sf, limits),
                                                       nullptr, limits);
                        });
}

std::vector<std::pair<int64_t, int64_t>> scan_odd_exponent_pairs(
    int64_t limit, unsigned k, const factor_limits& limits) {
    if (limit < 2)
        throw std::invalid_argument("scan_odd_exponent_pairs: limit must be at least 2");

    auto odd_exponent_count = [&limits](int64_t v) {
        unsigned c = 0;
        for (const auto& pp : factor(v, limits).factors)
            if (pp.e % 2 == 1)
                c++;
        return c;
    };

    std::vector<std::pair<int64_t, int64_t>> out;
    unsigned prev = odd_exponent_count(2);
    for (int64_t m = 2; m <= limit; m++) {
        unsigned cur = odd_exponent_count(m + 1);
        if (prev == k && cur == k)
            out.emplace_back(m, m + 1);
        prev = cur;
    }
    return out;
}

fermat_report fermat_pair(unsigned n, unsigned cap) {
    if (n > cap || n > 63)
        throw resource_limit_error("fermat_pair: n exceeds the configured cap");

    fermat_report rep;
    rep.n = n;
    unsigned long e = 1UL << n;
    mpz_ui_pow_ui(rep.power.get_mpz_t(), 2, e);
    rep.fermat = rep.power + 1;
    rep.fermat_prime = mpz_probab_prime_p(rep.fermat.get_mpz_t(), 40) != 0;
    /* 2^e has squarefree part 2 exactly when the exponent is odd, i.e. n=0 */
    rep.sf_left = e % 2 == 1 ? 2 : 1;
    rep.omega_left = e % 2 == 1 ? 1 : 0;
    factorization f = factor(rep.fermat, {});
    unsigned odd = 0;
    squarefree_facts(f, rep.sf_right, odd);
    rep.omega_right = odd;
    if (rep.fermat_prime)
        rep.pair = std::make_pair(rep.power, rep.fermat);
    return rep;
}

}  // namespace polya
