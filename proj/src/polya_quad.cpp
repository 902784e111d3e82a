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

#include "polya/polya_quad.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace polya {

namespace {

int64_t oracle_disc(const quad_field& K, const oracle_limits& limits) {
    if (!K.disc.fits_slong_p())
        throw resource_limit_error("polya group oracle: discriminant exceeds bound");
    int64_t D = (int64_t)K.disc.get_si();
    int64_t bound = std::min<int64_t>(limits.max_abs_disc, max_form_disc);
    if (D > bound || D < -bound)
        throw resource_limit_error("polya group oracle: discriminant exceeds bound");
    return D;
}

}  // namespace

const char* case_name(polya_case c) {
    switch (c) {
        case polya_case::odd_prime:
            return "odd-prime";
        case polya_case::twice_prime:
            return "twice-prime";
        case polya_case::two_odd_primes:
            return "two-odd-primes";
        case polya_case::small_d:
            return "small-d";
        case polya_case::minus_prime:
            return "minus-prime";
        case polya_case::not_polya:
            break;
    }
    return "none";
}

unsigned case_number(polya_case c) {
    switch (c) {
        case polya_case::odd_prime:
            return 1;
        case polya_case::twice_prime:
            return 2;
        case polya_case::two_odd_primes:
            return 3;
        case polya_case::small_d:
            return 4;
        case polya_case::minus_prime:
            return 5;
        case polya_case::not_polya:
            break;
    }
    return 0;
}

polya_classification is_polya_quadratic(const mpz_class& d,
                                        const factor_limits& limits) {
    if (d == 0 || d == 1)
        throw std::invalid_argument("polya classification: d must not be 0 or 1");
    factorization f = factor(d, limits);
    for (const prime_power& pp : f.factors)
        if (pp.e > 1)
            throw std::invalid_argument("polya classification: d must be squarefree");

    if (d == -1 || d == -2 || d == 2)
        return {true, polya_case::small_d};
    if (d > 0) {
        if (f.factors.size() == 1) /* odd prime: d = 2 already handled */
            return {true, polya_case::odd_prime};
        if (f.factors.size() == 2) {
            const mpz_class& p = f.factors[0].p;
            const mpz_class& q = f.factors[1].p;
            unsigned long qm = mpz_fdiv_ui(q.get_mpz_t(), 4);
            if (p == 2) {
                if (qm == 3 || (qm == 1 && unit_norm(d) == 1))
                    return {true, polya_case::twice_prime};
            } else {
                unsigned long pm = mpz_fdiv_ui(p.get_mpz_t(), 4);
                if ((pm == 3 && qm == 3) ||
                    (pm == 1 && qm == 1 && unit_norm(d) == 1))
                    return {true, polya_case::two_odd_primes};
            }
        }
    } else if (f.factors.size() == 1 &&
               mpz_fdiv_ui(f.factors[0].p.get_mpz_t(), 4) == 3) {
        return {true, polya_case::minus_prime};
    }
    return {false, polya_case::not_polya};
}

mpz_class polya_order_formula(const quad_field& K, bool* clamped,
                              const factor_limits& limits) {
    long r = (long)omega(K.disc, limits);
    long exponent =
        (K.d > 0 && unit_norm(K.d) == 1) ? r - 2 : r - 1;
    if (clamped)
        *clamped = exponent < 0;
    if (exponent < 0)
        exponent = 0;
    mpz_class order = 1;
    order <<= exponent;
    return order;
}

class_group_structure polya_group_direct(const quad_field& K,
                                         const oracle_limits& limits) {
    int64_t D = oracle_disc(K, limits);
    std::vector<form> gens;
    for (const mpz_class& p : ramified_primes(K))
        gens.push_back(ramified_prime_form(D, (int64_t)p.get_si()));
    return subgroup_structure(D, gens, false);
}

mpz_class h1_order(const quad_field& K, const factor_limits& limits) {
    mpz_class two_r = 1;
    two_r <<= omega(K.disc, limits);
    mpz_class po = polya_order_formula(K, nullptr, limits);
    /* po is a power of two not exceeding 2^r, so this is exact */
    return two_r / po;
}

quad_report analyze_quad(const mpz_class& d, const oracle_limits& limits) {
    quad_field K = field_from_d(d);
    quad_report rep;
    rep.d = K.d;
    rep.disc = K.disc;
    rep.r = omega(K.disc);
    rep.unit_norm = K.is_real ? unit_norm(K.d) : 0;
    rep.order_formula = polya_order_formula(K, &rep.clamped);
    try {
        class_group_structure st = polya_group_direct(K, limits);
        rep.order_direct = st.order;
        rep.structure = st.elementary_divisors;
    } catch (const resource_limit_error&) {
        /* keep the formula-side fields */
    }
    polya_classification cls = is_polya_quadratic(K.d);
    rep.is_polya = rep.order_formula == 1;
    rep.label = cls.label;
    rep.h1 = h1_order(K);
    return rep;
}

namespace {

/* 0 = not a field, 1 = all checks ran, 2 = oracle skipped, 3 = violation */
int check_one(int64_t d, const oracle_limits& limits, bool* clamped) {
    if (d == 0 || d == 1)
        return 0;
    mpz_class dz(d);
    if (squarefree_part(dz) != dz)
        return 0;
    quad_field K = field_from_d(dz);
    mpz_class formula = polya_order_formula(K, clamped);

    polya_classification cls = is_polya_quadratic(dz);
    if (cls.polya != (formula == 1))
        return 3;

    mpz_class h1 = h1_order(K);
    mpz_class two_r = 1;
    two_r <<= omega(K.disc);
    if (h1 * formula != two_r)
        return 3;
    if (h1 != 2 && h1 != 4)
        return 3;
    bool four = d > 0 && unit_norm(dz) == 1;
    if ((h1 == 4) != four)
        return 3;

    try {
        class_group_structure direct = polya_group_direct(K, limits);
        if (direct.order != formula)
            return 3;
        mpz_class prod = 1;
        for (const mpz_class& e : direct.elementary_divisors)
            prod *= e;
        if (prod != direct.order)
            return 3;
    } catch (const resource_limit_error&) {
        return 2;
    }
    return 1;
}

}  // namespace

range_report verify_range(int64_t d_min, int64_t d_max,
                          const oracle_limits& limits, unsigned jobs) {
    range_report rep;
    rep.d_min = d_min;
    rep.d_max = d_max;
    if (d_min > d_max)
        return rep;
    if (jobs < 1)
        jobs = 1;

    std::atomic<int64_t> next(d_min);
    std::atomic<long long> checked(0);
    std::vector<std::vector<int64_t>> skipped(jobs), violations(jobs),
        clamps(jobs);

    auto worker = [&](unsigned t) {
        while (true) {
            int64_t d = next.fetch_add(1);
            if (d > d_max)
                return;
            bool clamped = false;
            int status = check_one(d, limits, &clamped);
            if (status == 0)
                continue;
            checked.fetch_add(1);
            if (clamped)
                clamps[t].push_back(d);
            if (status == 2)
                skipped[t].push_back(d);
            else if (status == 3)
                violations[t].push_back(d);
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

    rep.checked = checked.load();
    for (unsigned t = 0; t < jobs; t++) {
        rep.skipped.insert(rep.skipped.end(), skipped[t].begin(), skipped[t].end());
        rep.violations.insert(rep.violations.end(), violations[t].begin(),
                              violations[t].end());
        rep.clamp_events.insert(rep.clamp_events.end(), clamps[t].begin(),
                                clamps[t].end());
    }
    std::sort(rep.skipped.begin(), rep.skipped.end());
    std::sort(rep.violations.begin(), rep.violations.end());
    std::sort(rep.clamp_events.begin(), rep.clamp_events.end());
    return rep;
}

}  // namespace polya
