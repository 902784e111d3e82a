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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "polya/forms.hpp"

using namespace polya;

namespace {

/* test-local reduced predicates, written straight from the definitions */
bool reduced_definite_def(int64_t a, int64_t b, int64_t c) {
    int64_t ab = b < 0 ? -b : b;
    if (a <= 0 || ab > a || a > c)
        return false;
    if ((ab == a || a == c) && b < 0)
        return false;
    return true;
}

bool reduced_indefinite_def(int64_t a, int64_t b, int64_t D) {
    int64_t s = isqrt_ll(D);
    int64_t aa = a < 0 ? -a : a;
    return b > 0 && b <= s && 2 * aa - b <= s && 2 * aa + b >= s + 1;
}

/* test-local exhaustive enumeration of reduced primitive forms */
std::set<form> enumerate_reduced(int64_t D) {
    std::set<form> out;
    if (D < 0) {
        for (int64_t a = 1; 4 * a * a <= -D + a * a; a++) {
            if (3 * a * a > -D)
                break;
            for (int64_t b = -a; b <= a; b++) {
                int64_t num = b * b - D;
                if (num % (4 * a) != 0)
                    continue;
                int64_t c = num / (4 * a);
                form f{a, b, c};
                if (reduced_definite_def(a, b, c) && is_primitive(f))
                    out.insert(f);
            }
        }
        return out;
    }
    int64_t s = isqrt_ll(D);
    for (int64_t a = -s; a <= s; a++) {
        if (a == 0)
            continue;
        for (int64_t b = 1; b <= s; b++) {
            int64_t num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            form f{a, b, num / (4 * a)};
            if (reduced_indefinite_def(a, b, D) && is_primitive(f))
                out.insert(f);
        }
    }
    return out;
}

/* random SL2(Z) translate built from the two generator matrices */
form translate(const form& f, std::mt19937_64& rng) {
    int64_t p = 1, q = 0, r = 0, s = 1;
    int steps = 2 + (int)(rng() % 5);
    for (int i = 0; i < steps; i++) {
        if (rng() % 2) { /* right-multiply by [[1,k],[0,1]] */
            int64_t k = (int64_t)(rng() % 5) - 2;
            q += p * k;
            s += r * k;
        } else { /* right-multiply by [[0,-1],[1,0]] */
            int64_t np = q, nq = -p, nr = s, ns = -r;
            p = np;
            q = nq;
            r = nr;
            s = ns;
        }
    }
    form g;
    g.a = f.a * p * p + f.b * p * r + f.c * r * r;
    g.b = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s;
    g.c = f.a * q * q + f.b * q * s + f.c * s * s;
    return g;
}

std::set<form> class_reps(int64_t D) {
    std::set<form> reps;
    for (const form& f : enumerate_reduced(D))
        reps.insert(canonical_form(f));
    return reps;
}

}  // namespace

TEST_CASE("reduced form enumeration matches known class lists") {
    CHECK(enumerate_reduced(-4) == std::set<form>{{1, 0, 1}});
    CHECK(enumerate_reduced(-20) == std::set<form>{{1, 0, 5}, {2, 2, 3}});
    CHECK(enumerate_reduced(-23) ==
          std::set<form>{{1, 1, 6}, {2, 1, 3}, {2, -1, 3}});
    CHECK(enumerate_reduced(-84) ==
          std::set<form>{{1, 0, 21}, {2, 2, 11}, {3, 0, 7}, {5, 4, 5}});
}

TEST_CASE("library agrees with the test-local reduced predicate") {
    for (int64_t D : {-4, -20, -23, -84, -163, -231, 8, 12, 40, 105, 316}) {
        int64_t s = D > 0 ? isqrt_ll(D) : isqrt_ll(-D) + 1;
        for (int64_t a = -s - 3; a <= s + 3; a++) {
            if (a == 0)
                continue;
            for (int64_t b = -s - 3; b <= s + 3; b++) {
                int64_t num = b * b - D;
                if (num % (4 * a) != 0)
                    continue;
                form f{a, b, num / (4 * a)};
                bool expect = D < 0 ? reduced_definite_def(f.a, f.b, f.c)
                                    : reduced_indefinite_def(f.a, f.b, D);
                CHECK(is_reduced(f) == expect);
            }
        }
    }
}

TEST_CASE("reduce finds the unique definite representative") {
    /* (5,10,6) represents 1 at (1,-1), so it must land on the principal form */
    CHECK(reduce({5, 10, 6}) == form{1, 0, 5});
    CHECK(reduce({7, 8, 3}) == form{2, 2, 3});
    CHECK(reduce({1, 0, 5}) == form{1, 0, 5});
    std::mt19937_64 rng(41);
    for (int64_t D : {-20, -23, -84, -163, -231, -4027}) {
        for (const form& f : enumerate_reduced(D)) {
            CHECK(reduce(reduce(f)) == reduce(f)); /* idempotent */
            for (int i = 0; i < 10; i++) {
                form g = translate(f, rng);
                CHECK(g.disc() == D);
                CHECK(reduce(g) == f);
            }
        }
    }
}

TEST_CASE("reduce rejects bad input") {
    CHECK_THROWS_AS(reduce({2, 2, 2}), std::invalid_argument);   /* imprimitive */
    CHECK_THROWS_AS(reduce({1, 3, 0}), std::invalid_argument);   /* disc 9 square */
    CHECK_THROWS_AS(reduce({-1, 0, -5}), std::invalid_argument); /* negative definite */
    CHECK_THROWS_AS(reduce({0, 1, 1}), std::invalid_argument);
    form huge{1, 0, 2'000'000'000};
    CHECK_THROWS_AS(reduce(huge), resource_limit_error);
}

TEST_CASE("indefinite reduce lands on the cycle of the input class") {
    std::mt19937_64 rng(43);
    for (int64_t D : {8, 12, 40, 105, 316}) {
        for (const form& f : enumerate_reduced(D)) {
            auto cyc = form_cycle(f);
            for (int i = 0; i < 6; i++) {
                form g = translate(f, rng);
                form r = reduce(g);
                CHECK(std::count(cyc.begin(), cyc.end(), r) == 1);
                CHECK(canonical_form(g) == canonical_form(f));
            }
        }
    }
}

TEST_CASE("rho walks cycles that partition the reduced forms") {
    for (int64_t D : {8, 12, 40, 105, 316}) {
        std::set<form> all = enumerate_reduced(D);
        std::set<form> seen;
        size_t n_cycles = 0;
        for (const form& f : all) {
            if (seen.count(f))
                continue;
            n_cycles++;
            for (const form& g : form_cycle(f)) {
                CHECK(all.count(g) == 1);
                CHECK(!seen.count(g));
                seen.insert(g);
            }
        }
        CHECK(seen == all);
        CHECK(n_cycles == class_reps(D).size());
        /* frozen narrow class numbers */
        if (D == 8)
            CHECK(n_cycles == 1);
        if (D == 12)
            CHECK(n_cycles == 2);
        if (D == 40)
            CHECK(n_cycles == 2);
    }
}

TEST_CASE("cycle golden values") {
    auto c8 = form_cycle({1, 2, -1});
    CHECK(c8.size() == 2);
    CHECK(std::count(c8.begin(), c8.end(), form{-1, 2, 1}) == 1);
    auto c40 = form_cycle({3, 2, -3});
    CHECK(c40.size() == 6);
    CHECK(form_cycle({1, 6, -1}).size() == 2);
}

TEST_CASE("composition golden values") {
    /* order two class squared, disc -20 */
    CHECK(compose({2, 2, 3}, {2, 2, 3}) == form{1, 0, 5});
    /* order three group of disc -23 */
    CHECK(compose({2, 1, 3}, {2, -1, 3}) == form{1, 1, 6});
    CHECK(compose({2, 1, 3}, {2, 1, 3}) == form{2, -1, 3});
    CHECK(compose({2, -1, 3}, {2, -1, 3}) == form{2, 1, 3});
}

TEST_CASE("composition satisfies the abelian group axioms") {
    std::mt19937_64 rng(47);
    for (int64_t D : {-20, -23, -56, -84, -163, -4027, 8, 12, 40, 105, 316}) {
        std::set<form> reps = class_reps(D);
        form id = canonical_form(principal_form(D));
        REQUIRE(reps.count(id) == 1);
        std::vector<form> v(reps.begin(), reps.end());
        for (const form& f : v) {
            CHECK(canonical_form(compose(f, id)) == f);               /* identity */
            CHECK(canonical_form(compose(f, opposite(f))) == id);     /* inverse */
            for (const form& g : v) {
                form fg = canonical_form(compose(f, g));
                CHECK(reps.count(fg) == 1);                           /* closure */
                CHECK(canonical_form(compose(g, f)) == fg);           /* commutes */
            }
        }
        /* sampled associativity */
        for (int i = 0; i < 20; i++) {
            const form& f = v[rng() % v.size()];
            const form& g = v[rng() % v.size()];
            const form& h = v[rng() % v.size()];
            CHECK(canonical_form(compose(compose(f, g), h)) ==
                  canonical_form(compose(f, compose(g, h))));
        }
    }
}

TEST_CASE("composition is class independent") {
    std::mt19937_64 rng(53);
    for (int64_t D : {-23, -84, 40, 105}) {
        std::set<form> all = enumerate_reduced(D);
        std::vector<form> v(all.begin(), all.end());
        for (int i = 0; i < 25; i++) {
            const form& f = v[rng() % v.size()];
            const form& g = v[rng() % v.size()];
            form expect = canonical_form(compose(f, g));
            CHECK(canonical_form(compose(translate(f, rng), translate(g, rng))) ==
                  expect);
        }
    }
}

TEST_CASE("compose rejects mismatched or imprimitive input") {
    CHECK_THROWS_AS(compose({1, 0, 5}, {1, 1, 6}), std::invalid_argument);
    CHECK_THROWS_AS(compose({2, 2, 2}, {1, 2, -2}), std::invalid_argument);
}

TEST_CASE("principal and minus one forms") {
    CHECK(principal_form(-20) == form{1, 0, 5});
    CHECK(principal_form(-23) == form{1, 1, 6});
    CHECK(principal_form(8) == form{1, 0, -2});
    CHECK(principal_form(5) == form{1, 1, -1});
    CHECK_THROWS_AS(principal_form(7), std::invalid_argument);
    CHECK(minus_one_form(8) == form{-1, 2, 1});
    CHECK(minus_one_form(12) == form{-1, 2, 2});
    CHECK(minus_one_form(40) == form{-1, 6, 1});
    CHECK(minus_one_form(5) == form{-1, 1, 1});
    CHECK_THROWS_AS(minus_one_form(-20), std::invalid_argument);
}

TEST_CASE("minus one form class detects the unit norm") {
    /* norm -1 fields: the minus-one form is narrow principal */
    CHECK(is_narrow_principal(minus_one_form(8)));    /* 1 + sqrt(2) */
    CHECK(is_narrow_principal(minus_one_form(5)));    /* golden ratio */
    CHECK(is_narrow_principal(minus_one_form(40)));   /* 3 + sqrt(10) */
    CHECK(is_narrow_principal(minus_one_form(13)));
    /* norm +1 fields: ordinary principal only */
    CHECK(!is_narrow_principal(minus_one_form(12)));  /* 2 + sqrt(3) */
    CHECK(is_ordinary_principal(minus_one_form(12)));
    CHECK(!is_narrow_principal(minus_one_form(28)));  /* 8 + 3 sqrt(7) */
    CHECK(is_ordinary_principal(minus_one_form(28)));
    CHECK(!is_narrow_principal(minus_one_form(60)));
    CHECK(is_ordinary_principal(minus_one_form(60)));
}

TEST_CASE("ramified prime forms") {
    CHECK(ramified_prime_form(-20, 2) == form{2, 2, 3});
    CHECK(ramified_prime_form(-20, 5) == form{5, 0, 1});
    CHECK(reduce(ramified_prime_form(-20, 5)) == form{1, 0, 5});
    CHECK(ramified_prime_form(12, 2) == form{2, 2, -1});
    CHECK(ramified_prime_form(40, 2) == form{2, 0, -5});
    CHECK(ramified_prime_form(105, 3) == form{3, 3, -8});
    CHECK_THROWS_AS(ramified_prime_form(-20, 3), std::invalid_argument);
    CHECK_THROWS_AS(ramified_prime_form(-20, 4), std::invalid_argument);

    for (int64_t D : {-20, -84, -231, 12, 40, 105}) {
        for (int64_t p = 2; p < 100; p++) {
            if (!is_prime(mpz_class(p)) || D % p != 0)
                continue;
            form g = ramified_prime_form(D, p);
            CHECK(g.disc() == D);
            CHECK(is_primitive(g));
            /* the prime ideal above p squares to (p) */
            CHECK(is_narrow_principal(compose(g, g)));
        }
    }
}

TEST_CASE("principality checks") {
    CHECK(is_ordinary_principal(form{1, 0, 5}));
    CHECK(!is_ordinary_principal(form{2, 2, 3}));
    CHECK(is_narrow_principal(form{1, 2, -1}));
    /* disc 12: the ramified class above 2 merges into the principal class
       only in the ordinary group */
    CHECK(!is_narrow_principal(form{2, 2, -1}));
    CHECK(is_ordinary_principal(form{2, 2, -1}));
    /* disc 40: nontrivial even in the ordinary group */
    CHECK(!is_ordinary_principal(form{2, 0, -5}));
}

TEST_CASE("opposite inverts classes") {
    for (int64_t D : {-23, -47, -4027, 40, 105, 316}) {
        for (const form& f : enumerate_reduced(D)) {
            CHECK(is_narrow_principal(compose(f, opposite(f))));
        }
    }
}
