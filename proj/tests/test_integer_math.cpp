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

#include <random>

#include "polya/integer_math.hpp"

using namespace polya;

namespace {

/* independent oracle: plain trial division */
bool trial_prime(long n) {
    if (n < 2)
        return false;
    for (long p = 2; p * p <= n; p++)
        if (n % p == 0)
            return false;
    return true;
}

/* independent oracle: Euler's criterion a^((p-1)/2) mod p for odd prime p */
int euler_criterion(const mpz_class& a, const mpz_class& p) {
    mpz_class e = (p - 1) / 2, r;
    mpz_class base = a % p;
    if (base < 0)
        base += p;
    if (base == 0)
        return 0;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r == 1 ? 1 : -1;
}

}  // namespace

TEST_CASE("is_prime matches trial division up to 20000") {
    for (long n = 0; n <= 20000; n++)
        CHECK(is_prime(n) == trial_prime(n));
}

TEST_CASE("is_prime on selected larger inputs") {
    CHECK(is_prime(71));
    CHECK(is_prime(mpz_class("2305843009213693951")));      /* 2^61 - 1 */
    CHECK(!is_prime(mpz_class("2305843009213693953")));
    CHECK(is_prime(mpz_class("170141183460469231731687303715884105727"))); /* 2^127 - 1 */
    CHECK(!is_prime(mpz_class("170141183460469231731687303715884105725")));
    CHECK(!is_prime(mpz_class("3215031751")));               /* strong pseudoprime to 2,3,5,7 */
    CHECK(!is_prime(mpz_class("4294967297")));               /* 641 * 6700417 */
}

TEST_CASE("factor frozen values") {
    factorization f = factor(7455);
    REQUIRE(f.factors.size() == 4);
    CHECK(f.sign == 1);
    CHECK(f.factors[0] == prime_power{3, 1});
    CHECK(f.factors[1] == prime_power{5, 1});
    CHECK(f.factors[2] == prime_power{7, 1});
    CHECK(f.factors[3] == prime_power{71, 1});

    factorization g = factor(-360);
    CHECK(g.sign == -1);
    REQUIRE(g.factors.size() == 3);
    CHECK(g.factors[0] == prime_power{2, 3});
    CHECK(g.factors[1] == prime_power{3, 2});
    CHECK(g.factors[2] == prime_power{5, 1});

    CHECK(factor(1).factors.empty());
    CHECK(factor(-1).sign == -1);
    CHECK_THROWS_AS(factor(0), std::invalid_argument);
}

TEST_CASE("factor reconstructs its input") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; i++) {
        long n = (long)(rng() % 4000000000l) + 2;
        factorization f = factor(n);
        CHECK(f.value() == n);
        for (const auto& pp : f.factors)
            CHECK(is_prime(pp.p));
        for (size_t j = 1; j < f.factors.size(); j++)
            CHECK(f.factors[j - 1].p < f.factors[j].p);
    }
    /* rho-sized inputs */
    mpz_class big = mpz_class("1000003") * mpz_class("10000019");
    factorization f = factor(big);
    CHECK(f.value() == big);
    CHECK(f.factors.size() == 2);
}

TEST_CASE("factor raises a resource error under a tiny work bound") {
    factor_limits tiny;
    tiny.trial_division_bound = 10;
    tiny.rho_iteration_cap = 4;
    /* product of two 12-digit primes */
    mpz_class hard = mpz_class("100000000003") * mpz_class("100000000019");
    CHECK_THROWS_AS(factor(hard, tiny), resource_limit_error);
}

TEST_CASE("jacobi golden value and error cases") {
    CHECK(jacobi(17, 41) == -1);
    CHECK(jacobi(17, 41) == euler_criterion(17, 41));
    CHECK(jacobi(5, 5) == 0);
    CHECK(jacobi(0, 9) == 0);
    CHECK(jacobi(1, 1) == 1);
    CHECK_THROWS_AS(jacobi(3, 10), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, -7), std::invalid_argument);
}

TEST_CASE("jacobi agrees with Euler's criterion on odd primes") {
    std::mt19937_64 rng(11);
    std::vector<long> primes;
    for (long n = 3; n < 10000; n += 2)
        if (trial_prime(n))
            primes.push_back(n);
    for (int i = 0; i < 500; i++) {
        long p = primes[rng() % primes.size()];
        long a = (long)(rng() % 20011) - 10000;
        CHECK(jacobi(a, p) == euler_criterion(a, p));
    }
}

TEST_CASE("jacobi is multiplicative in both arguments") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; i++) {
        long a = (long)(rng() % 999) - 499;
        long b = (long)(rng() % 999) - 499;
        long n = 2 * (long)(rng() % 500) + 3;
        long m = 2 * (long)(rng() % 500) + 3;
        CHECK(jacobi(mpz_class(a) * b, n) == jacobi(a, n) * jacobi(b, n));
        CHECK(jacobi(a, mpz_class(n) * m) == jacobi(a, n) * jacobi(a, m));
    }
}

TEST_CASE("crt golden value, rechecked by brute force") {
    std::vector<congruence> sys{{2, 9}, {4, 25}, {6, 49}};
    /* oracle first: scan the full residue ring */
    long expected = -1;
    for (long x = 0; x < 9 * 25 * 49; x++)
        if (x % 9 == 2 && x % 25 == 4 && x % 49 == 6) {
            expected = x;
            break;
        }
    REQUIRE(expected == 7454);
    congruence r = crt(sys);
    CHECK(r.residue == 7454);
    CHECK(r.modulus == 11025);
}

TEST_CASE("crt is order independent and handles single congruences") {
    std::vector<congruence> sys{{6, 49}, {2, 9}, {4, 25}};
    congruence r = crt(sys);
    CHECK(r.residue == 7454);
    congruence one = crt({congruence(12, 7)});
    CHECK(one.residue == 5);
    CHECK(one.modulus == 7);
}

TEST_CASE("crt rejects shared moduli factors naming the pair") {
    std::vector<congruence> sys{{1, 4}, {2, 9}, {3, 6}};
    try {
        crt(sys);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        CHECK(msg.find("0") != std::string::npos);
        CHECK(msg.find("2") != std::string::npos);
    }
}

TEST_CASE("congruence normalization") {
    congruence c(-1, 5);
    CHECK(c.residue == 4);
    CHECK_THROWS_AS(congruence(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(congruence(0, -3), std::invalid_argument);
}

TEST_CASE("squarefree_part keeps sign and strips squares") {
    CHECK(squarefree_part(-45) == -5);
    CHECK(squarefree_part(360) == 10);
    CHECK(squarefree_part(7455) == 7455);
    CHECK(squarefree_part(1) == 1);
    CHECK(squarefree_part(-1) == -1);
    CHECK(squarefree_part(4) == 1);
    CHECK(squarefree_part(8) == 2);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; i++) {
        long n = (long)(rng() % 100000) + 2;
        mpz_class s = squarefree_part(n);
        /* n / s must be a perfect square and s squarefree */
        mpz_class q = n / s;
        CHECK(mpz_perfect_square_p(q.get_mpz_t()));
        factorization f = factor(s);
        for (const auto& pp : f.factors)
            CHECK(pp.e == 1);
    }
}

TEST_CASE("omega") {
    CHECK(omega(7455) == 4);
    CHECK(omega(-360) == 3);
    CHECK(omega(1) == 0);
    CHECK(omega(25) == 1);
}

TEST_CASE("isqrt") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    CHECK(isqrt_ll(99999999999l) == 316227);
    CHECK_THROWS_AS(isqrt(-1), std::invalid_argument);
}
