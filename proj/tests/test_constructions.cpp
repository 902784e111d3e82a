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
#include <set>
#include <string>
#include <vector>

#include "polya/class_group.hpp"
#include "polya/constructions.hpp"
#include "polya/polya_quad.hpp"
#include "polya/quad_field.hpp"

using namespace polya;

namespace {

bool some_failure_mentions(const verification_report& rep, const std::string& what) {
    for (const auto& f : rep.failures)
        if (f.find(what) != std::string::npos)
            return true;
    return false;
}

std::set<mpz_class> field_set(const construction_certificate& cert) {
    std::set<mpz_class> out;
    for (const auto& chk : cert.checks)
        out.insert(chk.reduced_d);
    return out;
}

mpz_class mod(const mpz_class& a, long m) {
    return mpz_class(a % m);
}

}  // namespace

TEST_CASE("consecutive construction golden run k=1") {
    construction_certificate cert = construct_consecutive(1, 1.5);

    CHECK(cert.k == 1);
    CHECK(cert.n == 1);
    CHECK(cert.variant == construction_variant::class_number);
    REQUIRE(cert.prime_grid.size() == 1);
    CHECK(cert.prime_grid[0] == std::vector<mpz_class>{3, 5, 7});
    CHECK(cert.modulus == 9 * 25 * 49);
    CHECK(cert.d == 7454);

    REQUIRE(cert.checks.size() == 1);
    const certificate_check& chk = cert.checks[0];
    CHECK(chk.i == 1);
    CHECK(chk.field_value == 7455);
    CHECK(chk.reduced_d == 7455); /* 3 * 5 * 7 * 71, already squarefree */
    CHECK(mod(chk.field_value, 71) == 0);
    CHECK(chk.exact_divisibility);
    CHECK(chk.disjoint);
    CHECK(chk.odd_prime_count == 4);
    CHECK(chk.guaranteed_divisor == 2);

    /* structural only */
    verification_report structural = verify_certificate(cert, 0);
    CHECK(structural.ok());
    CHECK(structural.oracle_checked == 0);
    CHECK(structural.oracle_skipped == 1);
    CHECK(structural.failures.empty());

    /* exact class-number confirmation: disc(7455) = 29820 within budget */
    verification_report full = verify_certificate(cert, 100000);
    CHECK(full.ok());
    CHECK(full.oracle_checked == 1);
    CHECK(full.oracle_skipped == 0);
    CHECK(mod(class_number(field_from_d(7455)), 2) == 0);
}

TEST_CASE("consecutive construction k=2 uses disjoint grids") {
    construction_certificate cert = construct_consecutive(2, 1.5);

    REQUIRE(cert.prime_grid.size() == 2);
    CHECK(cert.prime_grid[0] == std::vector<mpz_class>{3, 5, 7});
    CHECK(cert.prime_grid[1] == std::vector<mpz_class>{11, 13, 17});

    /* d mod p^2 = p - i pins the congruence system independently */
    CHECK(mod(cert.d, 9) == 2);
    CHECK(mod(cert.d, 25) == 4);
    CHECK(mod(cert.d, 49) == 6);
    CHECK(mod(cert.d, 121) == 9);
    CHECK(mod(cert.d, 169) == 11);
    CHECK(mod(cert.d, 289) == 15);

    REQUIRE(cert.checks.size() == 2);
    for (const auto& chk : cert.checks) {
        CHECK(chk.exact_divisibility);
        CHECK(chk.disjoint);
        CHECK(chk.odd_prime_count >= 3);
    }
    CHECK(cert.checks[0].reduced_d != cert.checks[1].reduced_d);
    CHECK(mod(cert.checks[0].field_value, 11) != 0);
    CHECK(mod(cert.checks[1].field_value, 3) != 0);

    CHECK(verify_certificate(cert, 0).ok());
}

TEST_CASE("consecutive construction polya variant forces unit norm +1") {
    construction_certificate cert =
        construct_consecutive(1, 1.5, construction_variant::polya);

    REQUIRE(cert.prime_grid.size() == 1);
    CHECK(cert.prime_grid[0] == std::vector<mpz_class>{3, 7, 11});
    CHECK(cert.modulus == 9 * 49 * 121);

    const mpz_class& sf = cert.checks[0].reduced_d;
    CHECK(unit_norm(sf) == 1);
    CHECK(polya_order_formula(field_from_d(sf)) >= 2);

    verification_report full = verify_certificate(cert, 250000);
    CHECK(full.ok());
    CHECK(full.oracle_checked == 1);
}

TEST_CASE("verification rejects tampered certificates with details") {
    construction_certificate cert = construct_consecutive(1, 1.5);

    SUBCASE("perturbed d breaks exact divisibility") {
        cert.d += 1;
        verification_report rep = verify_certificate(cert, 0);
        CHECK_FALSE(rep.ok());
        CHECK_FALSE(rep.structural_ok);
        CHECK(some_failure_mentions(rep, "must divide it exactly once"));
    }
    SUBCASE("perturbed modulus is caught") {
        cert.modulus += 2;
        verification_report rep = verify_certificate(cert, 0);
        CHECK_FALSE(rep.structural_ok);
        CHECK(some_failure_mentions(rep, "product of the squared grid primes"));
    }
    SUBCASE("perturbed check record is caught") {
        cert.checks[0].odd_prime_count = 99;
        verification_report rep = verify_certificate(cert, 0);
        CHECK_FALSE(rep.structural_ok);
        CHECK(some_failure_mentions(rep, "disagrees with recomputation"));
    }
    SUBCASE("composite grid entry is caught") {
        cert.prime_grid[0][1] = 4;
        verification_report rep = verify_certificate(cert, 0);
        CHECK_FALSE(rep.structural_ok);
        CHECK(some_failure_mentions(rep, "not an odd prime"));
    }
    SUBCASE("wrong variant invalidates a 1 mod 4 grid prime") {
        cert.variant = construction_variant::polya;
        verification_report rep = verify_certificate(cert, 0);
        CHECK_FALSE(rep.structural_ok);
        CHECK(some_failure_mentions(rep, "not 3 mod 4"));
    }
}

TEST_CASE("consecutive construction is deterministic") {
    CHECK(construct_consecutive(2, 1.5) == construct_consecutive(2, 1.5));
    CHECK(construct_consecutive(1, 3.0, construction_variant::polya) ==
          construct_consecutive(1, 3.0, construction_variant::polya));
}

TEST_CASE("consecutive construction validates parameters") {
    CHECK_THROWS_AS(construct_consecutive(0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(construct_consecutive(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(construct_consecutive(1, -2.0), std::invalid_argument);
    /* 2^e > 4e12 needs e = 42, past the desk-scale cap */
    CHECK_THROWS_AS(construct_consecutive(1, 4.0e12), resource_limit_error);
    /* 40 grids of 4 primes push the CRT modulus past 512 bits */
    CHECK_THROWS_AS(construct_consecutive(40, 3.0), resource_limit_error);
}

TEST_CASE("iterated tuples have pairwise disjoint field sets") {
    std::vector<construction_certificate> rounds = iterate_tuples(1, 1.5, 2);
    REQUIRE(rounds.size() == 2);

    CHECK(rounds[0] == construct_consecutive(1, 1.5));
    /* second round must clear the certified bound 2^1, so n grows */
    CHECK(rounds[1].n > rounds[0].n);

    std::set<mpz_class> used(rounds[0].prime_grid[0].begin(),
                             rounds[0].prime_grid[0].end());
    for (const auto& p : rounds[1].prime_grid[0])
        CHECK(used.count(p) == 0);
    /* 71 divides the first field value 7455, so it is retired too */
    CHECK(std::find(rounds[1].prime_grid[0].begin(), rounds[1].prime_grid[0].end(),
                    71) == rounds[1].prime_grid[0].end());

    std::set<mpz_class> first = field_set(rounds[0]);
    for (const auto& sf : field_set(rounds[1]))
        CHECK(first.count(sf) == 0);

    for (const auto& cert : rounds)
        CHECK(verify_certificate(cert, 0).ok());
}

TEST_CASE("iterated tuples validate count") {
    CHECK_THROWS_AS(iterate_tuples(1, 1.5, 0), std::invalid_argument);
    std::vector<construction_certificate> single = iterate_tuples(2, 1.5, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == construct_consecutive(2, 1.5));
}

TEST_CASE("multiplicative construction golden run k=2") {
    multiplicative_certificate cert = construct_multiplicative(2, 1.5);

    CHECK(cert.t == 1);
    CHECK(cert.primes == std::vector<mpz_class>{3, 5, 7});
    CHECK(cert.d == 105);
    CHECK(cert.fields_distinct);

    REQUIRE(cert.checks.size() == 2);
    CHECK(cert.checks[0].field_value == 105);
    CHECK(cert.checks[0].reduced_d == 105);
    CHECK(cert.checks[1].field_value == 210);
    CHECK(cert.checks[1].reduced_d == 210);
    for (const auto& chk : cert.checks) {
        CHECK(chk.exact_divisibility);
        CHECK(chk.disjoint);
        CHECK(chk.odd_prime_count >= 3);
        CHECK(chk.guaranteed_divisor == 2);
    }

    /* disc(105) = 105, disc(210) = 840: both within a small oracle budget */
    verification_report full = verify_certificate(cert, 1000);
    CHECK(full.ok());
    CHECK(full.oracle_checked == 2);
    CHECK(mod(class_number(field_from_d(105)), 2) == 0);
    CHECK(mod(class_number(field_from_d(210)), 2) == 0);
}

TEST_CASE("multiplicative construction clamps t to 1") {
    multiplicative_certificate cert = construct_multiplicative(1, 0.5);
    CHECK(cert.t == 1);
    CHECK(cert.primes == std::vector<mpz_class>{3, 5, 7});
    CHECK(cert.d == 105);
    CHECK(verify_certificate(cert, 0).ok());
}

TEST_CASE("multiplicative construction records the j=4 field collision") {
    multiplicative_certificate cert = construct_multiplicative(4, 1.5);

    /* sqrt(4d) and sqrt(d) generate the same field */
    CHECK_FALSE(cert.fields_distinct);
    CHECK(cert.checks[3].reduced_d == cert.checks[0].reduced_d);
    CHECK_FALSE(cert.checks[3].disjoint);
    /* the collision is honest, so the certificate still verifies */
    CHECK(verify_certificate(cert, 0).ok());

    /* three fields stay distinct */
    CHECK(construct_multiplicative(3, 1.5).fields_distinct);
}

TEST_CASE("multiplicative polya variant certifies Polya group orders") {
    multiplicative_certificate cert =
        construct_multiplicative(2, 1.5, construction_variant::polya);

    CHECK(cert.primes == std::vector<mpz_class>{3, 7, 11});
    CHECK(cert.d == 231);
    CHECK(cert.checks[1].reduced_d == 462);

    verification_report full = verify_certificate(cert, 2000);
    CHECK(full.ok());
    CHECK(full.oracle_checked == 2);
    CHECK(unit_norm(231) == 1);
    CHECK(unit_norm(462) == 1);
}

TEST_CASE("multiplicative verification rejects tampering") {
    multiplicative_certificate cert = construct_multiplicative(2, 1.5);

    SUBCASE("wrong product") {
        cert.d = 106;
        verification_report rep = verify_certificate(cert, 0);
        CHECK_FALSE(rep.structural_ok);
        CHECK(some_failure_mentions(rep, "product of the listed primes"));
    }
    SUBCASE("wrong distinctness flag") {
        cert.fields_distinct = false;
        verification_report rep = verify_certificate(cert, 0);
        CHECK_FALSE(rep.structural_ok);
        CHECK(some_failure_mentions(rep, "fields_distinct"));
    }
}

TEST_CASE("class-number gap scan finds an equal pair") {
    scan_result res = scan_class_gap(2, 50);
    REQUIRE(res.min_gap.has_value());
    CHECK(*res.min_gap == 0);
    REQUIRE_FALSE(res.records.empty());

    /* h(2) = h(3) = 1 */
    CHECK(res.records.front().d == 2);
    for (const auto& rec : res.records) {
        CHECK(rec.gap == 0);
        CHECK(rec.left_value == rec.right_value);
        CHECK(rec.left_d == squarefree_part(rec.d));
        CHECK(rec.right_d == squarefree_part(rec.d + 1));
        /* oracle agreement on the recorded values */
        CHECK(rec.left_value == class_number(field_from_d(rec.left_d)));
    }
    /* pairs touching a square are skipped: 3+1 = 4 and 8 reduces to 2, 9 to 1 */
    for (const auto& rec : res.records) {
        CHECK(rec.d != 3);
        CHECK(rec.d != 8);
    }
    CHECK(std::is_sorted(res.records.begin(), res.records.end(),
                         [](const scan_record& a, const scan_record& b) {
                             return a.d < b.d;
                         }));
}

TEST_CASE("gap scans handle singleton and empty ranges") {
    scan_result one = scan_class_gap(5, 5);
    REQUIRE(one.records.size() == 1);
    CHECK(one.records[0].d == 5);
    CHECK(one.records[0].left_d == 5);
    CHECK(one.records[0].right_d == 6);

    scan_result none = scan_class_gap(10, 9);
    CHECK_FALSE(none.min_gap.has_value());
    CHECK(none.records.empty());

    CHECK_THROWS_AS(scan_class_gap(1, 10), std::invalid_argument);
    CHECK_THROWS_AS(scan_polya_gap(0, 10), std::invalid_argument);
}

TEST_CASE("gap scans are independent of the job count") {
    scan_result serial = scan_class_gap(2, 200, default_oracle_limits(), 1);
    scan_result parallel = scan_class_gap(2, 200, default_oracle_limits(), 8);
    REQUIRE(serial.min_gap.has_value());
    REQUIRE(parallel.min_gap.has_value());
    CHECK(*serial.min_gap == *parallel.min_gap);
    CHECK(serial.records == parallel.records);

    scan_result ps = scan_polya_gap(2, 300, {}, 1);
    scan_result pp = scan_polya_gap(2, 300, {}, 6);
    CHECK(ps.records == pp.records);
}

TEST_CASE("polya gap scan confirms the classic candidate pairs") {
    scan_result res = scan_polya_gap(20, 40);
    REQUIRE(res.min_gap.has_value());
    CHECK(*res.min_gap == 0);

    std::set<int64_t> attained;
    for (const auto& rec : res.records)
        attained.insert(rec.d);
    CHECK(attained.count(21) == 1);
    CHECK(attained.count(33) == 1);
    /* (34,35) and (38,39) match on squarefree-part prime counts but not on
       Polya orders: 35 and 39 are 3 mod 4, so 2 ramifies as a third prime
       and the order doubles */
    CHECK(attained.count(34) == 0);
    CHECK(attained.count(38) == 0);
    CHECK(polya_order_formula(field_from_d(34)) == 1);
    CHECK(polya_order_formula(field_from_d(35)) == 2);
    CHECK(polya_order_formula(field_from_d(38)) == 1);
    CHECK(polya_order_formula(field_from_d(39)) == 2);

    for (const auto& rec : res.records) {
        if (rec.d != 21)
            continue;
        /* both fields are Polya: ramified pair with unit norm +1 */
        CHECK(rec.left_value == 1);
        CHECK(rec.right_value == 1);
    }
}

TEST_CASE("odd-exponent pair scan matches the hand check") {
    std::vector<std::pair<int64_t, int64_t>> pairs = scan_odd_exponent_pairs(40, 2);
    std::vector<std::pair<int64_t, int64_t>> expected = {
        {14, 15}, {21, 22}, {33, 34}, {34, 35}, {38, 39}, {39, 40}};
    CHECK(pairs == expected);

    /* squarefree parts, not raw values: 4 reduces to 1 with no prime divisor */
    std::vector<std::pair<int64_t, int64_t>> ones = scan_odd_exponent_pairs(5, 1);
    CHECK(ones == std::vector<std::pair<int64_t, int64_t>>{{2, 3}});

    CHECK(scan_odd_exponent_pairs(2, 1) ==
          std::vector<std::pair<int64_t, int64_t>>{{2, 3}});
    CHECK(scan_odd_exponent_pairs(2, 2).empty());
    CHECK_THROWS_AS(scan_odd_exponent_pairs(1, 2), std::invalid_argument);
}

TEST_CASE("fermat pair reports track primality") {
    fermat_report f0 = fermat_pair(0);
    CHECK(f0.power == 2);
    CHECK(f0.fermat == 3);
    CHECK(f0.fermat_prime);
    REQUIRE(f0.pair.has_value());
    CHECK(f0.pair->first == 2);
    CHECK(f0.pair->second == 3);
    CHECK(f0.sf_left == 2);
    CHECK(f0.omega_left == 1);
    CHECK(f0.sf_right == 3);
    CHECK(f0.omega_right == 1);

    fermat_report f2 = fermat_pair(2);
    CHECK(f2.power == 16);
    CHECK(f2.fermat == 17);
    REQUIRE(f2.pair.has_value());
    /* even power of two: the squarefree part degenerates to 1 */
    CHECK(f2.sf_left == 1);
    CHECK(f2.omega_left == 0);
    CHECK(f2.omega_right == 1);

    fermat_report f5 = fermat_pair(5);
    CHECK_FALSE(f5.fermat_prime);
    CHECK_FALSE(f5.pair.has_value());
    CHECK(f5.fermat == mpz_class("4294967297"));
    CHECK(f5.sf_right == f5.fermat); /* 641 * 6700417, squarefree */
    CHECK(f5.omega_right == 2);

    CHECK_THROWS_AS(fermat_pair(6), resource_limit_error);
    fermat_report f6 = fermat_pair(6, 6);
    CHECK_FALSE(f6.fermat_prime);
    CHECK(f6.omega_right == 2); /* 274177 * 67280421310721 */
}

TEST_CASE("variant names are stable") {
    CHECK(std::string(variant_name(construction_variant::class_number)) ==
          "class_number");
    CHECK(std::string(variant_name(construction_variant::polya)) == "polya");
}
