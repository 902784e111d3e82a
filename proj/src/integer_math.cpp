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

#include "polya/integer_math.hpp"

#include <algorithm>
#include <cmath>

namespace polya {

mpz_class factorization::value() const {
    mpz_class v = sign;
    for (const auto& f : factors) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), f.p.get_mpz_t(), f.e);
        v *= pe;
    }
    return v;
}

namespace {

constexpr unsigned long small_witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

/* one strong pseudoprime round; n odd, n - 1 = d * 2^s */
bool mr_round(const mpz_class& n, const mpz_class& base, const mpz_class& d, unsigned long s) {
    mpz_class a = base % n;
    if (a == 0)
        return true;
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned long i = 1; i < s; i++) {
        x = x * x % n;
        if (x == n - 1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

}  // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2)
        return false;
    for (unsigned long p : small_witnesses) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    if (n < 41 * 41)
        return true;

    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    for (unsigned long a : small_witnesses)
        if (!mr_round(n, mpz_class(a), d, s))
            return false;

    /* Sorenson-Webster: the twelve bases above are a deterministic test
       below this bound */
    static const mpz_class deterministic_bound("3317044064679887385961981");
    if (n < deterministic_bound)
        return true;

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(n);  /* reproducible verdicts for identical inputs */
    for (int round = 0; round < 25; round++) {
        mpz_class a = rng.get_z_range(n - 3) + 2;
        if (!mr_round(n, a, d, s))
            return false;
    }
    return true;
}

namespace {

/* Brent's variant of Pollard rho.  Returns a nontrivial factor or n itself
   on a bad parameter choice (caller retries with the next c).  budget is
   decremented per squaring. */
mpz_class rho_brent(const mpz_class& n, unsigned long c, unsigned long& budget) {
    const unsigned long block = 128;
    mpz_class y = 2, q = 1, g = 1, x, ys;
    unsigned long r = 1;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; i++)
            y = (y * y + c) % n;
        for (unsigned long k = 0; k < r && g == 1; ) {
            ys = y;
            unsigned long chunk = std::min(block, r - k);
            if (budget < chunk)
                throw resource_limit_error("factor: work bound exceeded at "
                                           + n.get_str() + " (raise rho_iteration_cap)");
            budget -= chunk;
            for (unsigned long i = 0; i < chunk; i++) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += chunk;
        }
        r *= 2;
    }
    if (g == n) {
        /* the whole block collapsed; replay one step at a time */
        g = 1;
        while (g == 1) {
            ys = (ys * ys + c) % n;
            mpz_class diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
    }
    return g;
}

void split(const mpz_class& n, std::vector<mpz_class>& primes, unsigned long& budget) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    mpz_class f = n;
    for (unsigned long c = 1; f == n; c++)
        f = rho_brent(n, c, budget);
    split(f, primes, budget);
    split(n / f, primes, budget);
}

}  // namespace

factorization factor(const mpz_class& n, const factor_limits& limits) {
    if (n == 0)
        throw std::invalid_argument("factor: 0 has no factorization");
    factorization out;
    mpz_class m = abs(n);
    out.sign = sgn(n);

    auto push = [&out](const mpz_class& p, unsigned e) {
        out.factors.push_back({p, e});
    };

    unsigned e2 = 0;
    while (mpz_even_p(m.get_mpz_t())) {
        m >>= 1;
        e2++;
    }
    if (e2)
        push(2, e2);

    for (unsigned long p = 3; p <= limits.trial_division_bound; p += 2) {
        if (mpz_class(p) * p > m)
            break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                e++;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
            push(p, e);
        }
    }

    if (m > 1) {
        if (mpz_class(limits.trial_division_bound) * limits.trial_division_bound > m
            || is_prime(m)) {
            push(m, 1);  /* survived trial division below sqrt, or proven prime */
        } else {
            std::vector<mpz_class> primes;
            unsigned long budget = limits.rho_iteration_cap;
            split(m, primes, budget);
            std::sort(primes.begin(), primes.end());
            for (size_t i = 0; i < primes.size(); ) {
                size_t j = i;
                while (j < primes.size() && primes[j] == primes[i])
                    j++;
                push(primes[i], unsigned(j - i));
                i = j;
            }
        }
    }
    return out;
}

int jacobi(const mpz_class& a_in, const mpz_class& n_in) {
    if (n_in <= 0 || mpz_even_p(n_in.get_mpz_t()))
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    mpz_class a = a_in % n_in, n = n_in;
    if (a < 0)
        a += n;
    int result = 1;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a >>= 1;
            unsigned long n8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (n8 == 3 || n8 == 5)
                result = -result;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

mpz_class squarefree_part(const mpz_class& n, const factor_limits& limits) {
    if (n == 0)
        throw std::invalid_argument("squarefree_part: undefined for 0");
    factorization f = factor(n, limits);
    mpz_class s = f.sign;
    for (const auto& pp : f.factors)
        if (pp.e % 2)
            s *= pp.p;
    return s;
}

unsigned omega(const mpz_class& n, const factor_limits& limits) {
    if (n == 0)
        throw std::invalid_argument("omega: undefined for 0");
    return unsigned(factor(n, limits).factors.size());
}

congruence::congruence(mpz_class r, mpz_class m) : residue(std::move(r)), modulus(std::move(m)) {
    if (modulus < 2)
        throw std::invalid_argument("congruence: modulus must be at least 2");
    mpz_fdiv_r(residue.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
}

congruence crt(const std::vector<congruence>& system) {
    if (system.empty())
        throw std::invalid_argument("crt: empty system");
    for (size_t i = 0; i < system.size(); i++)
        for (size_t j = i + 1; j < system.size(); j++) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), system[i].modulus.get_mpz_t(), system[j].modulus.get_mpz_t());
            if (g != 1)
                throw std::invalid_argument(
                    "crt: moduli at positions " + std::to_string(i) + " and "
                    + std::to_string(j) + " share the factor " + g.get_str());
        }
    mpz_class r = system[0].residue, m = system[0].modulus;
    for (size_t i = 1; i < system.size(); i++) {
        const mpz_class& mi = system[i].modulus;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), mi.get_mpz_t());
        mpz_class t = (system[i].residue - r) * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mi.get_mpz_t());
        r += m * t;
        m *= mi;
    }
    return congruence(r, m);
}

mpz_class isqrt(const mpz_class& n) {
    if (n < 0)
        throw std::invalid_argument("isqrt: negative argument");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

long long isqrt_ll(long long n) {
    if (n < 0)
        throw std::invalid_argument("isqrt_ll: negative argument");
    long long r = (long long)std::sqrt((double)n);
    while (r > 0 && r * r > n)
        r--;
    while ((r + 1) * (r + 1) <= n)
        r++;
    return r;
}

}  // namespace polya
