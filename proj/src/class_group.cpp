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

#include "polya/class_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <stdexcept>

namespace polya {

namespace {

using i128 = __int128;

std::shared_mutex unit_cache_mutex;
std::map<mpz_class, int> unit_cache;

std::shared_mutex norm_plus_cache_mutex;
std::map<int64_t, bool> norm_plus_cache; /* disc -> minus-one class nontrivial */

std::shared_mutex group_cache_mutex;
std::map<std::pair<int64_t, bool>, class_group_structure> group_cache;

void require_nonsquare_d(const mpz_class& d) {
    if (d <= 1)
        throw std::invalid_argument("fundamental unit: d must exceed 1");
    if (mpz_perfect_square_p(d.get_mpz_t()))
        throw std::invalid_argument("fundamental unit: d is a perfect square");
}

/* one continued fraction step for (P + sqrt(d))/Q; r = isqrt(d) */
template <typename INT>
void cf_step(const INT& d, const INT& r, INT& P, INT& Q, INT& a) {
    a = (P + r) / Q;
    P = a * Q - P;
    Q = (d - P * P) / Q;
}

/* walks the period and returns its length; mpz everywhere */
unsigned cf_period(const mpz_class& d, mpz_class* x_out, mpz_class* y_out,
                   int* sigma_out) {
    mpz_class r = isqrt(d);
    bool half = mpz_fdiv_ui(d.get_mpz_t(), 4) == 1;
    mpz_class P0 = 0, Q0 = 1;
    if (half) {
        P0 = mpz_odd_p(r.get_mpz_t()) ? r : r - 1;
        Q0 = 2;
    }
    mpz_class P = P0, Q = Q0, a;
    /* convergents enter step k holding index k-1; seeds are the usual
       p_{-1} = 1, p_{-2} = 0 and q_{-1} = 0, q_{-2} = 1 */
    mpz_class p_prev = 0, p_cur = 1, q_prev = 1, q_cur = 0;
    bool track = x_out != nullptr;
    unsigned period = 0;
    while (true) {
        cf_step(d, r, P, Q, a);
        period++;
        if (track) {
            mpz_class np = a * p_cur + p_prev;
            mpz_class nq = a * q_cur + q_prev;
            p_prev = p_cur;
            p_cur = np;
            q_prev = q_cur;
            q_cur = nq;
        }
        bool closed = half ? (P == P0 && Q == Q0) : (Q == 1);
        if (closed)
            break;
        if (period > 100'000'000)
            throw resource_limit_error("fundamental unit: period walk exceeded bound");
    }
    if (track) {
        /* epsilon = p_{l-1} + q_{l-1} sqrt(d), or for the half case
           q_{l-1} (P0 + sqrt(d))/2 + q_{l-2} = (x + y sqrt(d))/2 */
        *x_out = half ? mpz_class(q_cur * P0 + 2 * q_prev) : p_cur;
        *y_out = q_cur;
    }
    if (sigma_out)
        *sigma_out = half ? 2 : 1;
    return period;
}

/* int64 fast path for the period parity only */
int unit_norm_small(int64_t d) {
    int64_t r = isqrt_ll(d);
    bool half = ((d % 4 + 4) % 4) == 1;
    int64_t P0 = 0, Q0 = 1;
    if (half) {
        P0 = (r & 1) ? r : r - 1;
        Q0 = 2;
    }
    int64_t P = P0, Q = Q0, a;
    unsigned period = 0;
    while (true) {
        cf_step(d, r, P, Q, a);
        period++;
        bool closed = half ? (P == P0 && Q == Q0) : (Q == 1);
        if (closed)
            break;
        if (period > 100'000'000)
            throw resource_limit_error("unit norm: period walk exceeded bound");
    }
    return (period & 1) ? -1 : 1;
}

int64_t disc_to_i64(const quad_field& K, const oracle_limits& limits) {
    if (!K.disc.fits_slong_p())
        throw resource_limit_error("class group oracle: discriminant exceeds bound");
    int64_t D = (int64_t)K.disc.get_si();
    int64_t bound = std::min<int64_t>(limits.max_abs_disc, max_form_disc);
    if (D > bound || D < -bound)
        throw resource_limit_error("class group oracle: discriminant exceeds bound");
    return D;
}

std::vector<form> reduced_definite_forms(int64_t D) {
    std::vector<form> out;
    int64_t b_start = ((D % 2) + 2) % 2;
    for (int64_t b = b_start; 3 * b * b <= -D; b += 2) {
        int64_t N = (b * b - D) / 4;
        for (int64_t a = std::max<int64_t>(b, 1); a * a <= N; a++) {
            if (N % a != 0)
                continue;
            int64_t c = N / a;
            form f{a, b, c};
            if (!is_primitive(f))
                continue;
            out.push_back(f);
            if (b > 0 && b < a && a < c)
                out.push_back({a, -b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<form> reduced_indefinite_forms(int64_t D) {
    std::vector<form> out;
    int64_t s = isqrt_ll(D);
    int64_t b_start = ((D % 2) + 2) % 2 == 1 ? 1 : 2;
    for (int64_t b = b_start; b <= s; b += 2) {
        int64_t m = (D - b * b) / 4;
        for (int64_t u = 1; u * u <= m; u++) {
            if (m % u != 0)
                continue;
            int64_t divs[2] = {u, m / u};
            int ndiv = divs[0] == divs[1] ? 1 : 2;
            for (int i = 0; i < ndiv; i++) {
                int64_t aa = divs[i];
                if (2 * aa - b > s || 2 * aa + b < s + 1)
                    continue;
                form f{aa, b, -(m / aa)};
                if (!is_primitive(f))
                    continue;
                out.push_back(f);
                out.push_back({-aa, b, m / aa});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/* lex-least form of each rho-cycle */
std::vector<form> narrow_reps_indefinite(int64_t D) {
    std::vector<form> all = reduced_indefinite_forms(D);
    std::set<form> pool(all.begin(), all.end());
    std::vector<form> reps;
    while (!pool.empty()) {
        form f0 = *pool.begin();
        form best = f0;
        form g = f0;
        do {
            pool.erase(g);
            if (g < best)
                best = g;
            g = rho(g);
        } while (!(g == f0));
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

/* is the minus-one class nontrivial in the narrow group (norm +1 case)? */
bool minus_one_nontrivial(int64_t D) {
    {
        std::shared_lock lock(norm_plus_cache_mutex);
        auto it = norm_plus_cache.find(D);
        if (it != norm_plus_cache.end())
            return it->second;
    }
    bool nontrivial = !is_narrow_principal(minus_one_form(D));
    std::unique_lock lock(norm_plus_cache_mutex);
    norm_plus_cache.emplace(D, nontrivial);
    return nontrivial;
}

/* canonical representative map and multiplication for one class group */
struct group_context {
    int64_t disc;
    bool use_j = false;
    form j_rep;

    form rep(const form& f) const {
        form r = canonical_form(f);
        if (!use_j)
            return r;
        form r2 = canonical_form(compose(f, j_rep));
        return r2 < r ? r2 : r;
    }
    form mul(const form& f, const form& g) const { return rep(compose(f, g)); }
    form identity() const { return rep(principal_form(disc)); }
};

group_context make_context(int64_t D, bool narrow) {
    group_context ctx;
    ctx.disc = D;
    if (D > 0 && !narrow && minus_one_nontrivial(D)) {
        ctx.use_j = true;
        ctx.j_rep = canonical_form(minus_one_form(D));
    }
    return ctx;
}

form pow_rep(const group_context& ctx, form base, uint64_t e) {
    form acc = ctx.identity();
    while (e > 0) {
        if (e & 1)
            acc = ctx.mul(acc, base);
        e >>= 1;
        if (e)
            base = ctx.mul(base, base);
    }
    return acc;
}

/* order of x given that it divides bound (with bound's prime list) */
uint64_t element_order(const group_context& ctx, const form& x, uint64_t bound,
                       const std::vector<uint64_t>& primes, const form& id,
                       const std::set<form>* modulo) {
    auto in_h = [&](const form& f) {
        return modulo ? modulo->count(f) != 0 : f == id;
    };
    uint64_t ord = bound;
    for (uint64_t p : primes) {
        while (ord % p == 0 && in_h(pow_rep(ctx, x, ord / p)))
            ord /= p;
    }
    return ord;
}

/* subgroup closure of H with one extra generator */
void extend_subgroup(const group_context& ctx, std::set<form>& H, const form& g) {
    form gr = ctx.rep(g);
    std::vector<form> chain;
    form p = gr;
    while (H.count(p) == 0) {
        chain.push_back(p);
        p = ctx.mul(p, gr);
        if (chain.size() > 4'000'000)
            throw resource_limit_error("class group: subgroup closure exceeded bound");
    }
    std::vector<form> base(H.begin(), H.end());
    for (const form& q : chain)
        for (const form& s : base)
            H.insert(ctx.mul(s, q));
}

/* elementary divisors d1 | d2 | ... and matching generators by peeling off
   a maximal-order cyclic factor at each step */
class_group_structure extract_structure(const group_context& ctx,
                                        const std::vector<form>& elements) {
    class_group_structure out;
    out.order = (unsigned long)elements.size();
    if (elements.size() == 1)
        return out;
    uint64_t n = elements.size();
    std::vector<uint64_t> primes;
    for (const auto& pp : factor(mpz_class((unsigned long)n)).factors)
        primes.push_back(pp.p.get_ui());
    form id = ctx.identity();

    std::set<form> H{id};
    std::vector<uint64_t> divisors;
    std::vector<form> gens;
    while (H.size() < n) {
        /* maximal order in G/H, smallest witness first */
        uint64_t best_ord = 0;
        form best = id;
        for (const form& x : elements) {
            if (H.count(x))
                continue;
            uint64_t o = element_order(ctx, x, n, primes, id, &H);
            if (o > best_ord || (o == best_ord && x < best)) {
                best_ord = o;
                best = x;
            }
        }
        /* lift: some member of the coset best*H has group order = best_ord */
        form lift = id;
        bool found = false;
        for (const form& h : H) {
            form y = ctx.mul(best, h);
            if (element_order(ctx, y, n, primes, id, nullptr) == best_ord) {
                if (!found || y < lift) {
                    lift = y;
                    found = true;
                }
            }
        }
        if (!found)
            throw std::logic_error("class group: cyclic factor lift failed");
        divisors.push_back(best_ord);
        gens.push_back(lift);
        extend_subgroup(ctx, H, lift);
    }
    /* peeling yields the exponent first; present ascending d1 | d2 | ... */
    std::reverse(divisors.begin(), divisors.end());
    std::reverse(gens.begin(), gens.end());
    for (uint64_t d : divisors)
        out.elementary_divisors.emplace_back((unsigned long)d);
    out.generators = gens;
    return out;
}

}  // namespace

unit_info fundamental_unit(const mpz_class& d) {
    require_nonsquare_d(d);
    if (squarefree_part(d) != d)
        throw std::invalid_argument("fundamental unit: d must be squarefree");
    unit_info u;
    mpz_class x, y;
    u.period = cf_period(d, &x, &y, &u.sigma);
    u.x = x;
    u.y = y;
    u.norm = (u.period & 1) ? -1 : 1;
    /* direct algebraic check: x^2 - d y^2 = norm * sigma^2 */
    mpz_class lhs = u.x * u.x - d * u.y * u.y;
    if (lhs != u.norm * u.sigma * u.sigma)
        throw std::logic_error("fundamental unit: norm check failed");
    {
        std::unique_lock lock(unit_cache_mutex);
        unit_cache.emplace(d, u.norm);
    }
    return u;
}

int unit_norm(const mpz_class& d) {
    require_nonsquare_d(d);
    {
        std::shared_lock lock(unit_cache_mutex);
        auto it = unit_cache.find(d);
        if (it != unit_cache.end())
            return it->second;
    }
    if (squarefree_part(d) != d)
        throw std::invalid_argument("unit norm: d must be squarefree");
    int norm;
    if (d.fits_slong_p() && d.get_si() < 100'000'000'000'000'000ll)
        norm = unit_norm_small((int64_t)d.get_si());
    else {
        mpz_class r = isqrt(d);
        bool half = mpz_fdiv_ui(d.get_mpz_t(), 4) == 1;
        mpz_class P0 = 0, Q0 = 1;
        if (half) {
            P0 = mpz_odd_p(r.get_mpz_t()) ? r : r - 1;
            Q0 = 2;
        }
        mpz_class P = P0, Q = Q0, a;
        unsigned period = 0;
        while (true) {
            cf_step(d, r, P, Q, a);
            period++;
            if (half ? (P == P0 && Q == Q0) : (Q == 1))
                break;
            if (period > 100'000'000)
                throw resource_limit_error("unit norm: period walk exceeded bound");
        }
        norm = (period & 1) ? -1 : 1;
    }
    std::unique_lock lock(unit_cache_mutex);
    unit_cache.emplace(d, norm);
    return norm;
}

oracle_limits default_oracle_limits() {
    static const oracle_limits limits = [] {
        oracle_limits l;
        if (const char* env = std::getenv("POLYA_ORACLE_BOUND")) {
            char* end = nullptr;
            long long v = strtoll(env, &end, 10);
            if (end && end != env && *end == '\0' && v > 0)
                l.max_abs_disc = std::min<int64_t>(v, max_form_disc);
        }
        return l;
    }();
    return limits;
}

std::vector<form> class_representatives(const quad_field& K, bool narrow,
                                        const oracle_limits& limits) {
    int64_t D = disc_to_i64(K, limits);
    if (D < 0)
        return reduced_definite_forms(D);
    std::vector<form> nreps = narrow_reps_indefinite(D);
    if (narrow || !minus_one_nontrivial(D))
        return nreps;
    form j_rep = canonical_form(minus_one_form(D));
    std::set<form> done;
    std::vector<form> out;
    for (const form& f : nreps) {
        if (done.count(f))
            continue;
        form partner = canonical_form(compose(f, j_rep));
        done.insert(f);
        done.insert(partner);
        out.push_back(std::min(f, partner));
    }
    std::sort(out.begin(), out.end());
    return out;
}

form ordinary_form(const form& f) {
    int64_t D = f.disc();
    if (D < 0)
        return reduce(f);
    form r = canonical_form(f);
    if (!minus_one_nontrivial(D))
        return r;
    form r2 = canonical_form(compose(f, canonical_form(minus_one_form(D))));
    return std::min(r, r2);
}

mpz_class class_number(const quad_field& K, bool narrow,
                       const oracle_limits& limits) {
    {
        int64_t D = disc_to_i64(K, limits);
        std::shared_lock lock(group_cache_mutex);
        auto it = group_cache.find({D, narrow});
        if (it != group_cache.end())
            return it->second.order;
    }
    return (unsigned long)class_representatives(K, narrow, limits).size();
}

class_group_structure class_group(const quad_field& K, bool narrow,
                                  const oracle_limits& limits) {
    int64_t D = disc_to_i64(K, limits);
    {
        std::shared_lock lock(group_cache_mutex);
        auto it = group_cache.find({D, narrow});
        if (it != group_cache.end())
            return it->second;
    }
    std::vector<form> reps = class_representatives(K, narrow, limits);
    group_context ctx = make_context(D, narrow);
    class_group_structure st = extract_structure(ctx, reps);
    std::unique_lock lock(group_cache_mutex);
    group_cache.emplace(std::pair{D, narrow}, st);
    return st;
}

class_group_structure subgroup_structure(int64_t disc,
                                         const std::vector<form>& gens,
                                         bool narrow) {
    group_context ctx = make_context(disc, narrow);
    std::set<form> H{ctx.identity()};
    for (const form& g : gens) {
        if (g.disc() != disc)
            throw std::invalid_argument("subgroup_structure: discriminant mismatch");
        extend_subgroup(ctx, H, g);
    }
    return extract_structure(ctx, std::vector<form>(H.begin(), H.end()));
}

unsigned narrow_two_rank(const quad_field& K, const oracle_limits& limits) {
    int64_t D = disc_to_i64(K, limits);
    std::vector<form> reps = class_representatives(K, true, limits);
    size_t fixed = 0;
    for (const form& f : reps) {
        form inv = D < 0 ? canonical_form(opposite(f))
                         : canonical_form(form{f.c, f.b, f.a});
        if (inv == f)
            fixed++;
    }
    unsigned rank = 0;
    while ((size_t{1} << (rank + 1)) <= fixed)
        rank++;
    if ((size_t{1} << rank) != fixed)
        throw std::logic_error("narrow_two_rank: 2-torsion count is not a power of 2");
    return rank;
}

bool is_principal(const quad_field& K, const form& f) {
    if (!K.disc.fits_slong_p() || (int64_t)K.disc.get_si() != f.disc())
        throw std::invalid_argument("is_principal: discriminant mismatch");
    return is_ordinary_principal(f);
}

}  // namespace polya
