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

#include "polya/forms.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace polya {

namespace {

using i128 = __int128;

int64_t checked_i64(i128 v) {
    if (v > std::numeric_limits<int64_t>::max() ||
        v < std::numeric_limits<int64_t>::min())
        throw std::overflow_error("form arithmetic: value outside int64");
    return (int64_t)v;
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

/* x mod m in [0, m) for m > 0 */
i128 emod128(i128 x, i128 m) {
    i128 r = x % m;
    return r < 0 ? r + m : r;
}

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/* u*a + v*b = g >= 0 */
i128 ext_gcd128(i128 a, i128 b, i128& u, i128& v) {
    i128 old_r = a, r = b;
    i128 old_u = 1, uu = 0;
    i128 old_v = 0, vv = 1;
    while (r != 0) {
        i128 q = old_r / r;
        i128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_u - q * uu;
        old_u = uu;
        uu = t;
        t = old_v - q * vv;
        old_v = vv;
        vv = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    u = old_u;
    v = old_v;
    return old_r;
}

int64_t checked_disc(const form& f) {
    if (f.a == 0)
        throw std::invalid_argument("form: leading coefficient must be nonzero");
    return f.disc();
}

void require_nonsquare(int64_t d) {
    if (d >= 0) {
        int64_t s = isqrt_ll(d);
        if (s * s == d)
            throw std::invalid_argument("form: discriminant is a perfect square");
    }
}

void require_primitive(const form& f) {
    if (!is_primitive(f))
        throw std::invalid_argument("form: imprimitive form");
}

form reduce_definite(const form& f, int64_t d) {
    if (f.a < 0)
        throw std::invalid_argument("reduce: negative definite form");
    i128 a = f.a, b = f.b, c = f.c;
    while (true) {
        i128 nb = a - emod128(a - b, 2 * a);
        if (nb != b) {
            b = nb;
            c = (b * b - d) / (4 * a);
        }
        if (a > c) {
            i128 t = a;
            a = c;
            b = -b;
            c = t;
            continue;
        }
        break;
    }
    if (a == c && b < 0)
        b = -b;
    return {checked_i64(a), checked_i64(b), checked_i64(c)};
}

/* shared cycle walk: applies pred to every form on the cycle of f */
template <typename Pred>
bool cycle_any(const form& f, Pred pred) {
    form f0 = reduce(f);
    if (f0.disc() < 0)
        return pred(f0);
    form g = f0;
    size_t guard = 0;
    do {
        if (pred(g))
            return true;
        g = rho(g);
        if (++guard > 50'000'000)
            throw std::logic_error("form cycle failed to close");
    } while (!(g == f0));
    return false;
}

}  // namespace

int64_t form::disc() const {
    i128 d = (i128)b * b - 4 * (i128)a * c;
    if (d > max_form_disc || d < -max_form_disc)
        throw resource_limit_error("form: discriminant exceeds supported bound");
    return (int64_t)d;
}

bool form::operator<(const form& o) const {
    return std::tuple(a, b, c) < std::tuple(o.a, o.b, o.c);
}

bool is_primitive(const form& f) {
    return std::gcd(std::gcd(f.a, f.b), f.c) == 1;
}

bool is_reduced(const form& f) {
    if (f.a == 0)
        return false;
    int64_t d = f.disc();
    if (d < 0) {
        if (f.a <= 0)
            return false;
        int64_t ab = f.b < 0 ? -f.b : f.b;
        if (!(ab <= f.a && f.a <= f.c))
            return false;
        if ((ab == f.a || f.a == f.c) && f.b < 0)
            return false;
        return true;
    }
    int64_t s = isqrt_ll(d);
    i128 aa = f.a < 0 ? -(i128)f.a : f.a;
    return f.b > 0 && f.b <= s && 2 * aa - f.b <= s && 2 * aa + f.b >= s + 1;
}

form rho(const form& f) {
    int64_t d = checked_disc(f);
    if (d < 0)
        throw std::invalid_argument("rho: form is definite");
    require_nonsquare(d);
    int64_t s = isqrt_ll(d);
    i128 ac = f.c < 0 ? -(i128)f.c : f.c;
    i128 m = 2 * ac;
    i128 hi = ac <= s ? s : ac;
    i128 nb = hi - emod128(hi + f.b, m);
    i128 nc = (nb * nb - d) / (4 * (i128)f.c);
    return {f.c, checked_i64(nb), checked_i64(nc)};
}

form reduce(const form& f) {
    int64_t d = checked_disc(f);
    require_nonsquare(d);
    require_primitive(f);
    if (d < 0)
        return reduce_definite(f, d);
    form g = f;
    size_t guard = 0;
    while (!is_reduced(g)) {
        g = rho(g);
        if (++guard > 50'000'000)
            throw std::logic_error("reduce: rho failed to terminate");
    }
    return g;
}

std::vector<form> form_cycle(const form& f) {
    form f0 = reduce(f);
    if (f0.disc() < 0)
        return {f0};
    std::vector<form> cycle{f0};
    form g = rho(f0);
    while (!(g == f0)) {
        cycle.push_back(g);
        g = rho(g);
        if (cycle.size() > 50'000'000)
            throw std::logic_error("form_cycle: cycle failed to close");
    }
    return cycle;
}

form canonical_form(const form& f) {
    form f0 = reduce(f);
    if (f0.disc() < 0)
        return f0;
    form best = f0;
    cycle_any(f0, [&](const form& g) {
        if (g < best)
            best = g;
        return false;
    });
    return best;
}

form opposite(const form& f) { return {f.a, -f.b, f.c}; }

form compose(const form& f, const form& g) {
    int64_t d = checked_disc(f);
    if (checked_disc(g) != d)
        throw std::invalid_argument("compose: discriminant mismatch");
    form F = reduce(f);
    form G = reduce(g);
    /* the ideal correspondence below needs positive leading coefficients;
       on an indefinite cycle signs alternate, so one step suffices */
    if (F.a < 0)
        F = rho(F);
    if (G.a < 0)
        G = rho(G);

    /* multiply the ideals (a, (b + sqrt(d))/2) as 2D lattices: coordinates
       (x, y) stand for the number (x + y sqrt(d))/2 */
    i128 x[4], y[4];
    x[0] = 2 * (i128)F.a * G.a;
    y[0] = 0;
    x[1] = (i128)F.a * G.b;
    y[1] = F.a;
    x[2] = (i128)G.a * F.b;
    y[2] = G.a;
    x[3] = ((i128)F.b * G.b + d) / 2;
    y[3] = ((i128)F.b + G.b) / 2;

    /* e = gcd of the y parts, x0 = matching Bezout combination of x parts */
    i128 e = 0, x0 = 0;
    for (int i = 0; i < 4; i++) {
        i128 u, v;
        e = ext_gcd128(e, y[i], u, v);
        x0 = u * x0 + v * x[i];
    }
    /* covolume of the product lattice = gcd of the 2x2 minors */
    i128 covol = 0;
    for (int i = 0; i < 4; i++)
        for (int j = i + 1; j < 4; j++)
            covol = gcd128(covol, x[i] * y[j] - x[j] * y[i]);

    i128 denom = 2 * e * e;
    if (e == 0 || covol % denom != 0 || x0 % e != 0)
        throw std::logic_error("compose: product lattice is not an ideal");
    i128 a3 = covol / denom;
    i128 b3 = x0 / e;
    b3 = a3 - emod128(a3 - b3, 2 * a3);
    i128 c3num = b3 * b3 - d;
    if (c3num % (4 * a3) != 0)
        throw std::logic_error("compose: inconsistent product form");
    form out{checked_i64(a3), checked_i64(b3), checked_i64(c3num / (4 * a3))};
    return reduce(out);
}

form principal_form(int64_t disc) {
    if (disc > max_form_disc || disc < -max_form_disc)
        throw resource_limit_error("form: discriminant exceeds supported bound");
    require_nonsquare(disc);
    int64_t r = (int64_t)emod128(disc, 4);
    if (r == 0)
        return {1, 0, checked_i64(-(i128)disc / 4)};
    if (r == 1)
        return {1, 1, checked_i64((1 - (i128)disc) / 4)};
    throw std::invalid_argument("principal_form: discriminant must be 0 or 1 mod 4");
}

form minus_one_form(int64_t disc) {
    if (disc <= 0)
        throw std::invalid_argument("minus_one_form: discriminant must be positive");
    principal_form(disc); /* validates bound, residue, nonsquare */
    int64_t s = isqrt_ll(disc);
    int64_t b0 = ((s ^ disc) & 1) ? s - 1 : s;
    return {-1, b0, checked_i64(((i128)disc - (i128)b0 * b0) / 4)};
}

form ramified_prime_form(int64_t disc, int64_t p) {
    principal_form(disc); /* validates bound, residue, nonsquare */
    if (p < 2 || !is_prime(mpz_class(p)))
        throw std::invalid_argument("ramified_prime_form: p is not prime");
    if (disc % p != 0)
        throw std::invalid_argument("ramified_prime_form: p does not divide disc");
    int64_t B;
    if (p == 2)
        B = emod128(disc, 16) == 12 ? 2 : 0;
    else
        B = (disc & 1) ? p : 0;
    i128 num = (i128)B * B - disc;
    if (emod128(num, 4 * p) != 0)
        throw std::invalid_argument(
            "ramified_prime_form: no canonical residue for this discriminant");
    return {p, B, checked_i64(num / (4 * (i128)p))};
}

bool is_narrow_principal(const form& f) {
    return cycle_any(f, [](const form& g) { return g.a == 1; });
}

bool is_ordinary_principal(const form& f) {
    return cycle_any(f, [](const form& g) { return g.a == 1 || g.a == -1; });
}

}  // namespace polya
