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

#include "polya/rational_poly.hpp"

namespace polya {

rational_polynomial::rational_polynomial(std::vector<mpq_class> ascending) : c_(std::move(ascending)) {
    for (auto& q : c_)
        q.canonicalize();
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

mpq_class rational_polynomial::eval(const mpq_class& t) const {
    mpq_class v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        v = v * t + *it;
    return v;
}

std::vector<mpq_class> binomial_basis_coeffs(const rational_polynomial& f) {
    int deg = f.degree();
    if (deg < 0)
        return {};
    /* values at 0..deg, then difference in place: after pass i, v[i] holds
       the i-th forward difference at 0 */
    std::vector<mpq_class> v;
    v.reserve(deg + 1);
    for (int t = 0; t <= deg; t++)
        v.push_back(f.eval(t));
    for (int i = 1; i <= deg; i++)
        for (int j = deg; j >= i; j--)
            v[j] -= v[j - 1];
    return v;
}

bool is_integer_valued(const rational_polynomial& f) {
    for (const mpq_class& c : binomial_basis_coeffs(f))
        if (c.get_den() != 1)
            return false;
    return true;
}

}  // namespace polya
