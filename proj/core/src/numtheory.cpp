// Copyright 2026 The trilat Authors
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

#include "trilat/numtheory.hpp"

#include <algorithm>

namespace trilat {

int Factorization::exponent_of(i64 p) const {
    for (const auto& f : factors)
        if (f.prime == p) return f.exponent;
    return 0;
}

Factorization factorize(i64 t) {
    if (t < 1)
        throw std::invalid_argument("factorize requires t >= 1");
    Factorization out;
    out.value = t;
    i64 rest = t;
    auto strip = [&](i64 p) {
        int e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        if (e > 0) out.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (i64 p = 5; p * p <= rest; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (rest > 1) out.factors.push_back({rest, 1});
    return out;
}

bool is_eisenstein_norm(i64 t) {
    if (t < 0)
        throw std::invalid_argument("is_eisenstein_norm requires t >= 0");
    if (t == 0) return true; // m = n = 0
    for (const auto& [p, e] : factorize(t).factors)
        if ((p == 2 || p % 6 == 5) && (e & 1))
            return false;
    return true;
}

static i64 norm_form(i64 m, i64 n) {
    return checked_add(checked_sub(checked_mul(m, m), checked_mul(m, n)), checked_mul(n, n));
}

std::optional<NormRepresentation> represent_eisenstein_norm(i64 t) {
    if (t < 0)
        throw std::invalid_argument("represent_eisenstein_norm requires t >= 0");
    if (t == 0) return NormRepresentation{0, 0, 0};
    i64 bound = isqrt((4 * t) / 3) + 1;
    for (i64 m = 1; m <= bound; ++m)
        for (i64 n = 0; n <= m; ++n)
            if (norm_form(m, n) == t)
                return NormRepresentation{m, n, t};
    return std::nullopt;
}

std::optional<std::pair<i64, i64>> find_3x2_minus_y2(i64 t, i64 x_bound) {
    if (t < 1)
        throw std::invalid_argument("find_3x2_minus_y2 requires t >= 1");
    for (i64 x = 0; x <= x_bound; ++x) {
        i64 y2 = 3 * x * x - t;
        if (y2 < 0) continue;
        i64 y = isqrt(y2);
        if (y * y == y2)
            return std::make_pair(x, y);
    }
    return std::nullopt;
}

bool is_sum_of_two_squares(i64 t) {
    if (t < 0)
        throw std::invalid_argument("is_sum_of_two_squares requires t >= 0");
    if (t == 0) return true;
    for (const auto& [p, e] : factorize(t).factors)
        if (p % 4 == 3 && (e & 1))
            return false;
    return true;
}

QuadraticFormTriple quadratic_form_triple(i64 t, i64 x_bound) {
    if (t < 1)
        throw std::invalid_argument("quadratic_form_triple requires t >= 1");
    if (x_bound <= 0)
        x_bound = 4 * isqrt(t) + 4;
    QuadraticFormTriple out;
    out.has_3x2_minus_y2 = find_3x2_minus_y2(t, x_bound).has_value();
    out.sum_of_two_squares = is_sum_of_two_squares(t);
    out.twice_eisenstein_norm = (t % 2 == 0) && is_eisenstein_norm(t / 2);
    return out;
}

std::vector<RsRepresentation> rs_candidates(i64 q, i64 A, i64 B) {
    if (q < 1)
        throw std::invalid_argument("rs_candidates requires q >= 1");
    const i64 two_q = checked_mul(2, q);
    auto congruences_hold = [&](i64 r, i64 s) {
        i128 first = i128(A) * r + i128(B) * s;
        i128 second = i128(A) * s - 3 * i128(B) * r;
        return first % two_q == 0 && second % two_q == 0;
    };
    std::vector<RsRepresentation> out;
    i64 r_max = isqrt(two_q / 3);
    for (i64 r0 = 0; r0 <= r_max; ++r0) {
        i64 s2 = two_q - 3 * r0 * r0;
        i64 s0 = isqrt(s2);
        if (s0 * s0 != s2) continue;
        // sign pattern order: (+,+), (+,-), (-,+), (-,-), skipping duplicates
        for (int sr : {1, -1}) {
            if (r0 == 0 && sr < 0) continue;
            for (int ss : {1, -1}) {
                if (s0 == 0 && ss < 0) continue;
                if (congruences_hold(sr * r0, ss * s0))
                    out.push_back(RsRepresentation{sr * r0, ss * s0, q});
            }
        }
    }
    return out;
}

RsRepresentation solve_rs(i64 q, i64 a, i64 b, i64 c, i64 d) {
    if (checked_add(checked_mul(a, a), checked_mul(b, b)) != q)
        throw std::invalid_argument("solve_rs requires q = a^2 + b^2");
    if (checked_add(q, checked_mul(c, c)) != checked_mul(3, checked_mul(d, d)))
        throw std::invalid_argument("solve_rs requires a^2+b^2+c^2 = 3d^2");
    auto candidates = rs_candidates(q, checked_mul(a, c), checked_mul(d, b));
    if (candidates.empty())
        throw std::logic_error("no (r,s) representation of 2q satisfies the congruences; "
                               "inputs violate the solver's contract");
    return candidates.front();
}

} // namespace trilat
