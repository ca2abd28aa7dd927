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

#include "trilat/diophantine.hpp"

#include <string>

namespace trilat {

PlaneClass make_plane_class(i64 a, i64 b, i64 c, i64 d) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + "," + std::to_string(d) +
                                    ") is not a primitive plane class: " + why);
    };
    if (d < 1) fail("d must be positive");
    if (!(0 < a && a <= b && b <= c)) fail("requires 0 < a <= b <= c");
    if (gcd3(a, b, c) != 1) fail("gcd(a,b,c) must be 1");
    if (checked_add(checked_add(checked_mul(a, a), checked_mul(b, b)), checked_mul(c, c)) !=
        checked_mul(3, checked_mul(d, d)))
        fail("a^2+b^2+c^2 != 3d^2");
    if (!((a & 1) && (b & 1) && (c & 1) && (d & 1))) fail("entries must all be odd");
    return PlaneClass{a, b, c, d};
}

std::vector<PlaneClass> primitive_solutions(i64 d) {
    if (d < 1 || d % 2 == 0)
        throw std::invalid_argument("primitive_solutions requires odd d >= 1");
    const i64 target = checked_mul(3, checked_mul(d, d));
    std::vector<PlaneClass> out;
    for (i64 a = 1; a * a * 3 <= target; a += 2) {
        for (i64 b = a; a * a + 2 * b * b <= target; b += 2) {
            i64 rem = target - a * a - b * b;
            i64 c = isqrt(rem);
            if (c * c != rem || c < b) continue;
            if (gcd3(a, b, c) != 1) continue;
            out.push_back(PlaneClass{a, b, c, d});
        }
    }
    // a-major, then b-major scan already yields lexicographic order
    return out;
}

i64 count_primitive(i64 d) {
    return static_cast<i64>(primitive_solutions(d).size());
}

i64 count_primitive_ordered(i64 d) {
    i64 total = 0;
    for (const auto& p : primitive_solutions(d)) {
        if (p.a == p.b && p.b == p.c) total += 1;
        else if (p.a == p.b || p.b == p.c) total += 3;
        else total += 6;
    }
    return total;
}

EqOneSolution param_solution(const ParamTriple& t) {
    const i64 s = checked_add(checked_add(t.x1, t.x2), t.x3);
    const i64 d = checked_add(checked_add(checked_mul(t.x1, t.x1), checked_mul(t.x2, t.x2)),
                              checked_mul(t.x3, t.x3));
    EqOneSolution out;
    out.a = checked_sub(d, checked_mul(2, checked_mul(t.x1, s)));
    out.b = checked_sub(d, checked_mul(2, checked_mul(t.x2, s)));
    out.c = checked_sub(d, checked_mul(2, checked_mul(t.x3, s)));
    out.d = d;
    return out;
}

ParamInversion invert_param(const PlaneClass& p) {
    ParamInversion out;
    i64 twice_k = 3 * p.d - p.a - p.b - p.c; // >= 0 since 3d >= a+b+c
    if (twice_k % 2 != 0)
        throw std::logic_error("3d-a-b-c odd for an all-odd class"); // unreachable
    out.k = twice_k / 2;
    if (out.k == 0) {
        // a = b = c = d: the degenerate class, coefficients all zero
        out.q1 = out.q2 = out.q3 = Rational(0);
        return out;
    }
    out.q1 = Rational(p.d - p.a, 2 * out.k);
    out.q2 = Rational(p.d - p.b, 2 * out.k);
    out.q3 = Rational(p.d - p.c, 2 * out.k);
    return out;
}

std::vector<std::pair<i64, i64>> pell_family(i64 seed_d, i64 seed_c, int count) {
    if (count < 1)
        throw std::invalid_argument("pell_family requires count >= 1");
    std::vector<std::pair<i64, i64>> out;
    out.reserve(count);
    i64 d = seed_d, c = seed_c;
    for (int i = 0; i < count; ++i) {
        i64 nd = checked_add(checked_mul(2, d), c);
        i64 nc = checked_add(checked_mul(3, d), checked_mul(2, c));
        out.emplace_back(nd, nc);
        d = nd;
        c = nc;
    }
    return out;
}

} // namespace trilat
