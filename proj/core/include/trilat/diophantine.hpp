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

#pragma once

#include <utility>
#include <vector>

#include "trilat/ints.hpp"
#include "trilat/rational.hpp"

namespace trilat {

/// Normalized primitive solution of a^2 + b^2 + c^2 = 3d^2:
/// 0 < a <= b <= c, gcd(a,b,c) = 1, and a, b, c, d all odd (forced by the
/// gcd condition). Indexes the plane a*x + b*y + c*z = 0 through the origin.
struct PlaneClass {
    i64 a = 1, b = 1, c = 1, d = 1;
    friend bool operator==(const PlaneClass&, const PlaneClass&) = default;
    friend bool operator<(const PlaneClass& l, const PlaneClass& r) {
        if (l.d != r.d) return l.d < r.d;
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.c < r.c;
    }
};

/// Validate all PlaneClass invariants; throws std::invalid_argument on failure.
PlaneClass make_plane_class(i64 a, i64 b, i64 c, i64 d);

/// All normalized primitive solutions for a given odd d, sorted
/// lexicographically. Exhaustive search over a <= b <= c. Rejects even or
/// nonpositive d.
std::vector<PlaneClass> primitive_solutions(i64 d);

/// primitive_solutions(d).size().
i64 count_primitive(i64 d);

/// Same solutions counted as ordered positive triples (a,b,c), i.e. each
/// normalized class weighted by its number of distinct permutations.
i64 count_primitive_ordered(i64 d);

struct ParamTriple {
    i64 x1 = 0, x2 = 0, x3 = 0;
};

struct EqOneSolution {
    i64 a = 0, b = 0, c = 0, d = 0;
    friend bool operator==(const EqOneSolution&, const EqOneSolution&) = default;
};

/// Three-parameter solution: with s = x1+x2+x3 and d = x1^2+x2^2+x3^2,
///   a = d - 2*x1*s,  b = d - 2*x2*s,  c = d - 2*x3*s.
/// Output always satisfies a^2 + b^2 + c^2 = 3d^2.
EqOneSolution param_solution(const ParamTriple& t);

/// Exact inversion of the three-parameter form on a primitive class:
/// k = (3d - a - b - c)/2 (a nonnegative integer), and x_i = coeff_i * sqrt(k)
/// with coeff_i = (d - value_i) / (2k). k = 0 only for the a=b=c=d class,
/// where all coefficients are zero.
struct ParamInversion {
    i64 k = 0;
    Rational q1, q2, q3;
};
ParamInversion invert_param(const PlaneClass& p);

/// Iterate d' = 2d + c, c' = 3d + 2c from the seed, `count` times. Every pair
/// satisfies 3d^2 - c^2 = 3*seed_d^2 - seed_c^2, and both sequences are
/// strictly increasing for positive seeds.
std::vector<std::pair<i64, i64>> pell_family(i64 seed_d, i64 seed_c, int count);

} // namespace trilat
