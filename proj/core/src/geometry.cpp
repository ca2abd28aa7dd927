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

#include "trilat/geometry.hpp"

#include <algorithm>

namespace trilat {

i64 dot(const LatticePoint& a, const LatticePoint& b) {
    return narrow(i128(a.x) * b.x + i128(a.y) * b.y + i128(a.z) * b.z);
}

LatticePoint cross(const LatticePoint& a, const LatticePoint& b) {
    return {narrow(i128(a.y) * b.z - i128(a.z) * b.y),
            narrow(i128(a.z) * b.x - i128(a.x) * b.z),
            narrow(i128(a.x) * b.y - i128(a.y) * b.x)};
}

i64 norm2(const LatticePoint& a) { return dot(a, a); }

i64 dist2(const LatticePoint& a, const LatticePoint& b) { return norm2(a - b); }

std::optional<LatticeTriangle> validate_triangle(const LatticePoint& v1, const LatticePoint& v2,
                                                 const LatticePoint& v3) {
    i64 s = dist2(v1, v2);
    if (s == 0 || dist2(v1, v3) != s || dist2(v2, v3) != s)
        return std::nullopt;
    return LatticeTriangle{{v1, v2, v3}, s};
}

std::optional<LatticeTetrahedron> validate_tetrahedron(const LatticePoint& v1,
                                                       const LatticePoint& v2,
                                                       const LatticePoint& v3,
                                                       const LatticePoint& v4) {
    i64 s = dist2(v1, v2);
    if (s == 0) return std::nullopt;
    const LatticePoint vs[4] = {v1, v2, v3, v4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (dist2(vs[i], vs[j]) != s)
                return std::nullopt;
    return LatticeTetrahedron{{v1, v2, v3, v4}, s};
}

PlaneNormal normal_of_triangle(const LatticeTriangle& t) {
    int origin_at = -1;
    for (int i = 0; i < 3; ++i)
        if (t.vertices[i].is_origin()) { origin_at = i; break; }
    if (origin_at < 0)
        throw std::invalid_argument("normal_of_triangle requires a vertex at the origin");
    const LatticePoint& p = t.vertices[(origin_at + 1) % 3];
    const LatticePoint& q = t.vertices[(origin_at + 2) % 3];
    LatticePoint n = cross(p, q);
    if (n.is_origin())
        throw std::invalid_argument("degenerate triangle");

    // area relation: |p x q|^2 = 3 * (sq_side/2)^2, exactly
    i128 lhs = i128(n.x) * n.x + i128(n.y) * n.y + i128(n.z) * n.z;
    i128 half = i128(t.sq_side) / 2;
    if (t.sq_side % 2 != 0 || lhs != 3 * half * half)
        throw std::logic_error("cross product norm violates the area relation");

    i64 g = gcd3(n.x < 0 ? -n.x : n.x, n.y < 0 ? -n.y : n.y, n.z < 0 ? -n.z : n.z);
    n = {n.x / g, n.y / g, n.z / g};
    i64 lead = n.x != 0 ? n.x : (n.y != 0 ? n.y : n.z);
    if (lead < 0) n = {-n.x, -n.y, -n.z};

    i64 nn = norm2(n);
    if (nn % 3 != 0)
        throw std::logic_error("reduced normal norm not divisible by 3");
    i64 d = isqrt(nn / 3);
    if (d * d != nn / 3)
        throw std::logic_error("reduced normal norm is not 3 times a square");
    return PlaneNormal{n.x, n.y, n.z, d};
}

RationalPoint third_vertex(const LatticePoint& p, const PlaneNormal& normal, VertexSign sign) {
    if (p.is_origin())
        throw std::invalid_argument("third_vertex requires a nonzero in-plane point");
    const i64 a = normal.a, b = normal.b, c = normal.c, d = normal.d;
    if (checked_add(checked_mul(a, p.x), checked_add(checked_mul(b, p.y), checked_mul(c, p.z))) != 0)
        throw std::invalid_argument("point is not in the plane of the given normal");
    const i64 sg = sign == VertexSign::plus ? 1 : -1;
    RationalPoint q;
    q.x = Rational(p.x, 2) + Rational(sg * checked_sub(checked_mul(c, p.y), checked_mul(b, p.z)), 2 * d);
    q.y = Rational(p.y, 2) + Rational(sg * checked_sub(checked_mul(a, p.z), checked_mul(c, p.x)), 2 * d);
    q.z = Rational(p.z, 2) + Rational(sg * checked_sub(checked_mul(b, p.x), checked_mul(a, p.y)), 2 * d);
    return q;
}

std::optional<NormRepresentation> classify_side(i64 sq_side) {
    if (sq_side < 1)
        throw std::invalid_argument("classify_side requires sq_side >= 1");
    if (sq_side % 2 != 0)
        return std::nullopt;
    return represent_eisenstein_norm(sq_side / 2);
}

std::vector<LatticePoint> tetra_apexes(const LatticeTriangle& t) {
    std::vector<LatticePoint> out;
    if (t.sq_side % 2 != 0)
        return out;
    i64 half = t.sq_side / 2;
    i64 k = isqrt(half);
    if (k * k != half)
        return out; // side is not k*sqrt(2): apex height is irrational
    const LatticePoint& a = t.vertices[0];
    LatticePoint n = cross(t.vertices[1] - a, t.vertices[2] - a);
    LatticePoint csum = a + t.vertices[1] + t.vertices[2];
    for (int sg : {1, -1}) {
        bool integral = true;
        i64 coords[3] = {0, 0, 0};
        const i64 cn[3] = {n.x, n.y, n.z};
        const i64 cs[3] = {csum.x, csum.y, csum.z};
        for (int i = 0; i < 3 && integral; ++i) {
            i128 num = i128(k) * cs[i] + i128(sg) * 2 * cn[i];
            if (num % (3 * i128(k)) != 0) integral = false;
            else coords[i] = narrow(num / (3 * i128(k)));
        }
        if (integral)
            out.push_back(LatticePoint{coords[0], coords[1], coords[2]});
    }
    return out;
}

bool is_tetra_side_admissible(i64 sq_side) {
    if (sq_side < 1)
        throw std::invalid_argument("is_tetra_side_admissible requires sq_side >= 1");
    return sq_side % 2 == 0 && is_perfect_square(sq_side / 2);
}

} // namespace trilat
