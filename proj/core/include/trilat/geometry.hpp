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

#include <array>
#include <optional>
#include <vector>

#include "trilat/ints.hpp"
#include "trilat/numtheory.hpp"
#include "trilat/rational.hpp"

namespace trilat {

struct LatticePoint {
    i64 x = 0, y = 0, z = 0;

    friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
        return {checked_add(a.x, b.x), checked_add(a.y, b.y), checked_add(a.z, b.z)};
    }
    friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
        return {checked_sub(a.x, b.x), checked_sub(a.y, b.y), checked_sub(a.z, b.z)};
    }
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }
    bool is_origin() const { return x == 0 && y == 0 && z == 0; }
};

i64 dot(const LatticePoint& a, const LatticePoint& b);
LatticePoint cross(const LatticePoint& a, const LatticePoint& b);
i64 norm2(const LatticePoint& a);
i64 dist2(const LatticePoint& a, const LatticePoint& b);

/// A gcd-reduced, sign-normalized plane normal (a,b,c) with a^2+b^2+c^2 = 3d^2.
/// Unlike PlaneClass, components keep their signs and order; the first nonzero
/// component is positive.
struct PlaneNormal {
    i64 a = 0, b = 0, c = 0, d = 0;
    friend bool operator==(const PlaneNormal&, const PlaneNormal&) = default;
    friend bool operator<(const PlaneNormal& l, const PlaneNormal& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        if (l.c != r.c) return l.c < r.c;
        return l.d < r.d;
    }
};

/// Equilateral triangle on lattice points. sq_side is the common squared
/// side length; it is always twice a value of the form m^2 - m*n + n^2.
struct LatticeTriangle {
    std::array<LatticePoint, 3> vertices;
    i64 sq_side = 0;
    friend bool operator==(const LatticeTriangle&, const LatticeTriangle&) = default;
};

/// Regular tetrahedron on lattice points; sq_side = 2k^2 for some integer k.
struct LatticeTetrahedron {
    std::array<LatticePoint, 4> vertices;
    i64 sq_side = 0;
    friend bool operator==(const LatticeTetrahedron&, const LatticeTetrahedron&) = default;
};

/// Checked constructors: empty result when the points are not the vertices of
/// an equilateral triangle / regular tetrahedron (degenerate included).
std::optional<LatticeTriangle> validate_triangle(const LatticePoint& v1, const LatticePoint& v2,
                                                 const LatticePoint& v3);
std::optional<LatticeTetrahedron> validate_tetrahedron(const LatticePoint& v1,
                                                       const LatticePoint& v2,
                                                       const LatticePoint& v3,
                                                       const LatticePoint& v4);

/// Reduced normal of a triangle with one vertex at the origin. The raw cross
/// product of the two edge vectors has squared norm 3*(sq_side/2)^2 (the area
/// relation, checked exactly); dividing by the gcd and fixing the sign of the
/// first nonzero component yields (a,b,c), and d = sqrt((a^2+b^2+c^2)/3).
PlaneNormal normal_of_triangle(const LatticeTriangle& t);

enum class VertexSign { plus, minus };

/// The rational third vertex: given P(u,v,w) in the plane through the origin
/// with normal (a,b,c), the two points Q making OPQ equilateral are
///   x = u/2 +- (c*v - b*w)/(2d),
///   y = v/2 +- (a*w - c*u)/(2d),
///   z = w/2 +- (b*u - a*v)/(2d),
/// with the same sign used in all three coordinates.
RationalPoint third_vertex(const LatticePoint& p, const PlaneNormal& normal, VertexSign sign);

/// Witness (m,n) with sq_side = 2*(m^2 - m*n + n^2), empty when sq_side is
/// not twice such a value -- in which case no lattice equilateral triangle of
/// that squared side exists.
std::optional<NormRepresentation> classify_side(i64 sq_side);

/// The 0, 1, or 2 lattice apexes completing the triangle to a regular
/// tetrahedron. Candidates sit over the centroid at distance l*sqrt(2/3)
/// along the plane normal; they can only be rational when sq_side = 2k^2, in
/// which case apex = (A+B+C)/3 +- (2/(3k)) * (B-A)x(C-A), evaluated exactly.
std::vector<LatticePoint> tetra_apexes(const LatticeTriangle& t);

/// True iff sq_side = 2k^2 for an integer k >= 1.
bool is_tetra_side_admissible(i64 sq_side);

} // namespace trilat
