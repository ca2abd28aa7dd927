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

#include <optional>

#include "trilat/diophantine.hpp"
#include "trilat/geometry.hpp"
#include "trilat/numtheory.hpp"

namespace trilat {

/// The twelve integer coefficients of a two-parameter triangle family:
///   P = (m_u*m - n_u*n,  m_v*m - n_v*n,  m_w*m - n_w*n)
///   Q = (m_x*m - n_x*n,  m_y*m - n_y*n,  m_z*m - n_z*n)
struct FamilyCoefficients {
    i64 m_u = 0, m_v = 0, m_w = 0;
    i64 n_u = 0, n_v = 0, n_w = 0;
    i64 m_x = 0, m_y = 0, m_z = 0;
    i64 n_x = 0, n_y = 0, n_z = 0;
    friend bool operator==(const FamilyCoefficients&, const FamilyCoefficients&) = default;
};

/// A complete parametrization of the equilateral triangles anchored at the
/// origin inside one plane class. Invariants (all exact):
///   - each squared coefficient triple sums to 2d^2,
///   - both mixed products m.n sum to d^2,
///   - all four coefficient triples are orthogonal to (a,b,c).
/// rs is present when the family was produced by the general construction
/// (build_family); the hardcoded small-d families carry no rs witness.
/// pivot records which coordinate position (0,1,2) played the role paired
/// with the gcd(d,.)=1 hypothesis.
struct TriangleFamily {
    PlaneClass plane;
    FamilyCoefficients coeffs;
    std::optional<RsRepresentation> rs;
    int pivot = 2;
};

struct FamilyPoint {
    i64 m = 0, n = 0;
    friend bool operator==(const FamilyPoint&, const FamilyPoint&) = default;
};

/// Thrown when no coordinate position of the class satisfies gcd(d, .) = 1;
/// such a class would be a counterexample to the construction's hypothesis
/// and is reported, never silently skipped.
class GcdPivotError : public std::runtime_error {
  public:
    explicit GcdPivotError(const PlaneClass& p)
        : std::runtime_error("no coordinate of (" + std::to_string(p.a) + "," +
                             std::to_string(p.b) + "," + std::to_string(p.c) +
                             ") is coprime to d=" + std::to_string(p.d)),
          plane(p) {}
    PlaneClass plane;
};

/// The d=1 family in the plane x+y+z=0:
///   P = (m, -n, n-m), Q = (m-n, -m, n), sq_side = 2(m^2 - m*n + n^2).
TriangleFamily family_d1();

/// The hardcoded families for small d. Valid (d, which):
///   (3,1) -> class (1,1,5);  (5,1) -> (1,5,7);  (7,1) -> (1,5,11);
///   (9,1) -> (1,11,11);      (9,2) -> (5,7,13).
/// Side length is d * sqrt(2(m^2 - m*n + n^2)).
TriangleFamily family_small(i64 d, int which);

/// General construction for any primitive class. Picks a pivot coordinate
/// with gcd(d, pivot) = 1 (positions tried in order c, b, a), sets
/// q = sum of the squares of the two non-pivot entries, obtains (r,s) with
/// s^2+3r^2 = 2q satisfying the two congruences, and evaluates the twelve
/// coefficients; every division is verified exact and every family identity
/// is checked before returning. Throws GcdPivotError when no pivot exists.
TriangleFamily build_family(const PlaneClass& p);

/// Exact identity check (the three squared-sum identities, the two mixed
/// products, and the four orthogonality relations).
bool family_identities_hold(const TriangleFamily& f);

/// Evaluate the family at (m,n) != (0,0); the result is validated and its
/// sq_side always equals 2*d^2*(m^2 - m*n + n^2).
LatticeTriangle emit_triangle(const TriangleFamily& f, const FamilyPoint& pt);

/// Invert emit_triangle: solve the 3x2 linear system for (m,n) exactly, for
/// either assignment of the two non-origin vertices to (P,Q). Empty when the
/// triangle is not generated by the family. Throws std::invalid_argument when
/// a vertex is not even in the family's plane.
std::optional<FamilyPoint> membership(const TriangleFamily& f, const LatticeTriangle& t);

} // namespace trilat
