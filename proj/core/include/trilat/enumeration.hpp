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
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "trilat/diophantine.hpp"
#include "trilat/families.hpp"
#include "trilat/geometry.hpp"

namespace trilat {

/// The grid {0,...,n}^3.
struct GridSpec {
    int n = 0;
};

struct CountResult {
    int n = 0;
    i64 count = 0;
    std::string method;
    std::chrono::nanoseconds elapsed{0};
    int threads = 1;
};

/// Number of equilateral triangles with all three vertices in the grid.
///
/// Pair scan: for every unordered point pair (P,Q) with l^2 = |Q-P|^2, the
/// lattice third vertices are exactly R = (P+Q+W)/2 over lattice W with
/// |W|^2 = 3*l^2, W.(Q-P) = 0 and W == Q-P (mod 2) -- i.e. both rational
/// third-vertex candidates of every admissible plane through the pair at once.
/// Each triangle is met once per vertex pair; the incidence total is checked
/// divisible by 3. Pairs are partitioned by first-point index; per-thread
/// partials are summed deterministically, so the result is identical for any
/// thread count.
CountResult count_et(const GridSpec& g, int threads = 1);

/// O(points^3) oracle; rejects n above the cap.
CountResult count_et_bruteforce(const GridSpec& g, int cap = 4);

/// Number of regular tetrahedra with all four vertices in the grid: the pair
/// scan enumerates each triangle exactly once (third vertex above the pair in
/// lexicographic order), counts its in-grid lattice apexes, and divides the
/// incidence total by 4 (one incidence per tetrahedron face).
CountResult count_rt(const GridSpec& g, int threads = 1);

/// O(points^4) oracle; rejects n above the cap.
CountResult count_rt_bruteforce(const GridSpec& g, int cap = 2);

/// All equilateral triangles in the grid by exhaustive triple scan
/// (test-oracle quality, capped).
std::vector<LatticeTriangle> enumerate_triangles_bruteforce(const GridSpec& g, int cap = 6);

/// All regular tetrahedra in the grid by exhaustive quadruple scan (capped).
std::vector<LatticeTetrahedron> enumerate_tetrahedra_bruteforce(const GridSpec& g, int cap = 4);

/// One of the 48 signed coordinate permutations (the symmetries of the cube
/// fixing the origin).
struct SignedPermutation {
    std::array<int, 3> perm{0, 1, 2};
    std::array<int, 3> sign{1, 1, 1};

    LatticePoint apply(const LatticePoint& p) const {
        const i64 c[3] = {p.x, p.y, p.z};
        return {sign[0] * c[perm[0]], sign[1] * c[perm[1]], sign[2] * c[perm[2]]};
    }
    int det() const;
};

const std::array<SignedPermutation, 48>& all_signed_permutations();

/// An equivalence class of origin-anchored regular tetrahedra.
struct TetraOrbit {
    LatticeTetrahedron representative; // canonical: lexicographically minimal image
    i64 size = 0;                      // number of distinct tetrahedra in the class
};

/// All regular tetrahedra with one vertex at the origin and sq_side = 2k^2,
/// grouped under the 48 signed permutations. Representatives are the
/// lexicographically minimal images, sorted.
std::vector<TetraOrbit> origin_tetra_orbits(i64 k);

/// Coarser grouping: signed permutations combined with re-anchoring (any of
/// the four vertices may be translated to the origin), i.e. congruence
/// classes of the tetrahedra as rigid shapes.
std::vector<TetraOrbit> origin_tetra_congruence_classes(i64 k);

/// One probed triangle: a family member whose norm value m^2 - m*n + n^2 is a
/// perfect square (so its side is side_root * sqrt(2)), and whether a lattice
/// apex completes it to a regular tetrahedron.
struct ProbeCase {
    PlaneClass plane;
    i64 m = 0, n = 0;
    i64 norm = 0;      // m^2 - m*n + n^2, a perfect square
    i64 side_root = 0; // d * sqrt(norm)
    bool apex_found = false;
    std::optional<LatticePoint> apex;
};

struct ProbeReport {
    std::vector<ProbeCase> cases;
    i64 counterexamples = 0; // cases with no lattice apex
};

/// Probe whether every family triangle with square norm value extends to a
/// regular tetrahedron, over all plane classes with d <= d_bound and
/// |m|,|n| <= mn_range. Reports counterexamples; asserts nothing.
ProbeReport conjecture_probe(i64 d_bound, i64 mn_range = 6);

/// All distinct plane normals obtained from a class by permuting (a,b,c) and
/// flipping signs, modulo global negation (a normal and its negation define
/// the same plane). Sizes are 24 for distinct entries, fewer when entries
/// coincide.
std::vector<PlaneNormal> orbit_expand(const PlaneClass& p);

} // namespace trilat
