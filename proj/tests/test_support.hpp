#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "trilat/diophantine.hpp"
#include "trilat/families.hpp"
#include "trilat/geometry.hpp"

namespace trilat::test {

/// Seed for randomized property tests. Fixed default; override with
/// --seed=N on the test binary or the TRILAT_TEST_SEED environment variable.
inline unsigned long long& test_seed() {
    static unsigned long long seed = [] {
        if (const char* env = std::getenv("TRILAT_TEST_SEED"))
            return std::strtoull(env, nullptr, 10);
        return 0x7261746Cull;
    }();
    return seed;
}

inline std::mt19937_64 make_rng() { return std::mt19937_64(test_seed()); }

using VertexTriple = std::array<LatticePoint, 3>;

inline VertexTriple canonical_vertices(const LatticeTriangle& t) {
    VertexTriple v{t.vertices[0], t.vertices[1], t.vertices[2]};
    std::sort(v.begin(), v.end());
    return v;
}

/// Integer basis of the null lattice of a*x + b*y + c*z = 0 (spans a finite
/// index sublattice, which is enough for generating in-plane sample points).
inline std::pair<LatticePoint, LatticePoint> plane_basis(const PlaneClass& p) {
    i64 g = std::gcd(p.a, p.b);
    LatticePoint v1{p.b / g, -p.a / g, 0};
    // extended gcd: pa * a + pb * b = g
    i64 old_r = p.a, r = p.b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        i64 qq = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - qq * r};
        std::tie(old_s, s) = std::pair{s, old_s - qq * s};
        std::tie(old_t, t) = std::pair{t, old_t - qq * t};
    }
    LatticePoint v2{old_s * p.c, old_t * p.c, -g};
    return {v1, v2};
}

/// All lattice equilateral triangles anchored at the origin whose two other
/// vertices lie in the plane of `p` and inside [-box, box]^3, by exhaustive
/// pair scan over the in-plane points. Returned as canonical vertex triples.
inline std::set<VertexTriple> brute_force_plane_triangles(const PlaneClass& p, i64 box) {
    std::vector<LatticePoint> pts;
    for (i64 x = -box; x <= box; ++x)
        for (i64 y = -box; y <= box; ++y) {
            i64 num = -(p.a * x + p.b * y);
            if (num % p.c != 0) continue;
            i64 z = num / p.c;
            if (z < -box || z > box) continue;
            if (x == 0 && y == 0 && z == 0) continue;
            pts.push_back({x, y, z});
        }
    std::set<VertexTriple> out;
    const LatticePoint origin{0, 0, 0};
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (auto t = validate_triangle(origin, pts[i], pts[j]))
                out.insert(canonical_vertices(*t));
    return out;
}

/// Family triangles restricted to the box, over the parameter range that
/// provably covers it (|m|,|n| <= ceil(3*box/d)+1).
inline std::set<VertexTriple> family_plane_triangles(const TriangleFamily& f, i64 box) {
    const i64 range = (3 * box + f.plane.d - 1) / f.plane.d + 1;
    std::set<VertexTriple> out;
    for (i64 m = -range; m <= range; ++m)
        for (i64 n = -range; n <= range; ++n) {
            if (m == 0 && n == 0) continue;
            LatticeTriangle t = emit_triangle(f, FamilyPoint{m, n});
            bool inside = true;
            for (const auto& v : t.vertices)
                if (v.x < -box || v.x > box || v.y < -box || v.y > box || v.z < -box ||
                    v.z > box)
                    inside = false;
            if (inside) out.insert(canonical_vertices(t));
        }
    return out;
}

} // namespace trilat::test
