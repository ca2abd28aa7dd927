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

#include "trilat/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

namespace trilat {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<LatticePoint> grid_points(int n) {
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<size_t>(n + 1) * (n + 1) * (n + 1));
    for (i64 x = 0; x <= n; ++x)
        for (i64 y = 0; y <= n; ++y)
            for (i64 z = 0; z <= n; ++z)
                pts.push_back({x, y, z});
    return pts;
}

/// Lattice points on the sphere |W|^2 = m.
std::vector<LatticePoint> sphere_points(i64 m) {
    std::vector<LatticePoint> out;
    i64 bx = isqrt(m);
    for (i64 x = -bx; x <= bx; ++x) {
        i64 rem_x = m - x * x;
        i64 by = isqrt(rem_x);
        for (i64 y = -by; y <= by; ++y) {
            i64 rem = rem_x - y * y;
            i64 z = isqrt(rem);
            if (z * z != rem) continue;
            if (z == 0) out.push_back({x, y, 0});
            else {
                out.push_back({x, y, z});
                out.push_back({x, y, -z});
            }
        }
    }
    return out;
}

/// Sphere lists |W|^2 = 3*l^2 for every even squared pair distance l^2 that
/// occurs in the grid; built once, read-only during the parallel scan.
std::unordered_map<i64, std::vector<LatticePoint>> third_vertex_spheres(int n) {
    std::set<i64> values;
    for (i64 dx = 0; dx <= n; ++dx)
        for (i64 dy = dx; dy <= n; ++dy)
            for (i64 dz = dy; dz <= n; ++dz) {
                i64 l2 = dx * dx + dy * dy + dz * dz;
                if (l2 > 0 && l2 % 2 == 0) values.insert(l2);
            }
    std::unordered_map<i64, std::vector<LatticePoint>> out;
    out.reserve(values.size());
    for (i64 l2 : values)
        out.emplace(l2, sphere_points(3 * l2));
    return out;
}

struct PairScanTotals {
    i64 triangle_incidences = 0;
    i64 apex_incidences = 0;
};

/// Shared pair-scan core. Pairs are split by first-point index (i % threads);
/// each worker owns one partial; the final sums do not depend on scheduling.
PairScanTotals pair_scan(int n, int threads, bool with_apexes) {
    const auto pts = grid_points(n);
    const auto spheres = third_vertex_spheres(n);
    const int npts = static_cast<int>(pts.size());
    threads = std::max(1, threads);

    std::vector<PairScanTotals> partials(threads);
    auto worker = [&](int tid) {
        PairScanTotals local;
        for (int i = tid; i < npts; i += threads) {
            const LatticePoint& p = pts[i];
            for (int j = i + 1; j < npts; ++j) {
                const LatticePoint& q = pts[j];
                const i64 vx = q.x - p.x, vy = q.y - p.y, vz = q.z - p.z;
                const i64 l2 = vx * vx + vy * vy + vz * vz;
                if (l2 & 1) continue;
                auto it = spheres.find(l2);
                if (it == spheres.end()) continue;
                for (const LatticePoint& w : it->second) {
                    if (w.x * vx + w.y * vy + w.z * vz != 0) continue;
                    if (((w.x ^ vx) | (w.y ^ vy) | (w.z ^ vz)) & 1) continue;
                    const i64 rx = (p.x + q.x + w.x) / 2;
                    const i64 ry = (p.y + q.y + w.y) / 2;
                    const i64 rz = (p.z + q.z + w.z) / 2;
                    if (rx < 0 || rx > n || ry < 0 || ry > n || rz < 0 || rz > n) continue;
                    ++local.triangle_incidences;
                    if (!with_apexes) continue;
                    // enumerate each triangle once: require R >lex Q
                    LatticePoint r{rx, ry, rz};
                    if (!(q < r)) continue;
                    const i64 half = l2 / 2;
                    const i64 k = isqrt(half);
                    if (k * k != half) continue;
                    const i64 ex = ry * vz - rz * vy - (p.y * vz - p.z * vy);
                    const i64 ey = rz * vx - rx * vz - (p.z * vx - p.x * vz);
                    const i64 ez = rx * vy - ry * vx - (p.x * vy - p.y * vx);
                    // (ex,ey,ez) = (R-P) x (Q-P); both apex signs are tried below
                    const i64 sx = p.x + q.x + rx, sy = p.y + q.y + ry, sz = p.z + q.z + rz;
                    for (int sg : {1, -1}) {
                        const i64 ax_num = k * sx + sg * 2 * ex;
                        const i64 ay_num = k * sy + sg * 2 * ey;
                        const i64 az_num = k * sz + sg * 2 * ez;
                        const i64 den = 3 * k;
                        if (ax_num % den || ay_num % den || az_num % den) continue;
                        const i64 ax = ax_num / den, ay = ay_num / den, az = az_num / den;
                        if (ax < 0 || ax > n || ay < 0 || ay > n || az < 0 || az > n) continue;
                        ++local.apex_incidences;
                    }
                }
            }
        }
        partials[tid] = local;
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker, t);
        for (auto& th : pool)
            th.join();
    }

    PairScanTotals total;
    for (const auto& part : partials) {
        total.triangle_incidences += part.triangle_incidences;
        total.apex_incidences += part.apex_incidences;
    }
    return total;
}

} // namespace

CountResult count_et(const GridSpec& g, int threads) {
    if (g.n < 0)
        throw std::invalid_argument("count_et requires n >= 0");
    auto t0 = Clock::now();
    auto totals = pair_scan(g.n, threads, /*with_apexes=*/false);
    if (totals.triangle_incidences % 3 != 0)
        throw std::logic_error("triangle incidence total not divisible by 3");
    CountResult out;
    out.n = g.n;
    out.count = totals.triangle_incidences / 3;
    out.method = "pair-scan";
    out.elapsed = Clock::now() - t0;
    out.threads = std::max(1, threads);
    return out;
}

CountResult count_rt(const GridSpec& g, int threads) {
    if (g.n < 0)
        throw std::invalid_argument("count_rt requires n >= 0");
    auto t0 = Clock::now();
    auto totals = pair_scan(g.n, threads, /*with_apexes=*/true);
    if (totals.apex_incidences % 4 != 0)
        throw std::logic_error("apex incidence total not divisible by 4");
    CountResult out;
    out.n = g.n;
    out.count = totals.apex_incidences / 4;
    out.method = "pair-scan";
    out.elapsed = Clock::now() - t0;
    out.threads = std::max(1, threads);
    return out;
}

CountResult count_et_bruteforce(const GridSpec& g, int cap) {
    if (g.n < 0)
        throw std::invalid_argument("count_et_bruteforce requires n >= 0");
    if (g.n > cap)
        throw std::invalid_argument("count_et_bruteforce: n exceeds the cap of " +
                                    std::to_string(cap));
    auto t0 = Clock::now();
    const auto pts = grid_points(g.n);
    const int npts = static_cast<int>(pts.size());
    i64 count = 0;
    for (int i = 0; i < npts; ++i)
        for (int j = i + 1; j < npts; ++j) {
            const i64 s = dist2(pts[i], pts[j]);
            for (int k = j + 1; k < npts; ++k)
                if (dist2(pts[i], pts[k]) == s && dist2(pts[j], pts[k]) == s)
                    ++count;
        }
    CountResult out;
    out.n = g.n;
    out.count = count;
    out.method = "brute-force";
    out.elapsed = Clock::now() - t0;
    return out;
}

CountResult count_rt_bruteforce(const GridSpec& g, int cap) {
    if (g.n < 0)
        throw std::invalid_argument("count_rt_bruteforce requires n >= 0");
    if (g.n > cap)
        throw std::invalid_argument("count_rt_bruteforce: n exceeds the cap of " +
                                    std::to_string(cap));
    auto t0 = Clock::now();
    CountResult out;
    out.n = g.n;
    out.count = static_cast<i64>(enumerate_tetrahedra_bruteforce(g, cap).size());
    out.method = "brute-force";
    out.elapsed = Clock::now() - t0;
    return out;
}

std::vector<LatticeTriangle> enumerate_triangles_bruteforce(const GridSpec& g, int cap) {
    if (g.n < 0 || g.n > cap)
        throw std::invalid_argument("enumerate_triangles_bruteforce: n out of range");
    const auto pts = grid_points(g.n);
    const int npts = static_cast<int>(pts.size());
    std::vector<LatticeTriangle> out;
    for (int i = 0; i < npts; ++i)
        for (int j = i + 1; j < npts; ++j) {
            const i64 s = dist2(pts[i], pts[j]);
            for (int k = j + 1; k < npts; ++k)
                if (dist2(pts[i], pts[k]) == s && dist2(pts[j], pts[k]) == s)
                    out.push_back(LatticeTriangle{{pts[i], pts[j], pts[k]}, s});
        }
    return out;
}

std::vector<LatticeTetrahedron> enumerate_tetrahedra_bruteforce(const GridSpec& g, int cap) {
    if (g.n < 0 || g.n > cap)
        throw std::invalid_argument("enumerate_tetrahedra_bruteforce: n out of range");
    const auto pts = grid_points(g.n);
    const int npts = static_cast<int>(pts.size());
    std::vector<LatticeTetrahedron> out;
    for (int i = 0; i < npts; ++i)
        for (int j = i + 1; j < npts; ++j) {
            const i64 s = dist2(pts[i], pts[j]);
            for (int k = j + 1; k < npts; ++k) {
                if (dist2(pts[i], pts[k]) != s || dist2(pts[j], pts[k]) != s) continue;
                for (int l = k + 1; l < npts; ++l)
                    if (dist2(pts[i], pts[l]) == s && dist2(pts[j], pts[l]) == s &&
                        dist2(pts[k], pts[l]) == s)
                        out.push_back(LatticeTetrahedron{{pts[i], pts[j], pts[k], pts[l]}, s});
            }
        }
    return out;
}

int SignedPermutation::det() const {
    // parity of the permutation times the product of signs
    int parity = 1;
    if (perm[0] != 0 || perm[1] != 1) {
        bool even = (perm[0] == 0 && perm[1] == 1) || (perm[0] == 1 && perm[1] == 2) ||
                    (perm[0] == 2 && perm[1] == 0);
        parity = even ? 1 : -1;
    }
    return parity * sign[0] * sign[1] * sign[2];
}

const std::array<SignedPermutation, 48>& all_signed_permutations() {
    static const std::array<SignedPermutation, 48> table = [] {
        std::array<SignedPermutation, 48> t;
        const std::array<std::array<int, 3>, 6> perms = {
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        int idx = 0;
        for (const auto& p : perms)
            for (int sm = 0; sm < 8; ++sm)
                t[idx++] = SignedPermutation{p,
                                             {(sm & 1) ? -1 : 1, (sm & 2) ? -1 : 1,
                                              (sm & 4) ? -1 : 1}};
        return t;
    }();
    return table;
}

namespace {

using VertexTriple = std::array<LatticePoint, 3>;

VertexTriple sorted_triple(LatticePoint a, LatticePoint b, LatticePoint c) {
    VertexTriple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

VertexTriple min_image_under_48(const VertexTriple& t) {
    VertexTriple best;
    bool first = true;
    for (const auto& g : all_signed_permutations()) {
        VertexTriple img = sorted_triple(g.apply(t[0]), g.apply(t[1]), g.apply(t[2]));
        if (first || img < best) { best = img; first = false; }
    }
    return best;
}

VertexTriple min_image_anchored(const VertexTriple& t) {
    VertexTriple best = min_image_under_48(t);
    const std::array<LatticePoint, 4> vs = {LatticePoint{0, 0, 0}, t[0], t[1], t[2]};
    for (int anchor = 1; anchor < 4; ++anchor) {
        VertexTriple u;
        int k = 0;
        for (int v = 0; v < 4; ++v) {
            if (v == anchor) continue;
            u[k++] = vs[v] - vs[anchor];
        }
        VertexTriple img = min_image_under_48(u);
        if (img < best) best = img;
    }
    return best;
}

/// Every origin-anchored regular tetrahedron of squared side 2k^2, as the
/// sorted triple of its non-origin vertices.
std::set<VertexTriple> origin_tetras(i64 k) {
    if (k < 1)
        throw std::invalid_argument("origin tetra search requires k >= 1");
    const i64 ss = checked_mul(2, checked_mul(k, k));
    const auto sphere = sphere_points(ss);
    const int npts = static_cast<int>(sphere.size());
    std::set<VertexTriple> tetras;
    for (int i = 0; i < npts; ++i)
        for (int j = i + 1; j < npts; ++j) {
            if (dist2(sphere[i], sphere[j]) != ss) continue;
            auto tri = validate_triangle(LatticePoint{0, 0, 0}, sphere[i], sphere[j]);
            if (!tri) continue;
            for (const auto& apex : tetra_apexes(*tri))
                tetras.insert(sorted_triple(sphere[i], sphere[j], apex));
        }
    return tetras;
}

std::vector<TetraOrbit> classify(const std::set<VertexTriple>& tetras,
                                 VertexTriple (*canon)(const VertexTriple&), i64 sq_side) {
    std::map<VertexTriple, i64> classes;
    for (const auto& t : tetras)
        classes[canon(t)] += 1;
    std::vector<TetraOrbit> out;
    out.reserve(classes.size());
    for (const auto& [rep, size] : classes) {
        LatticeTetrahedron tet{{LatticePoint{0, 0, 0}, rep[0], rep[1], rep[2]}, sq_side};
        out.push_back(TetraOrbit{tet, size});
    }
    return out;
}

} // namespace

std::vector<TetraOrbit> origin_tetra_orbits(i64 k) {
    return classify(origin_tetras(k), &min_image_under_48, 2 * k * k);
}

std::vector<TetraOrbit> origin_tetra_congruence_classes(i64 k) {
    return classify(origin_tetras(k), &min_image_anchored, 2 * k * k);
}

ProbeReport conjecture_probe(i64 d_bound, i64 mn_range) {
    if (d_bound < 1 || mn_range < 1)
        throw std::invalid_argument("conjecture_probe requires positive bounds");
    ProbeReport report;
    for (i64 d = 1; d <= d_bound; d += 2) {
        for (const auto& plane : primitive_solutions(d)) {
            TriangleFamily fam = build_family(plane);
            for (i64 m = -mn_range; m <= mn_range; ++m)
                for (i64 n = -mn_range; n <= mn_range; ++n) {
                    if (m == 0 && n == 0) continue;
                    const i64 norm = m * m - m * n + n * n;
                    const i64 root = isqrt(norm);
                    if (root * root != norm) continue;
                    ProbeCase pc;
                    pc.plane = plane;
                    pc.m = m;
                    pc.n = n;
                    pc.norm = norm;
                    pc.side_root = d * root;
                    auto apexes = tetra_apexes(emit_triangle(fam, FamilyPoint{m, n}));
                    pc.apex_found = !apexes.empty();
                    if (pc.apex_found) pc.apex = apexes.front();
                    else report.counterexamples += 1;
                    report.cases.push_back(pc);
                }
        }
    }
    return report;
}

std::vector<PlaneNormal> orbit_expand(const PlaneClass& p) {
    const LatticePoint base{p.a, p.b, p.c};
    std::set<std::array<i64, 3>> seen;
    for (const auto& g : all_signed_permutations()) {
        LatticePoint img = g.apply(base);
        i64 lead = img.x != 0 ? img.x : (img.y != 0 ? img.y : img.z);
        if (lead < 0) img = LatticePoint{0, 0, 0} - img;
        seen.insert({img.x, img.y, img.z});
    }
    std::vector<PlaneNormal> out;
    out.reserve(seen.size());
    for (const auto& v : seen)
        out.push_back(PlaneNormal{v[0], v[1], v[2], p.d});
    return out;
}

} // namespace trilat
