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

#include "trilat/families.hpp"

#include <numeric>

namespace trilat {

TriangleFamily family_d1() {
    TriangleFamily f;
    f.plane = PlaneClass{1, 1, 1, 1};
    // P = (m, -n, n-m), Q = (m-n, -m, n)
    f.coeffs = FamilyCoefficients{
        /*m_u*/ 1, /*m_v*/ 0, /*m_w*/ -1,
        /*n_u*/ 0, /*n_v*/ 1, /*n_w*/ -1,
        /*m_x*/ 1, /*m_y*/ -1, /*m_z*/ 0,
        /*n_x*/ 1, /*n_y*/ 0,  /*n_z*/ -1,
    };
    f.rs = std::nullopt;
    f.pivot = 2;
    return f;
}

TriangleFamily family_small(i64 d, int which) {
    TriangleFamily f;
    f.rs = std::nullopt;
    f.pivot = 2;
    if (d == 3 && which == 1) {
        f.plane = PlaneClass{1, 1, 5, 3};
        // P = (4m-3n, m+3n, -m), Q = (3m+n, -3m+4n, -n)
        f.coeffs = {4, 1, -1, 3, -3, 0, 3, -3, 0, -1, -4, 1};
    } else if (d == 5 && which == 1) {
        f.plane = PlaneClass{1, 5, 7, 5};
        // P = (7m-4n, 5n, -m-3n), Q = (3m-7n, 5m, -4m+n)
        f.coeffs = {7, 0, -1, 4, -5, 3, 3, 5, -4, 7, 0, -1};
    } else if (d == 7 && which == 1) {
        f.plane = PlaneClass{1, 5, 11, 7};
        // P = (8m-9n, 5m+4n, -3m-n), Q = (-m-8n, 9m-5n, -4m+3n)
        f.coeffs = {8, 5, -3, 9, -4, 1, -1, 9, -4, 8, 5, -3};
    } else if (d == 9 && which == 1) {
        f.plane = PlaneClass{1, 11, 11, 9};
        // P = (11m-11n, 4m+5n, -5m-4n), Q = (-11n, 9m-4n, -9m+5n)
        f.coeffs = {11, 4, -5, 11, -5, 4, 0, 9, -9, 11, 4, -5};
    } else if (d == 9 && which == 2) {
        f.plane = PlaneClass{5, 7, 13, 9};
        // P = (7m+5n, 8m-11n, -7m+4n), Q = (12m-7n, -3m-8n, -3m+7n)
        f.coeffs = {7, 8, -7, -5, 11, -4, 12, -3, -3, 7, 8, -7};
    } else {
        throw std::invalid_argument("family_small: valid (d,which) are (3,1), (5,1), (7,1), "
                                    "(9,1), (9,2)");
    }
    return f;
}

bool family_identities_hold(const TriangleFamily& f) {
    const auto& k = f.coeffs;
    const i128 a = f.plane.a, b = f.plane.b, c = f.plane.c;
    const i128 two_d2 = 2 * i128(f.plane.d) * f.plane.d;
    const i128 d2 = i128(f.plane.d) * f.plane.d;
    auto sq = [](i128 x, i128 y, i128 z) { return x * x + y * y + z * z; };
    if (sq(k.m_x, k.m_y, k.m_z) != two_d2) return false;
    if (sq(k.n_x, k.n_y, k.n_z) != two_d2) return false;
    if (sq(k.m_u, k.m_v, k.m_w) != two_d2) return false;
    if (sq(k.n_u, k.n_v, k.n_w) != two_d2) return false;
    if (i128(k.m_x) * k.n_x + i128(k.m_y) * k.n_y + i128(k.m_z) * k.n_z != d2) return false;
    if (i128(k.m_u) * k.n_u + i128(k.m_v) * k.n_v + i128(k.m_w) * k.n_w != d2) return false;
    if (a * k.m_x + b * k.m_y + c * k.m_z != 0) return false;
    if (a * k.m_u + b * k.m_v + c * k.m_w != 0) return false;
    if (a * k.n_x + b * k.n_y + c * k.n_z != 0) return false;
    if (a * k.n_u + b * k.n_v + c * k.n_w != 0) return false;
    return true;
}

namespace {

// Coefficients in the pivoted frame, or nothing if a division is inexact.
std::optional<FamilyCoefficients> coefficients_for(i64 ra, i64 rb, i64 rc, i64 d, i64 q,
                                                   i64 r, i64 s) {
    auto div_exact = [](i128 num, i128 den) -> std::optional<i64> {
        if (num % den != 0) return std::nullopt;
        return narrow(num / den);
    };
    const i128 ac = i128(ra) * rc, db = i128(d) * rb;
    const i128 da = i128(d) * ra, bc = i128(rb) * rc;

    FamilyCoefficients k;
    std::optional<i64> v;

    if (!(v = div_exact(-(db * (3 * r + s) + ac * (r - s)), 2 * i128(q)))) return std::nullopt;
    k.m_x = *v;
    if (!(v = div_exact(-(ac * r + db * s), q))) return std::nullopt;
    k.n_x = *v;
    if (!(v = div_exact(da * (3 * r + s) - bc * (r - s), 2 * i128(q)))) return std::nullopt;
    k.m_y = *v;
    if (!(v = div_exact(da * s - bc * r, q))) return std::nullopt;
    k.n_y = *v;
    if (!(v = div_exact(i128(r) - s, 2))) return std::nullopt;
    k.m_z = *v;
    k.n_z = r;

    if (!(v = div_exact(-(ac * r + db * s), q))) return std::nullopt;
    k.m_u = *v;
    if (!(v = div_exact(-(db * (s - 3 * r) + ac * (r + s)), 2 * i128(q)))) return std::nullopt;
    k.n_u = *v;
    if (!(v = div_exact(da * s - bc * r, q))) return std::nullopt;
    k.m_v = *v;
    if (!(v = div_exact(da * (s - 3 * r) - bc * (r + s), 2 * i128(q)))) return std::nullopt;
    k.n_v = *v;
    k.m_w = r;
    if (!(v = div_exact(i128(r) + s, 2))) return std::nullopt;
    k.n_w = *v;

    return k;
}

// Map a coefficient set computed in the pivoted frame (role coordinates
// u,v,w = positions i1,i2,pivot) back to original coordinate order.
FamilyCoefficients unpivot(const FamilyCoefficients& k, int i1, int i2, int pivot) {
    auto place = [&](i64 roles[3], i64 r1, i64 r2, i64 r3) {
        roles[i1] = r1;
        roles[i2] = r2;
        roles[pivot] = r3;
    };
    i64 mu[3], nu[3], mx[3], nx[3];
    place(mu, k.m_u, k.m_v, k.m_w);
    place(nu, k.n_u, k.n_v, k.n_w);
    place(mx, k.m_x, k.m_y, k.m_z);
    place(nx, k.n_x, k.n_y, k.n_z);
    return FamilyCoefficients{mu[0], mu[1], mu[2], nu[0], nu[1], nu[2],
                              mx[0], mx[1], mx[2], nx[0], nx[1], nx[2]};
}

} // namespace

TriangleFamily build_family(const PlaneClass& p) {
    const i64 vals[3] = {p.a, p.b, p.c};
    bool pivot_found = false;
    for (int pivot : {2, 1, 0}) {
        if (std::gcd(p.d, vals[pivot]) != 1) continue;
        pivot_found = true;
        const int i1 = pivot == 0 ? 1 : 0;
        const int i2 = pivot == 2 ? 1 : 2;
        const i64 ra = vals[i1], rb = vals[i2], rc = vals[pivot];
        const i64 q = checked_add(checked_mul(ra, ra), checked_mul(rb, rb));
        for (const auto& rs : rs_candidates(q, checked_mul(ra, rc), checked_mul(p.d, rb))) {
            auto k = coefficients_for(ra, rb, rc, p.d, q, rs.r, rs.s);
            if (!k) continue;
            TriangleFamily f;
            f.plane = p;
            f.coeffs = unpivot(*k, i1, i2, pivot);
            f.rs = rs;
            f.pivot = pivot;
            if (!family_identities_hold(f))
                continue;
            return f;
        }
    }
    if (!pivot_found)
        throw GcdPivotError(p);
    throw std::logic_error("no (r,s) witness produced an integral coefficient set; "
                           "inputs violate the construction's contract");
}

LatticeTriangle emit_triangle(const TriangleFamily& f, const FamilyPoint& pt) {
    if (pt.m == 0 && pt.n == 0)
        throw std::invalid_argument("emit_triangle requires (m,n) != (0,0)");
    const auto& k = f.coeffs;
    auto coord = [&](i64 mc, i64 nc) {
        return checked_sub(checked_mul(mc, pt.m), checked_mul(nc, pt.n));
    };
    LatticePoint p{coord(k.m_u, k.n_u), coord(k.m_v, k.n_v), coord(k.m_w, k.n_w)};
    LatticePoint q{coord(k.m_x, k.n_x), coord(k.m_y, k.n_y), coord(k.m_z, k.n_z)};
    auto tri = validate_triangle(LatticePoint{0, 0, 0}, p, q);
    if (!tri)
        throw std::logic_error("family evaluation produced a non-equilateral triangle");
    i128 expected = 2 * i128(f.plane.d) * f.plane.d *
                    (i128(pt.m) * pt.m - i128(pt.m) * pt.n + i128(pt.n) * pt.n);
    if (i128(tri->sq_side) != expected)
        throw std::logic_error("family evaluation produced an unexpected side length");
    return *tri;
}

std::optional<FamilyPoint> membership(const TriangleFamily& f, const LatticeTriangle& t) {
    int origin_at = -1;
    for (int i = 0; i < 3; ++i)
        if (t.vertices[i].is_origin()) { origin_at = i; break; }
    if (origin_at < 0)
        throw std::invalid_argument("membership requires a triangle anchored at the origin");
    const LatticePoint in_plane[2] = {t.vertices[(origin_at + 1) % 3],
                                      t.vertices[(origin_at + 2) % 3]};
    const LatticePoint abc{f.plane.a, f.plane.b, f.plane.c};
    for (const auto& v : in_plane)
        if (dot(abc, v) != 0)
            throw std::invalid_argument("triangle vertex is not in the family's plane");

    const auto& k = f.coeffs;
    const i64 mrow[3] = {k.m_u, k.m_v, k.m_w};
    const i64 nrow[3] = {k.n_u, k.n_v, k.n_w};
    const i64 qm[3] = {k.m_x, k.m_y, k.m_z};
    const i64 qn[3] = {k.n_x, k.n_y, k.n_z};

    for (int ordering = 0; ordering < 2; ++ordering) {
        const LatticePoint& pv = in_plane[ordering];
        const LatticePoint& qv = in_plane[1 - ordering];
        const i64 rhs[3] = {pv.x, pv.y, pv.z};
        // solve (m_i * m - n_i * n = rhs_i) from the first row pair with a
        // nonzero determinant; at least one exists since the coefficient
        // cross products are d*(a,b,c) up to sign and a,b,c,d are nonzero
        for (const auto& [r0, r1] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            i128 det = i128(mrow[r0]) * (-nrow[r1]) - i128(-nrow[r0]) * mrow[r1];
            if (det == 0) continue;
            i128 m_num = i128(rhs[r0]) * (-nrow[r1]) - i128(-nrow[r0]) * rhs[r1];
            i128 n_num = i128(mrow[r0]) * rhs[r1] - i128(rhs[r0]) * mrow[r1];
            if (m_num % det != 0 || n_num % det != 0) break;
            i64 m = narrow(m_num / det), n = narrow(n_num / det);
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
                if (i128(mrow[i]) * m - i128(nrow[i]) * n != rhs[i]) ok = false;
            }
            const i64 qrhs[3] = {qv.x, qv.y, qv.z};
            for (int i = 0; i < 3 && ok; ++i) {
                if (i128(qm[i]) * m - i128(qn[i]) * n != qrhs[i]) ok = false;
            }
            if (ok)
                return FamilyPoint{m, n};
            break; // the solution of the P system is unique; try the other ordering
        }
    }
    return std::nullopt;
}

} // namespace trilat
