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
#include <utility>
#include <vector>

#include "trilat/ints.hpp"

namespace trilat {

struct PrimePower {
    i64 prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Exact prime factorization: value == product of prime^exponent,
/// primes strictly increasing, every exponent >= 1.
struct Factorization {
    i64 value = 1;
    std::vector<PrimePower> factors;

    int exponent_of(i64 p) const;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division up to sqrt(t). Deterministic; rejects t < 1.
Factorization factorize(i64 t);

/// Witness for t = m^2 - m*n + n^2.
///
/// Note on conventions: m^2 + m*n + n^2 represents exactly the same value set
/// (substitute n -> -n), so witnesses for one form convert to the other by a
/// sign flip. This library uses m^2 - m*n + n^2 throughout.
struct NormRepresentation {
    i64 m = 0;
    i64 n = 0;
    i64 value = 0;
    friend bool operator==(const NormRepresentation&, const NormRepresentation&) = default;
};

/// True iff t = m^2 - m*n + n^2 for some integers m, n, decided by the
/// factorization criterion: 2 and every prime congruent to 5 (mod 6) must
/// appear to an even exponent.
bool is_eisenstein_norm(i64 t);

/// Search for a witness with 0 <= n <= m <= ceil(2*sqrt(t/3)); that region
/// contains a representative of every representable value because the form's
/// symmetry group ((m,n) -> (n,m), (m,n) -> (m-n,-n), negation) folds any
/// witness into it, and on it the form is bounded below by (3/4)*m^2.
std::optional<NormRepresentation> represent_eisenstein_norm(i64 t);

/// The three predicates tied together by the two-squares / twice-a-norm
/// equivalence on numbers of the form 3x^2 - y^2. Each is evaluated
/// independently so the equivalence itself stays testable.
struct QuadraticFormTriple {
    bool has_3x2_minus_y2 = false;   // witness found with x <= the search bound
    bool sum_of_two_squares = false; // factorization criterion
    bool twice_eisenstein_norm = false;
};

/// Bounded search for t = 3x^2 - y^2, x in [ceil(sqrt(t/3)), x_bound].
/// Absence of a witness within the bound is not a proof of unsolvability.
std::optional<std::pair<i64, i64>> find_3x2_minus_y2(i64 t, i64 x_bound);

/// Factorization criterion: primes congruent to 3 (mod 4) to even exponents.
bool is_sum_of_two_squares(i64 t);

/// Evaluate all three predicates for t >= 1. x_bound == 0 selects a default
/// search bound of 4*sqrt(t)+4.
QuadraticFormTriple quadratic_form_triple(i64 t, i64 x_bound = 0);

/// Witness for s^2 + 3*r^2 = 2*q. r and s always have the same parity.
struct RsRepresentation {
    i64 r = 0;
    i64 s = 0;
    i64 q = 0;
    friend bool operator==(const RsRepresentation&, const RsRepresentation&) = default;
};

/// All (r,s) with s^2 + 3r^2 = 2q satisfying both congruences
///   A*r + B*s == 0 (mod 2q)   and   A*s - 3*B*r == 0 (mod 2q),
/// in deterministic order: |r| ascending, then sign pattern
/// (+,+), (+,-), (-,+), (-,-).
std::vector<RsRepresentation> rs_candidates(i64 q, i64 A, i64 B);

/// First rs_candidates(q, a*c, d*b) entry. The caller promises q = a^2 + b^2
/// with (a,b,c,d) solving a^2+b^2+c^2 = 3d^2; such a witness always exists,
/// so an empty candidate list is an internal error and throws.
RsRepresentation solve_rs(i64 q, i64 a, i64 b, i64 c, i64 d);

} // namespace trilat
