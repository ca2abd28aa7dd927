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

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace trilat {

using i64 = std::int64_t;
using i128 = __int128;

/// Thrown when an exact integer computation would leave the 64-bit range.
/// All arithmetic in this library is exact; overflow is an error, never wraparound.
class OverflowError : public std::runtime_error {
  public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer addition overflow");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer subtraction overflow");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer multiplication overflow");
    return r;
}

/// Narrow a 128-bit value back to 64 bits, or throw.
inline i64 narrow(i128 v) {
    if (v > i128(std::numeric_limits<i64>::max()) || v < i128(std::numeric_limits<i64>::min()))
        throw OverflowError("value does not fit in 64 bits");
    return static_cast<i64>(v);
}

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Floor of the square root of a nonnegative integer.
inline i64 isqrt(i64 v) {
    if (v < 0)
        throw std::invalid_argument("isqrt of negative value");
    if (v == 0)
        return 0;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

inline bool is_perfect_square(i64 v) {
    if (v < 0) return false;
    i64 r = isqrt(v);
    return r * r == v;
}

inline i64 gcd3(i64 a, i64 b, i64 c) {
    return std::gcd(std::gcd(a, b), c);
}

} // namespace trilat
