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

#include <string>

#include "trilat/ints.hpp"

namespace trilat {

/// Exact rational number. Always stored reduced with a positive denominator.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(i64 value) : num_(value), den_(1) {} // NOLINT: implicit by design
    Rational(i64 num, i64 den) { assign(num, den); }

    i64 numerator() const { return num_; }
    i64 denominator() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    i64 to_integer() const {
        if (!is_integer())
            throw std::logic_error("rational " + str() + " is not an integer");
        return num_;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw std::domain_error("rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    void assign(i64 num, i64 den) {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        i128 n = num, d = den;
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = narrow(n);
        den_ = narrow(d);
    }
    static Rational from128(i128 n, i128 d) {
        if (d == 0)
            throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    i64 num_;
    i64 den_;
};

/// A point with exact rational coordinates.
struct RationalPoint {
    Rational x, y, z;

    bool is_lattice_point() const { return x.is_integer() && y.is_integer() && z.is_integer(); }

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

} // namespace trilat
