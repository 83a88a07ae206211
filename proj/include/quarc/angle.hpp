// Copyright 2026 The quarc developers
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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace quarc {

/**
 * Exact rotation angle, stored as a rational fraction of a full turn:
 * the represented angle is 2*pi*num/den radians.
 *
 * Always kept in reduced form with 0 <= num < den (angles identified
 * mod 2*pi). All angles occurring in the circuit constructions are of
 * the form 2*pi*m/d^k, so arithmetic (sum, negation, integer scaling,
 * exact division) never leaves the rationals. 128-bit storage covers
 * denominators up to ~d^70, which the resource-estimation sweeps need.
 */
class Angle {
 public:
  using Int = __int128;

  Angle() : num_(0), den_(1) {}
  Angle(Int num, Int den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Angle: zero denominator");
    normalize();
  }

  static Angle zero() { return Angle(); }
  /// 2*pi*num/den, e.g. turn(1, 8) is pi/4.
  static Angle turn(Int num, Int den) { return Angle(num, den); }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  bool operator==(const Angle& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Angle& o) const { return !(*this == o); }

  Angle operator-() const { return Angle(-num_, den_); }

  Angle operator+(const Angle& o) const {
    // lcm-based accumulation: both denominators are d-power-smooth in
    // practice, so the lcm stays near max(den, o.den) and cannot blow
    // past 128 bits the way den*o.den would.
    Int g = gcd128(den_, o.den_);
    Int l = den_ / g * o.den_;
    return Angle(num_ * (l / den_) + o.num_ * (l / o.den_), l);
  }
  Angle operator-(const Angle& o) const { return *this + (-o); }

  /// Integer multiple of the angle.
  Angle operator*(Int k) const { return Angle(num_ * k, den_); }
  /// Exact division of the turn fraction by a positive integer.
  Angle operator/(Int k) const {
    if (k <= 0) throw std::invalid_argument("Angle: divide by non-positive");
    return Angle(num_, den_ * k);
  }

  double radians() const {
    return 2.0 * pi() * static_cast<double>(num_) / static_cast<double>(den_);
  }
  /// exp(i * angle)
  std::complex<double> unit() const {
    return std::polar(1.0, radians());
  }
  /// Symmetric representative in (-1/2, 1/2] turns. Rotation matrices are
  /// 4*pi periodic, so the half-angle factors below must be evaluated on a
  /// fixed representative; the symmetric one makes R(a) and R(-a) exact
  /// matrix inverses for every a except the half turn.
  double turns_sym() const {
    double t = static_cast<double>(num_) / static_cast<double>(den_);
    return t > 0.5 ? t - 1.0 : t;
  }
  bool is_half_turn() const { return 2 * num_ == den_; }

  /// exp(i * angle / 2) on the symmetric representative.
  std::complex<double> unit_half() const {
    return std::polar(1.0, pi() * turns_sym());
  }
  /// Rotation half angle in radians, symmetric representative.
  double radians_sym_half() const { return pi() * turns_sym(); }

  /// "num/den" in decimal, for serialization.
  std::string str() const;
  /// Parses "p/q" (q > 0, p may be negative). Throws on malformed input.
  static Angle parse(const std::string& text);

  static Int gcd128(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      Int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

 private:
  static constexpr double pi() { return 3.14159265358979323846; }

  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      num_ = -num_;
    }
    num_ %= den_;
    if (num_ < 0) num_ += den_;
    Int g = gcd128(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

std::string int128_to_string(__int128 v);
__int128 int128_from_string(const std::string& s);

}  // namespace quarc
