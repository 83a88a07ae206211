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

#include <doctest.h>

#include "quarc/angle.hpp"

using quarc::Angle;

TEST_CASE("angle normalization") {
  CHECK(Angle(10, 9) == Angle(1, 9));
  CHECK(Angle(3, 27) == Angle(1, 9));
  CHECK(Angle(-1, 9) == Angle(8, 9));
  CHECK(Angle(0, 5) == Angle::zero());
  CHECK(Angle(7, 7).is_zero());
  CHECK_THROWS_AS(Angle(1, 0), std::invalid_argument);
}

TEST_CASE("angle arithmetic is exact") {
  Angle a(1, 9), b(4, 9);
  CHECK(a + b == Angle(5, 9));
  CHECK(a - b == Angle(6, 9));
  CHECK(-a == Angle(8, 9));
  CHECK(a * 3 == Angle(1, 3));
  CHECK(Angle(1, 3) / 3 == a);
  // mean of d angles stays rational
  Angle mean = (Angle(1, 9) + Angle(2, 9) + Angle::zero()) / 3;
  CHECK(mean == Angle(1, 9));
  // denominators around d^q for large q stay exact in 128 bits
  Angle tiny(1, Angle::Int(3));
  for (int i = 0; i < 69; ++i) tiny = tiny / 3;
  CHECK(tiny + tiny == Angle(2, tiny.den()));
}

TEST_CASE("angle trigonometric values") {
  CHECK(Angle(1, 4).unit().real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(Angle(1, 4).unit().imag() == doctest::Approx(1.0));
  CHECK(Angle(1, 2).unit().real() == doctest::Approx(-1.0));
  CHECK(Angle(1, 8).unit_half().imag() == doctest::Approx(std::sin(M_PI / 8)));
  CHECK(Angle(1, 2).is_half_turn());
  CHECK_FALSE(Angle(1, 3).is_half_turn());
  // symmetric representative makes a and -a matrix inverses
  CHECK(Angle(8, 9).unit_half() ==
        std::conj(Angle(1, 9).unit_half()));
}

TEST_CASE("angle parse and print round-trip") {
  Angle a = Angle::parse("-5/27");
  CHECK(a == Angle(22, 27));
  CHECK(Angle(1, 9).str() == "1/9");
  CHECK(Angle::parse(Angle(7, 16).str()) == Angle(7, 16));
  CHECK_THROWS(Angle::parse("1.5"));
  CHECK_THROWS(Angle::parse("3/0"));
  CHECK_THROWS(Angle::parse("x/2"));
}
