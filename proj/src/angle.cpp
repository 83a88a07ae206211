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

#include "quarc/angle.hpp"

#include <algorithm>

namespace quarc {

std::string int128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string out;
  while (u != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

__int128 int128_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("bare sign");
  unsigned __int128 u = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad digit in integer literal: " + s);
    u = u * 10 + static_cast<unsigned>(s[i] - '0');
  }
  return neg ? -static_cast<__int128>(u) : static_cast<__int128>(u);
}

std::string Angle::str() const {
  return int128_to_string(num_) + "/" + int128_to_string(den_);
}

Angle Angle::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("malformed rational (no '/'): " + text);
  Int n = int128_from_string(text.substr(0, slash));
  Int d = int128_from_string(text.substr(slash + 1));
  if (d <= 0) throw std::invalid_argument("malformed rational (den<=0): " + text);
  return Angle(n, d);
}

}  // namespace quarc
