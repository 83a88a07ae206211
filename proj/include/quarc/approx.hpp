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

#include <array>
#include <string>

#include "quarc/matrices.hpp"

namespace quarc {

using Mat2 = Eigen::Matrix2cd;

/// d x d identity with the 2x2 unitary v placed at rows/cols (j,k).
/// Throws if v is not unitary to 1e-10.
CMat embed_two_level(int d, int j, int k, const Mat2& v);

/// V_z(theta) = diag(e^{-i theta/2}, e^{i theta/2}).
Mat2 vz_matrix(const Angle& theta);
/// Global-phase-minimized spectral distance sqrt(2 - |tr(V^dag U)|).
double phase_distance(const Mat2& u, const Mat2& v);

struct ApproxResult {
  std::string word;  // temporal order, 'H' and 'T' letters
  double error = 0.0;
  int length = 0;
  /// best error over all words of length <= l, index l (0 = empty word)
  std::vector<double> curve;
};

inline constexpr int kMaxSearchLen = 24;

/**
 * Exhaustive search over canonical words in {H,T} (no adjacent H pairs,
 * T runs capped at 7) of length <= max_len, minimizing phase_distance to
 * V_z(theta). Deterministic tie-breaking: shortest word first, then
 * lexicographic. Stops expanding once target_err is reached.
 */
ApproxResult approx_vz(const Angle& theta, int max_len,
                       double target_err = 0.0);

/// Word product as a 2x2 matrix (temporal order).
Mat2 word_matrix(const std::string& word);

/// Approximates an R_z or R_x two-level gate by H^{(jk)}/T^{(jk)} gates
/// (R_x conjugated by an extra H^{(jk)} pair). The reported error is the
/// 2x2 subproblem distance.
struct GateApprox {
  std::vector<GateSpec> gates;
  ApproxResult result;
};
GateApprox approx_rot_gate(const GateSpec& g, int max_len,
                           double target_err = 0.0);

/// Discrete library size (3+d) d(d-1)/2 + 1.
long long library_size(int d);

}  // namespace quarc
