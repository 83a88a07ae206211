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

#include "quarc/approx.hpp"

#include <cmath>
#include <stdexcept>

namespace quarc {

namespace {

Mat2 h2() {
  Mat2 m;
  double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

Mat2 t2() {
  Mat2 m;
  m << 1, 0, 0, std::polar(1.0, M_PI / 4);
  return m;
}

constexpr int kMaxTRun = 7;

struct Node {
  Mat2 u;
  std::string word;
  char last;   // 'H', 'T' or 0 for the empty word
  int t_run;
};

}  // namespace

CMat embed_two_level(int d, int j, int k, const Mat2& v) {
  if (!(0 <= j && j < k && k < d))
    throw std::invalid_argument("embed_two_level: need 0 <= j < k < d");
  Mat2 p = v.adjoint() * v;
  p -= Mat2::Identity();
  if (p.cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("embed_two_level: v is not unitary");
  CMat u = CMat::Identity(d, d);
  u(j, j) = v(0, 0);
  u(j, k) = v(0, 1);
  u(k, j) = v(1, 0);
  u(k, k) = v(1, 1);
  return u;
}

Mat2 vz_matrix(const Angle& theta) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = std::conj(theta.unit_half());
  m(1, 1) = theta.unit_half();
  return m;
}

namespace {

double spectral_norm_2x2(const Mat2& m) {
  // singular values from the eigenvalues of m^dag m
  Mat2 p = m.adjoint() * m;
  double tr = p.trace().real();
  double det = std::max(0.0, p.determinant().real());
  double disc = std::max(0.0, tr * tr - 4.0 * det);
  return std::sqrt(std::max(0.0, (tr + std::sqrt(disc)) / 2.0));
}

}  // namespace

double phase_distance(const Mat2& u, const Mat2& v) {
  // Minimizing phi in ||u - e^{i phi} v||_2: with E = v^dag u unitary the
  // optimum is half the phase of det(E), up to a pi ambiguity resolved by
  // the sign of the det-normalized trace. The residual is evaluated
  // entrywise, so exact hits come out at roundoff level rather than at
  // sqrt(roundoff).
  Mat2 e = v.adjoint() * u;
  double half_det = std::arg(e.determinant()) / 2.0;
  double best = std::numeric_limits<double>::infinity();
  for (double phi : {half_det, half_det + M_PI}) {
    Mat2 diff = u - std::polar(1.0, phi) * v;
    best = std::min(best, spectral_norm_2x2(diff));
  }
  return best;
}

Mat2 word_matrix(const std::string& word) {
  Mat2 u = Mat2::Identity();
  for (char c : word) {
    if (c == 'H')
      u = h2() * u;
    else if (c == 'T')
      u = t2() * u;
    else
      throw std::invalid_argument("word_matrix: letters must be H or T");
  }
  return u;
}

ApproxResult approx_vz(const Angle& theta, int max_len, double target_err) {
  if (max_len < 0 || max_len > kMaxSearchLen)
    throw std::invalid_argument("approx_vz: max_len out of [0, 24]");
  const Mat2 target = vz_matrix(theta);
  const Mat2 H = h2(), T = t2();

  ApproxResult best;
  best.word = "";
  best.length = 0;
  best.error = phase_distance(Mat2::Identity(), target);
  best.curve.push_back(best.error);

  std::vector<Node> frontier;
  frontier.push_back(Node{Mat2::Identity(), "", 0, 0});

  for (int len = 1; len <= max_len; ++len) {
    if (best.error <= target_err) break;
    std::vector<Node> next;
    next.reserve(frontier.size() * 2);
    for (const Node& n : frontier) {
      // lexicographic: H before T
      if (n.last != 'H') {
        Node h{H * n.u, n.word + 'H', 'H', 0};
        double e = phase_distance(h.u, target);
        if (e < best.error - 1e-15) {
          best.error = e;
          best.word = h.word;
          best.length = len;
        }
        next.push_back(std::move(h));
      }
      if (n.t_run < kMaxTRun) {
        Node t{T * n.u, n.word + 'T', 'T', n.t_run + 1};
        double e = phase_distance(t.u, target);
        if (e < best.error - 1e-15) {
          best.error = e;
          best.word = t.word;
          best.length = len;
        }
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
    best.curve.push_back(best.error);
  }
  while (static_cast<int>(best.curve.size()) <= max_len)
    best.curve.push_back(best.error);
  return best;
}

GateApprox approx_rot_gate(const GateSpec& g, int max_len, double target_err) {
  if (g.kind != GateKind::RZ && g.kind != GateKind::RX)
    throw std::invalid_argument("approx_rot_gate: expected an R_z or R_x gate");
  GateApprox out;
  out.result = approx_vz(g.angles.at(0), max_len, target_err);
  int q = g.qudits.at(0);
  auto push_word = [&] {
    for (char c : out.result.word) {
      if (c == 'H')
        out.gates.push_back(g_hjk(q, g.j, g.k));
      else
        out.gates.push_back(g_tjk(q, g.j, g.k));
    }
  };
  if (g.kind == GateKind::RX) out.gates.push_back(g_hjk(q, g.j, g.k));
  push_word();
  if (g.kind == GateKind::RX) out.gates.push_back(g_hjk(q, g.j, g.k));
  return out;
}

long long library_size(int d) {
  if (d < 2) throw std::invalid_argument("library_size: d must be >= 2");
  return (3LL + d) * d * (d - 1) / 2 + 1;
}

}  // namespace quarc
