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

#include "quarc/matrices.hpp"

#include <cmath>
#include <stdexcept>

namespace quarc {

double unitarity_defect(const CMat& u) {
  CMat p = u.adjoint() * u;
  p -= CMat::Identity(u.rows(), u.cols());
  return p.cwiseAbs().maxCoeff();
}

double max_entry_diff(const CMat& a, const CMat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

namespace gates {
namespace {

constexpr double kUnitaryTol = 1e-12;

CMat checked(CMat u) {
  if (unitarity_defect(u) > kUnitaryTol)
    throw std::runtime_error("gate constructor produced a non-unitary matrix");
  return u;
}

void check_levels(int d, int j, int k) {
  if (d < 2) throw std::invalid_argument("gate: d must be >= 2");
  if (!(0 <= j && j < k && k < d))
    throw std::invalid_argument("gate: need 0 <= j < k < d");
}

void check_value(int d, int m, const char* what) {
  if (!(0 <= m && m < d))
    throw std::invalid_argument(std::string("gate: ") + what + " out of [0,d)");
}

/// e^{i 2 pi num / den} for plain long integers.
Cx root_of_unity(long long num, long long den) {
  return std::polar(1.0, 2.0 * M_PI * static_cast<double>(num) /
                             static_cast<double>(den));
}

long long ipow(int base, int exp) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

/// Places block (dim d) at control position m of a d^2 block-diagonal.
CMat controlled_block(int d, int m, const CMat& block) {
  check_value(d, m, "control value m");
  CMat u = CMat::Identity(d * d, d * d);
  u.block(m * d, m * d, d, d) = block;
  return u;
}

/// Places block at control pair (m, n) of a d^3 block-diagonal.
CMat doubly_controlled_block(int d, int m, int n, const CMat& block) {
  check_value(d, m, "control value m");
  check_value(d, n, "control value n");
  long long dim = static_cast<long long>(d) * d * d;
  CMat u = CMat::Identity(dim, dim);
  long long base = (static_cast<long long>(m) * d + n) * d;
  u.block(base, base, d, d) = block;
  return u;
}

}  // namespace

CMat x_jk(int d, int j, int k) {
  check_levels(d, j, k);
  CMat u = CMat::Identity(d, d);
  u(j, j) = 0;
  u(k, k) = 0;
  u(j, k) = 1;
  u(k, j) = 1;
  return checked(std::move(u));
}

CMat rot_jk(GateKind axis, int d, int j, int k, const Angle& theta) {
  check_levels(d, j, k);
  CMat u = CMat::Identity(d, d);
  Cx eih = theta.unit_half();            // e^{+i theta/2}
  Cx emih = std::conj(eih);              // e^{-i theta/2}
  switch (axis) {
    case GateKind::RZ:
      u(j, j) = emih;
      u(k, k) = eih;
      break;
    case GateKind::RX: {
      double h = theta.radians_sym_half();
      u(j, j) = std::cos(h);
      u(k, k) = std::cos(h);
      u(j, k) = Cx(0, -std::sin(h));
      u(k, j) = Cx(0, -std::sin(h));
      break;
    }
    case GateKind::RY: {
      double h = theta.radians_sym_half();
      u(j, j) = std::cos(h);
      u(k, k) = std::cos(h);
      u(j, k) = -std::sin(h);
      u(k, j) = std::sin(h);
      break;
    }
    default:
      throw std::invalid_argument("rot_jk: axis must be RZ/RX/RY");
  }
  return checked(std::move(u));
}

CMat hadamard(int d) {
  if (d < 2) throw std::invalid_argument("hadamard: d must be >= 2");
  CMat u(d, d);
  double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      u(r, c) = s * root_of_unity(static_cast<long long>(r) * c, d);
  return checked(std::move(u));
}

CMat hadamard_dag(int d) { return hadamard(d).conjugate(); }

CMat d_gate(int d, const std::vector<Angle>& phis) {
  if (static_cast<int>(phis.size()) != d - 1)
    throw std::invalid_argument("d_gate: expected d-1 angles");
  CMat u = CMat::Identity(d, d);
  for (int l = 1; l < d; ++l) u(l, l) = phis[static_cast<std::size_t>(l - 1)].unit();
  return checked(std::move(u));
}

CMat dprime_gate(int d, const std::vector<Angle>& as) {
  if (static_cast<int>(as.size()) != d - 1)
    throw std::invalid_argument("dprime_gate: expected d-1 angles");
  Angle sum;
  for (const auto& a : as) sum = sum + a;
  CMat u = CMat::Identity(d, d);
  u(0, 0) = (-sum).unit();
  for (int l = 1; l < d; ++l) u(l, l) = as[static_cast<std::size_t>(l - 1)].unit();
  return checked(std::move(u));
}

CMat phi_k(int d, int K) {
  if (K < 1) throw std::invalid_argument("phi_k: K must be >= 1");
  std::vector<Angle> phis;
  for (int m = 1; m < d; ++m) phis.emplace_back(m, ipow(d, K));
  return d_gate(d, phis);
}

CMat phase_at(int d, int m, const Angle& a) {
  check_value(d, m, "level m");
  CMat u = CMat::Identity(d, d);
  u(m, m) = a.unit();
  return checked(std::move(u));
}

CMat dq_power(int d, int q, int m, bool dagger) {
  if (q < 1 || m < 0 || m >= q)
    throw std::invalid_argument("dq_power: need q >= 1, 0 <= m < q");
  long long Q = ipow(d, q);
  long long step = ipow(d, m);
  CMat u = CMat::Identity(d, d);
  for (int r = 0; r < d; ++r) {
    long long e = static_cast<long long>(r) * step % Q;
    u(r, r) = root_of_unity(dagger ? -e : e, Q);
  }
  return checked(std::move(u));
}

CMat diag_full(int d, const std::vector<Angle>& phases) {
  if (static_cast<int>(phases.size()) != d)
    throw std::invalid_argument("diag_full: expected d angles");
  CMat u = CMat::Identity(d, d);
  for (int r = 0; r < d; ++r) u(r, r) = phases[static_cast<std::size_t>(r)].unit();
  return checked(std::move(u));
}

CMat gcx(int d, int m, int j, int k) {
  return controlled_block(d, m, x_jk(d, j, k));
}

CMat cd(int d, int m, const std::vector<Angle>& phis) {
  return controlled_block(d, m, d_gate(d, phis));
}

CMat cdprime(int d, int m, const std::vector<Angle>& as) {
  return controlled_block(d, m, dprime_gate(d, as));
}

CMat rk(int d, int K, int sign) {
  if (K < 1) throw std::invalid_argument("rk: K must be >= 1");
  long long den = ipow(d, K);
  CMat u = CMat::Identity(d * d, d * d);
  for (int c = 0; c < d; ++c)
    for (int t = 0; t < d; ++t)
      u(c * d + t, c * d + t) =
          root_of_unity(sign * static_cast<long long>(c) * t % den, den);
  return checked(std::move(u));
}

CMat gccx(int d, int m, int n, int j, int k) {
  return doubly_controlled_block(d, m, n, x_jk(d, j, k));
}

CMat ccd(int d, int m, int n, const std::vector<Angle>& phis) {
  return doubly_controlled_block(d, m, n, d_gate(d, phis));
}

CMat rbark(int d, int K, int sign) {
  if (K < 1) throw std::invalid_argument("rbark: K must be >= 1");
  long long den = ipow(d, K);
  long long dim = static_cast<long long>(d) * d * d;
  CMat u = CMat::Identity(dim, dim);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      for (int r = 0; r < d; ++r) {
        long long idx = (static_cast<long long>(m) * d + n) * d + r;
        long long e = static_cast<long long>(sign) * m * n % den * r % den;
        u(idx, idx) = root_of_unity(e, den);
      }
  return checked(std::move(u));
}

CMat sjk(int d, int j, int k, bool dagger) {
  check_levels(d, j, k);
  CMat u = CMat::Identity(d, d);
  u(k, k) = dagger ? Cx(0, -1) : Cx(0, 1);
  return checked(std::move(u));
}

CMat tjk(int d, int j, int k, bool dagger) {
  check_levels(d, j, k);
  CMat u = CMat::Identity(d, d);
  u(k, k) = std::polar(1.0, dagger ? -M_PI / 4 : M_PI / 4);
  return checked(std::move(u));
}

CMat hjk(int d, int j, int k) {
  check_levels(d, j, k);
  CMat u = CMat::Identity(d, d);
  double s = 1.0 / std::sqrt(2.0);
  u(j, j) = s;
  u(j, k) = s;
  u(k, j) = s;
  u(k, k) = -s;
  return checked(std::move(u));
}

CMat swap(int d) {
  CMat u = CMat::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) u(a * d + b, b * d + a) = 1;
  return checked(std::move(u));
}

}  // namespace gates

CMat gate_matrix(const GateSpec& g, int d) {
  switch (g.kind) {
    case GateKind::X_JK:
      return gates::x_jk(d, g.j, g.k);
    case GateKind::RZ:
    case GateKind::RX:
    case GateKind::RY:
      return gates::rot_jk(g.kind, d, g.j, g.k, g.angles.at(0));
    case GateKind::H:
      return gates::hadamard(d);
    case GateKind::H_DAG:
      return gates::hadamard_dag(d);
    case GateKind::H_JK:
      return gates::hjk(d, g.j, g.k);
    case GateKind::S_JK:
      return gates::sjk(d, g.j, g.k);
    case GateKind::S_JK_DAG:
      return gates::sjk(d, g.j, g.k, true);
    case GateKind::T_JK:
      return gates::tjk(d, g.j, g.k);
    case GateKind::T_JK_DAG:
      return gates::tjk(d, g.j, g.k, true);
    case GateKind::PHASE:
      return gates::phase_at(d, g.m, g.angles.at(0));
    case GateKind::DIAG:
      return gates::diag_full(d, g.angles);
    case GateKind::GCX:
      return gates::gcx(d, g.m, g.j, g.k);
    case GateKind::GCCX:
      return gates::gccx(d, g.m, g.n, g.j, g.k);
    case GateKind::CD:
      return gates::cd(d, g.m, g.angles);
    case GateKind::CCD:
      return gates::ccd(d, g.m, g.n, g.angles);
    case GateKind::RK:
      return gates::rk(d, g.K, g.sign);
    case GateKind::RBARK:
      return gates::rbark(d, g.K, g.sign);
    case GateKind::SWAP:
      return gates::swap(d);
    case GateKind::PERM: {
      int nq = static_cast<int>(g.qudits.size());
      long long dim = 1;
      for (int i = 0; i < nq; ++i) dim *= d;
      CMat u = CMat::Zero(dim, dim);
      for (long long in = 0; in < dim; ++in) {
        // digits of the input, most significant first
        std::vector<int> digit(static_cast<std::size_t>(nq));
        long long rest = in;
        for (int i = nq - 1; i >= 0; --i) {
          digit[static_cast<std::size_t>(i)] = static_cast<int>(rest % d);
          rest /= d;
        }
        long long out = 0;
        for (int i = 0; i < nq; ++i)
          out = out * d + digit[static_cast<std::size_t>(g.perm[static_cast<std::size_t>(i)])];
        u(out, in) = 1;
      }
      return u;
    }
  }
  throw std::logic_error("gate_matrix: unhandled kind");
}

}  // namespace quarc
