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

#include "quarc/sim.hpp"

#include <cmath>
#include <stdexcept>

namespace quarc {

namespace {

std::uint64_t upow(int base, int exp) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) v *= static_cast<std::uint64_t>(base);
  return v;
}

std::uint64_t stride_of(const QuditSystem& sys, int qudit) {
  return upow(sys.d, sys.w - 1 - qudit);
}

/// Applies a dense dim(d)-matrix to one qudit.
void apply_dense_1q(StateVector& s, int qudit, const CMat& u) {
  const int d = s.system.d;
  const std::uint64_t str = stride_of(s.system, qudit);
  const std::uint64_t block = str * static_cast<std::uint64_t>(d);
  std::vector<Cx> tmp(static_cast<std::size_t>(d));
  for (std::uint64_t hi = 0; hi < s.dim(); hi += block) {
    for (std::uint64_t lo = 0; lo < str; ++lo) {
      const std::uint64_t base = hi + lo;
      for (int v = 0; v < d; ++v)
        tmp[static_cast<std::size_t>(v)] =
            s.amps[base + static_cast<std::uint64_t>(v) * str];
      for (int r = 0; r < d; ++r) {
        Cx acc = 0;
        for (int c = 0; c < d; ++c)
          acc += u(r, c) * tmp[static_cast<std::size_t>(c)];
        s.amps[base + static_cast<std::uint64_t>(r) * str] = acc;
      }
    }
  }
}

/// Multiplies each amplitude by phase[digit(qudit)].
void apply_diag_1q(StateVector& s, int qudit, const std::vector<Cx>& phase) {
  const int d = s.system.d;
  const std::uint64_t str = stride_of(s.system, qudit);
  const std::uint64_t block = str * static_cast<std::uint64_t>(d);
  for (std::uint64_t hi = 0; hi < s.dim(); hi += block)
    for (int v = 0; v < d; ++v) {
      Cx f = phase[static_cast<std::size_t>(v)];
      if (f == Cx(1.0, 0.0)) continue;
      const std::uint64_t off = hi + static_cast<std::uint64_t>(v) * str;
      for (std::uint64_t lo = 0; lo < str; ++lo) s.amps[off + lo] *= f;
    }
}

void swap_levels(StateVector& s, int qudit, int j, int k) {
  const std::uint64_t str = stride_of(s.system, qudit);
  const std::uint64_t block = str * static_cast<std::uint64_t>(s.system.d);
  const std::uint64_t oj = static_cast<std::uint64_t>(j) * str;
  const std::uint64_t ok = static_cast<std::uint64_t>(k) * str;
  for (std::uint64_t hi = 0; hi < s.dim(); hi += block)
    for (std::uint64_t lo = 0; lo < str; ++lo)
      std::swap(s.amps[hi + oj + lo], s.amps[hi + ok + lo]);
}

Cx rk_phase(int sign, long long a, long long b, long long den) {
  long long e = sign * (a * b % den);
  return std::polar(1.0, 2.0 * M_PI * static_cast<double>(e) /
                             static_cast<double>(den));
}

}  // namespace

StateVector StateVector::basis(const QuditSystem& sys, std::uint64_t index) {
  StateVector s;
  s.system = sys;
  std::uint64_t dim = sys.dimension();
  if (index >= dim)
    throw std::invalid_argument("StateVector::basis: index out of range");
  s.amps.assign(dim, Cx(0, 0));
  s.amps[index] = Cx(1, 0);
  return s;
}

double StateVector::norm() const {
  double n = 0;
  for (const auto& a : amps) n += std::norm(a);
  return std::sqrt(n);
}

int StateVector::digit(std::uint64_t n, int qudit) const {
  return static_cast<int>(n / stride_of(system, qudit) %
                          static_cast<std::uint64_t>(system.d));
}

std::uint64_t StateVector::register_value(std::uint64_t n,
                                          const Register& reg) const {
  std::uint64_t v = 0;
  for (int q = reg.start; q < reg.start + reg.size; ++q)
    v = v * static_cast<std::uint64_t>(system.d) +
        static_cast<std::uint64_t>(digit(n, q));
  return v;
}

std::uint64_t StateVector::index_of(
    const std::vector<std::uint64_t>& reg_values) const {
  if (reg_values.size() != system.registers.size())
    throw std::invalid_argument("index_of: register count mismatch");
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < reg_values.size(); ++i) {
    const Register& r = system.registers[i];
    std::uint64_t span = upow(system.d, r.size);
    if (reg_values[i] >= span)
      throw std::invalid_argument("index_of: register value out of range");
    n += reg_values[i] * stride_of(system, r.start + r.size - 1);
  }
  return n;
}

void apply_gate(StateVector& s, const GateSpec& g) {
  g.validate(s.system);
  const int d = s.system.d;

  switch (g.kind) {
    case GateKind::X_JK:
      swap_levels(s, g.qudits[0], g.j, g.k);
      return;

    case GateKind::RZ: {
      std::vector<Cx> ph(static_cast<std::size_t>(d), Cx(1, 0));
      ph[static_cast<std::size_t>(g.j)] = std::conj(g.angles[0].unit_half());
      ph[static_cast<std::size_t>(g.k)] = g.angles[0].unit_half();
      apply_diag_1q(s, g.qudits[0], ph);
      return;
    }

    case GateKind::S_JK:
    case GateKind::S_JK_DAG:
    case GateKind::T_JK:
    case GateKind::T_JK_DAG:
    case GateKind::PHASE:
    case GateKind::DIAG: {
      std::vector<Cx> ph(static_cast<std::size_t>(d), Cx(1, 0));
      if (g.kind == GateKind::DIAG) {
        for (int v = 0; v < d; ++v)
          ph[static_cast<std::size_t>(v)] =
              g.angles[static_cast<std::size_t>(v)].unit();
      } else if (g.kind == GateKind::PHASE) {
        ph[static_cast<std::size_t>(g.m)] = g.angles[0].unit();
      } else {
        double a = (g.kind == GateKind::S_JK || g.kind == GateKind::S_JK_DAG)
                       ? M_PI / 2
                       : M_PI / 4;
        if (g.kind == GateKind::S_JK_DAG || g.kind == GateKind::T_JK_DAG)
          a = -a;
        ph[static_cast<std::size_t>(g.k)] = std::polar(1.0, a);
      }
      apply_diag_1q(s, g.qudits[0], ph);
      return;
    }

    case GateKind::RX:
    case GateKind::RY:
    case GateKind::H:
    case GateKind::H_DAG:
    case GateKind::H_JK:
      apply_dense_1q(s, g.qudits[0], gate_matrix(g, d));
      return;

    case GateKind::GCX: {
      const std::uint64_t sc = stride_of(s.system, g.qudits[0]);
      const std::uint64_t st = stride_of(s.system, g.qudits[1]);
      const std::uint64_t delta =
          static_cast<std::uint64_t>(g.k - g.j) * st;
      for (std::uint64_t n = 0; n < s.dim(); ++n) {
        if (static_cast<int>(n / sc % static_cast<std::uint64_t>(d)) != g.m)
          continue;
        if (static_cast<int>(n / st % static_cast<std::uint64_t>(d)) != g.j)
          continue;
        std::swap(s.amps[n], s.amps[n + delta]);
      }
      return;
    }

    case GateKind::GCCX: {
      const std::uint64_t s1 = stride_of(s.system, g.qudits[0]);
      const std::uint64_t s2 = stride_of(s.system, g.qudits[1]);
      const std::uint64_t st = stride_of(s.system, g.qudits[2]);
      const std::uint64_t delta =
          static_cast<std::uint64_t>(g.k - g.j) * st;
      for (std::uint64_t n = 0; n < s.dim(); ++n) {
        if (static_cast<int>(n / s1 % static_cast<std::uint64_t>(d)) != g.m)
          continue;
        if (static_cast<int>(n / s2 % static_cast<std::uint64_t>(d)) != g.n)
          continue;
        if (static_cast<int>(n / st % static_cast<std::uint64_t>(d)) != g.j)
          continue;
        std::swap(s.amps[n], s.amps[n + delta]);
      }
      return;
    }

    case GateKind::CD: {
      const std::uint64_t sc = stride_of(s.system, g.qudits[0]);
      const std::uint64_t st = stride_of(s.system, g.qudits[1]);
      std::vector<Cx> ph(static_cast<std::size_t>(d), Cx(1, 0));
      for (int v = 1; v < d; ++v)
        ph[static_cast<std::size_t>(v)] =
            g.angles[static_cast<std::size_t>(v - 1)].unit();
      for (std::uint64_t n = 0; n < s.dim(); ++n) {
        if (static_cast<int>(n / sc % static_cast<std::uint64_t>(d)) != g.m)
          continue;
        s.amps[n] *= ph[n / st % static_cast<std::uint64_t>(d)];
      }
      return;
    }

    case GateKind::CCD: {
      const std::uint64_t s1 = stride_of(s.system, g.qudits[0]);
      const std::uint64_t s2 = stride_of(s.system, g.qudits[1]);
      const std::uint64_t st = stride_of(s.system, g.qudits[2]);
      std::vector<Cx> ph(static_cast<std::size_t>(d), Cx(1, 0));
      for (int v = 1; v < d; ++v)
        ph[static_cast<std::size_t>(v)] =
            g.angles[static_cast<std::size_t>(v - 1)].unit();
      for (std::uint64_t n = 0; n < s.dim(); ++n) {
        if (static_cast<int>(n / s1 % static_cast<std::uint64_t>(d)) != g.m)
          continue;
        if (static_cast<int>(n / s2 % static_cast<std::uint64_t>(d)) != g.n)
          continue;
        s.amps[n] *= ph[n / st % static_cast<std::uint64_t>(d)];
      }
      return;
    }

    case GateKind::RK: {
      const std::uint64_t sc = stride_of(s.system, g.qudits[0]);
      const std::uint64_t st = stride_of(s.system, g.qudits[1]);
      long long den = 1;
      for (int i = 0; i < g.K; ++i) den *= d;
      // d x d phase table
      std::vector<Cx> tab(static_cast<std::size_t>(d) * d);
      for (int c = 0; c < d; ++c)
        for (int t = 0; t < d; ++t)
          tab[static_cast<std::size_t>(c * d + t)] = rk_phase(g.sign, c, t, den);
      for (std::uint64_t n = 0; n < s.dim(); ++n) {
        int c = static_cast<int>(n / sc % static_cast<std::uint64_t>(d));
        int t = static_cast<int>(n / st % static_cast<std::uint64_t>(d));
        s.amps[n] *= tab[static_cast<std::size_t>(c * d + t)];
      }
      return;
    }

    case GateKind::RBARK: {
      const std::uint64_t s1 = stride_of(s.system, g.qudits[0]);
      const std::uint64_t s2 = stride_of(s.system, g.qudits[1]);
      const std::uint64_t st = stride_of(s.system, g.qudits[2]);
      long long den = 1;
      for (int i = 0; i < g.K; ++i) den *= d;
      for (std::uint64_t n = 0; n < s.dim(); ++n) {
        int a = static_cast<int>(n / s1 % static_cast<std::uint64_t>(d));
        int b = static_cast<int>(n / s2 % static_cast<std::uint64_t>(d));
        int r = static_cast<int>(n / st % static_cast<std::uint64_t>(d));
        if (a == 0 || b == 0 || r == 0) continue;
        s.amps[n] *= rk_phase(g.sign, static_cast<long long>(a) * b % den, r, den);
      }
      return;
    }

    case GateKind::SWAP: {
      const std::uint64_t sa = stride_of(s.system, g.qudits[0]);
      const std::uint64_t sb = stride_of(s.system, g.qudits[1]);
      for (std::uint64_t n = 0; n < s.dim(); ++n) {
        int va = static_cast<int>(n / sa % static_cast<std::uint64_t>(d));
        int vb = static_cast<int>(n / sb % static_cast<std::uint64_t>(d));
        if (va >= vb) continue;
        std::uint64_t n2 = n + static_cast<std::uint64_t>(vb - va) * sa -
                           static_cast<std::uint64_t>(vb - va) * sb;
        std::swap(s.amps[n], s.amps[n2]);
      }
      return;
    }

    case GateKind::PERM: {
      std::vector<Cx> out(s.amps.size());
      std::vector<std::uint64_t> strides(g.qudits.size());
      for (std::size_t i = 0; i < g.qudits.size(); ++i)
        strides[i] = stride_of(s.system, g.qudits[i]);
      for (std::uint64_t n = 0; n < s.dim(); ++n) {
        std::uint64_t n2 = n;
        for (std::size_t i = 0; i < g.qudits.size(); ++i) {
          int old_here =
              static_cast<int>(n / strides[i] % static_cast<std::uint64_t>(d));
          std::size_t src = static_cast<std::size_t>(g.perm[i]);
          int new_here = static_cast<int>(n / strides[src] %
                                          static_cast<std::uint64_t>(d));
          n2 += (static_cast<std::uint64_t>(new_here) -
                 static_cast<std::uint64_t>(old_here)) *
                strides[i];
        }
        out[n2] = s.amps[n];
      }
      s.amps = std::move(out);
      return;
    }
  }
  throw std::logic_error("apply_gate: unhandled kind");
}

StateVector run_circuit(StateVector s, const Circuit& c) {
  if (!(s.system == c.system))
    throw std::invalid_argument("run_circuit: system mismatch");
  for (const auto& g : c.gates) apply_gate(s, g);
  return s;
}

CMat circuit_unitary(const Circuit& c, std::uint64_t cap) {
  std::uint64_t dim = c.system.dimension();
  if (dim > cap)
    throw std::invalid_argument(
        "circuit_unitary: dimension " + std::to_string(dim) +
        " exceeds cap " + std::to_string(cap));
  CMat u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t col = 0; col < dim; ++col) {
    StateVector s = run_circuit(StateVector::basis(c.system, col), c);
    for (std::uint64_t row = 0; row < dim; ++row)
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          s.amps[row];
  }
  return u;
}

PhaseCompare equal_up_to_global_phase(const CMat& u, const CMat& v,
                                      double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("equal_up_to_global_phase: shape mismatch");
  CMat e = v.adjoint() * u;
  Cx acc = e.diagonal().sum();
  if (std::abs(acc) < 1e-9) {
    // fall back to the largest-magnitude diagonal entry
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < e.rows(); ++i)
      if (std::abs(e(i, i)) > std::abs(e(best, best))) best = i;
    acc = e(best, best);
  }
  PhaseCompare out;
  out.phase = std::arg(acc);
  out.max_diff = (u - std::polar(1.0, out.phase) * v).cwiseAbs().maxCoeff();
  out.equal = out.max_diff <= tol;
  return out;
}

double reduced_purity(const StateVector& s, const Register& reg) {
  if (reg.start < 0 || reg.start + reg.size > s.system.w || reg.size < 1)
    throw std::invalid_argument("reduced_purity: invalid register");
  const std::uint64_t R = upow(s.system.d, reg.size);
  const std::uint64_t T = upow(s.system.d, s.system.w - reg.start - reg.size);
  const std::uint64_t L = s.dim() / (R * T);
  // rho(r, r') = sum_{l,t} psi(l r t) conj(psi(l r' t))
  CMat rho = CMat::Zero(static_cast<Eigen::Index>(R),
                        static_cast<Eigen::Index>(R));
  for (std::uint64_t l = 0; l < L; ++l)
    for (std::uint64_t r = 0; r < R; ++r)
      for (std::uint64_t rp = 0; rp < R; ++rp) {
        Cx acc = 0;
        const std::uint64_t base_r = (l * R + r) * T;
        const std::uint64_t base_rp = (l * R + rp) * T;
        for (std::uint64_t t = 0; t < T; ++t)
          acc += s.amps[base_r + t] * std::conj(s.amps[base_rp + t]);
        rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(rp)) += acc;
      }
  return (rho * rho).trace().real();
}

double register_probability(const StateVector& s, const Register& reg,
                            std::uint64_t value) {
  double p = 0;
  for (std::uint64_t n = 0; n < s.dim(); ++n)
    if (s.register_value(n, reg) == value) p += std::norm(s.amps[n]);
  return p;
}

}  // namespace quarc
