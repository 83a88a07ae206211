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

#include <cstdint>
#include <string>
#include <vector>

#include "quarc/angle.hpp"

namespace quarc {

/// Named contiguous qudit range, start..start+size-1. Digit convention is
/// most-significant first: within a register, the first qudit carries the
/// most significant base-d digit.
struct Register {
  std::string name;
  int start = 0;
  int size = 0;

  bool contains(int q) const { return q >= start && q < start + size; }
};

/// Register file of w qudits with d levels each.
struct QuditSystem {
  int d = 2;
  int w = 1;
  std::vector<Register> registers;

  QuditSystem() = default;
  QuditSystem(int d_, int w_) : d(d_), w(w_) { check(); }
  QuditSystem(int d_, int w_, std::vector<Register> regs)
      : d(d_), w(w_), registers(std::move(regs)) {
    check();
  }

  void check() const;
  const Register& reg(const std::string& name) const;
  bool operator==(const QuditSystem& o) const { return d == o.d && w == o.w; }

  /// Number of basis states d^w (throws if it does not fit in 64 bits).
  std::uint64_t dimension() const;
};

enum class GateKind {
  X_JK,     // two-level swap of |j>,|k>
  RZ,       // two-level z rotation, angle theta
  RX,       // two-level x rotation
  RY,       // two-level y rotation (definitional only; never emitted)
  H,        // order-d Fourier gate H^(d)
  H_DAG,    // conjugate Hadamard
  H_JK,     // two-level Hadamard
  S_JK,     // two-level phase-i gate
  S_JK_DAG,
  T_JK,     // two-level pi/8 gate
  T_JK_DAG,
  PHASE,    // diag(1,...,e^{i a} at level m,...,1)
  DIAG,     // diag(e^{i a_0},...,e^{i a_{d-1}}), d angles
  GCX,      // controlled X^(jk), fires on control value m
  GCCX,     // doubly controlled X^(jk), fires on (m, n)
  CD,       // controlled diag(1, e^{i a_1},...), fires on m; d-1 angles
  CCD,      // doubly controlled diagonal; d-1 angles
  RK,       // R_k: phase 2*pi*sign*c*t/d^K between control c, target t
  RBARK,    // doubly controlled R_k: phase 2*pi*sign*m*n*r/d^K
  SWAP,     // physical qudit exchange
  PERM,     // wire relabeling; costs nothing, simulated as a permutation
};

const char* kind_name(GateKind k);
bool kind_is_diagonal(GateKind k);
bool kind_is_self_inverse(GateKind k);
/// Number of qudits the kind acts on (0 meaning variable, PERM only).
int kind_arity(GateKind k);

/**
 * One gate instance: kind, the qudits it acts on (controls first, target
 * last), the two-level subspace (j,k) where applicable, control values
 * m/n, exact angles, and the integer parameter K of R_k-type gates.
 */
struct GateSpec {
  GateKind kind;
  std::vector<int> qudits;
  int j = -1;
  int k = -1;
  int m = -1;
  int n = -1;
  std::vector<Angle> angles;
  int K = 0;
  int sign = 1;            // +1 or -1; R_k-family inversion
  std::vector<int> perm;   // PERM only

  /// Throws std::invalid_argument with a description on any violation.
  void validate(const QuditSystem& sys) const;
  GateSpec inverse() const;
  bool operator==(const GateSpec& o) const;
};

// Constructors for every kind; they canonicalize (j < k) and validate
// locally decidable constraints.
GateSpec g_x(int qudit, int j, int k);
GateSpec g_rot(GateKind axis, int qudit, int j, int k, const Angle& theta);
GateSpec g_h(int qudit);
GateSpec g_h_dag(int qudit);
GateSpec g_hjk(int qudit, int j, int k);
GateSpec g_sjk(int qudit, int j, int k, bool dagger = false);
GateSpec g_tjk(int qudit, int j, int k, bool dagger = false);
GateSpec g_phase(int qudit, int level, const Angle& a);
GateSpec g_diag(int qudit, std::vector<Angle> phases);
GateSpec g_gcx(int control, int target, int m, int j, int k);
GateSpec g_gccx(int c1, int c2, int target, int m, int n, int j, int k);
GateSpec g_cd(int control, int target, int m, std::vector<Angle> phis);
GateSpec g_ccd(int c1, int c2, int target, int m, int n,
               std::vector<Angle> phis);
GateSpec g_rk(int control, int target, int K, int sign = 1);
GateSpec g_rbark(int c1, int c2, int target, int K, int sign = 1);
GateSpec g_swap(int a, int b);
GateSpec g_perm(std::vector<int> qudits, std::vector<int> perm);

/// Ordered gate list over a fixed register layout. Immutable by
/// convention once built; all transformations return new circuits.
struct Circuit {
  QuditSystem system;
  std::vector<GateSpec> gates;
  std::string label;

  void validate() const {
    for (const auto& g : gates) g.validate(system);
  }
  void append(GateSpec g) { gates.push_back(std::move(g)); }
  void append(const Circuit& other);
  std::size_t size() const { return gates.size(); }
};

/// Concatenation; both circuits must share the same (d, w).
Circuit compose(const Circuit& a, const Circuit& b);

/// Reversed gate order with every angle negated mod 2*pi; self-inverse
/// kinds pass through, H^(d) turns into its conjugate and back.
Circuit inverse(const Circuit& c);

}  // namespace quarc
