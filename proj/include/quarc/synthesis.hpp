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

#include <vector>

#include "quarc/matrices.hpp"

namespace quarc {

/**
 * Expansion of one basic gate into the elementary library
 * {H^(d), R_z^(jk), R_x^(jk), GCX} plus two-level S/T/H and single-qudit
 * phase gates. The sequence acts on local qudits 0..arity-1 (controls
 * first, target last) and satisfies
 *
 *     e^{i*global_phase} * product(sequence) == gate_matrix(target)
 *
 * entrywise. Constructors verify this to 1e-10 whenever the local
 * dimension is at most 125 and throw on failure.
 */
struct Decomposition {
  int d = 2;
  GateSpec target;
  std::vector<GateSpec> sequence;
  Angle global_phase;

  int arity() const { return static_cast<int>(target.qudits.size()); }
  /// Local circuit over (d, arity) for simulation and scheduling.
  Circuit as_circuit() const;
  /// max-entry difference between e^{i phase}*product and the target.
  double verify_defect() const;
};

/// D'(a_1..a_{d-1}) as a chain of paired R_z^{(0l)} rotations (the pairs
/// realize full-angle relative phases exactly).
Decomposition synth_dprime(int d, const std::vector<Angle>& as);

/// CD_m(phi_1..phi_{d-1}): for each level l a 4-gate cell
/// [R_z^{(0l)}(phi_l - g); GCX_m^{(0l)}; R_z^{(0l)}(g - phi_l); GCX_m^{(0l)}]
/// with g = (1/d) sum(phi), then the phase gate S_m(g) on the control.
/// 4(d-1)+1 gates; exact (zero global phase).
Decomposition synth_cd_prime(int d, int m, const std::vector<Angle>& phis);

/// R_k^(d) as the product of CD_(m), m = 1..d-1, with angles 2*pi*m*l/d^k;
/// 4(d-1)^2 elementary gates plus d-1 phase gates.
Decomposition synth_rk(int d, int K);

/// GCCX_{(m,n)}^{(jk)}: Toffoli-style target line over {H^(jk), T^(jk),
/// GCX} plus control-control phase rounds through auxiliary levels
/// (first (n+1) mod d, then the remaining ones as corrective rounds).
Decomposition synth_gccx(int d, int m, int n, int j, int k);

/// CCD_{(m,n)}(phi_1..phi_{d-1}): cd-prime cells with GCX replaced by
/// GCCX, plus a controlled phase on the two controls.
Decomposition synth_ccd_prime(int d, int m, int n,
                              const std::vector<Angle>& phis);

/// Rbar_k^(d) as (d-1)x(d-1) CCD blocks with angles 2*pi*m*n*l/d^k.
Decomposition synth_rbark(int d, int K);

/// Elementary expansion of a two-level S/T/H or X gate: rotations plus
/// subspace phase gates; exact (no scalar left over).
std::vector<GateSpec> expand_two_level(const GateSpec& g);

/// Exact elementary expansion of a single-qudit DIAG gate (paired R_z
/// chain plus at most one phase gate).
std::vector<GateSpec> expand_diag(const GateSpec& g, int d);

}  // namespace quarc
