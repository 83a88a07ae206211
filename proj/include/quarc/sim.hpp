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
#include <vector>

#include "quarc/matrices.hpp"

namespace quarc {

/// Dense amplitude vector over the full register file; index digits are
/// most-significant-first, so qudit 0 carries the d^(w-1) digit.
struct StateVector {
  QuditSystem system;
  std::vector<Cx> amps;

  static StateVector basis(const QuditSystem& sys, std::uint64_t index);
  static StateVector zero_state(const QuditSystem& sys) {
    return basis(sys, 0);
  }

  double norm() const;
  std::uint64_t dim() const { return amps.size(); }

  /// Digit of basis index n at the given qudit.
  int digit(std::uint64_t n, int qudit) const;
  /// Value held by a register inside basis index n.
  std::uint64_t register_value(std::uint64_t n, const Register& reg) const;
  /// Basis index assembled from per-register values (layout order).
  std::uint64_t index_of(const std::vector<std::uint64_t>& reg_values) const;
};

/// Applies one gate in place via stride/digit arithmetic (no Kronecker
/// blow-up). Throws on gates invalid for the system.
void apply_gate(StateVector& s, const GateSpec& g);

StateVector run_circuit(StateVector s, const Circuit& c);

inline constexpr std::uint64_t kUnitaryDimCap = 2187;

/// Column i is the circuit applied to basis state i. Dimension capped
/// (override for deliberate big extractions).
CMat circuit_unitary(const Circuit& c, std::uint64_t cap = kUnitaryDimCap);

struct PhaseCompare {
  bool equal = false;
  double phase = 0.0;      // radians; U ~ e^{i phase} V
  double max_diff = 0.0;   // max-entry norm after phase alignment
};

/// Finds phi minimizing ||U - e^{i phi} V||_max via the phase of the
/// diagonal average of V^dag U; equal iff the residual is within tol.
PhaseCompare equal_up_to_global_phase(const CMat& u, const CMat& v,
                                      double tol);

/// Tr(rho^2) of the reduced density operator of a contiguous register.
double reduced_purity(const StateVector& s, const Register& reg);

/// Probability that measuring the register yields the given value.
double register_probability(const StateVector& s, const Register& reg,
                            std::uint64_t value);

}  // namespace quarc
