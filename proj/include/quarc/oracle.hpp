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

#include <optional>

#include "quarc/blocks.hpp"
#include "quarc/sim.hpp"

namespace quarc {

/// Classical reference semantics for one arithmetic block. Pure integer
/// arithmetic mod d^q; no simulator dependencies.
struct OracleSpec {
  BlockKind kind;
  int d;
  int q;
  long long b = 0;
  int c = 0;
  long long gamma = 0;

  static OracleSpec of(const ArithmeticBlock& blk) {
    return OracleSpec{blk.kind, blk.d, blk.q, blk.b, blk.c, blk.gamma};
  }
};

/// Register values in, register values out (physical layout order). The
/// general forms cover nonzero ancilla inputs too, so every oracle is a
/// bijection on the full tuple space.
std::vector<long long> oracle_eval(const OracleSpec& spec,
                                   const std::vector<long long>& in);

/// Closed-form DFT on d^q points: entries e^{i 2 pi j k / N} / sqrt(N).
CMat dft_matrix(int d, int q, std::uint64_t cap = kUnitaryDimCap);

/// Entry k is e^{i 2 pi gamma k^2 / d^q} (exact roots of unity).
CVec diag_phase_vector(int d, int q, long long gamma);

struct CheckFailure {
  std::uint64_t input;
  std::uint64_t expected;
  std::uint64_t got;
  double fidelity;
};

struct CheckReport {
  std::uint64_t total = 0;
  std::uint64_t passed = 0;
  double worst_fidelity = 1.0;
  std::vector<CheckFailure> failures;  // capped, sorted by input

  bool ok() const { return passed == total; }
};

/// Runs every basis input through the simulator and compares the output
/// basis state and fidelity against the classical oracle. Basis states
/// are distributed over worker threads.
CheckReport exhaustive_check(const ArithmeticBlock& blk,
                             const OracleSpec& spec, int threads = 0,
                             double min_fidelity = 1.0 - 1e-9);

}  // namespace quarc
