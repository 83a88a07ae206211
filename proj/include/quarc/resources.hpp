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

#include <map>

#include "quarc/blocks.hpp"

namespace quarc {

/// Recursive expansion of one gate into the elementary library (leaves:
/// H^(d), R_z, R_x, GCX, the two-level S/T/H gates, phase gates, SWAP,
/// PERM). Exact: no global phase is dropped anywhere.
std::vector<GateSpec> expand_gate(const GateSpec& g, int d);

/// Whole-circuit expansion; unitary-preserving entrywise.
Circuit expand_circuit(const Circuit& c);

struct ResourceReport {
  std::map<std::string, long long> basic;       // pre-expansion, by kind
  std::map<std::string, long long> elementary;  // leaf families
  long long elementary_total = 0;  // excluding phase and swap columns
  long long phase_gates = 0;       // separate column, per the 4(d-1)^2 counts
  long long swap_gates = 0;
  long long basic_total = 0;
  int width = 0;
  long long depth_basic = 0;
  long long depth_elementary = 0;
  /// per-segment basic gate totals when built from an ArithmeticBlock
  std::vector<std::pair<std::string, long long>> block_breakdown;
};

/// Structural counting (no simulation); fills counts and width but not
/// the depth fields.
ResourceReport count_elementary(const Circuit& c);

enum class DepthLevel { basic, elementary };

/**
 * ASAP greedy layering. A gate is constrained only by earlier gates that
 * share a qudit and do not commute with it (diagonal gates mutually
 * commute regardless of overlap); within a layer supports must be
 * disjoint. PERM costs no layer.
 */
long long schedule_depth(const Circuit& c, DepthLevel level);

/// The reordered circuit realizing the schedule (layer by layer); its
/// unitary equals the input's.
Circuit scheduled_order(const Circuit& c, DepthLevel level);

/// Counts plus both depth figures plus the per-segment breakdown.
ResourceReport analyze(const ArithmeticBlock& blk, bool with_depth = true);

struct FitResult {
  double exponent = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // rms residual of the log-log fit
};

/// Least-squares slope of log(value) vs log(q).
FitResult loglog_fit(const std::vector<std::pair<int, double>>& samples);

enum class FitMetric { elementary_cost, basic_depth, rbar_count };

/// Builds the block at each q (sandwiched where applicable) and fits the
/// requested metric against q. Needs at least 4 samples.
FitResult asymptotic_fit(BlockKind kind, int d, const std::vector<int>& qs,
                         FitMetric metric = FitMetric::elementary_cost);

}  // namespace quarc
