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
#include <string>

#include "quarc/circuit.hpp"

namespace quarc {

enum class BlockKind {
  QFT,
  ADD,
  ADDC,
  CADDC,
  GCADDC,
  MAC,
  MULC,
  MMAC,
  SMAC,
  DELTA,
};

const char* block_name(BlockKind k);
BlockKind block_from_name(const std::string& name);

enum class SwapMode { relabel, physical };

/// Arithmetic circuit with named registers and a structural segment map
/// (label -> gate index range) for per-block resource breakdowns.
struct ArithmeticBlock {
  BlockKind kind = BlockKind::QFT;
  Circuit circuit;
  bool sandwiched = false;
  int d = 2;
  int q = 1;
  long long b = 0;
  int c = 0;
  long long gamma = 0;
  /// role name -> register name (differs from identity only for MULC,
  /// whose result lands in the former ancilla register).
  std::map<std::string, std::string> roles;
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>>
      segments;
};

/// d^q as a 64-bit value (throws on overflow).
long long modulus_of(int d, int q);
/// Base-d digit of value, 1-based with the most significant digit first.
int msd_digit(long long value, int index, int d, int q);
/// Inverse of b mod m via extended Euclid; throws if gcd(b, m) != 1.
long long mod_inverse(long long b, long long m);

/// QFT on q qudits; output order restored by a wire relabeling (PERM) or
/// by physical SWAP gates.
ArithmeticBlock build_qft(int d, int q, SwapMode mode = SwapMode::relabel);

/// |b>|a> -> |b>|a+b mod d^q> when sandwiched; without the sandwich the
/// core acts on the Fourier-transformed lower register.
ArithmeticBlock build_add(int d, int q, bool sandwich);

/// |a> -> |a+b>; one merged diagonal gate per qudit.
ArithmeticBlock build_addc(int d, int q, long long b, bool sandwich);

/// |e>|a> -> |e>|a + b*delta_{ce}>.
ArithmeticBlock build_caddc(int d, int q, int c, long long b, bool sandwich);

/// |e>|a> -> |e>|a + b*e>.
ArithmeticBlock build_gcaddc(int d, int q, long long b, bool sandwich);

/// |x>|a> -> |x>|a + b*x>.
ArithmeticBlock build_mac(int d, int q, long long b, bool sandwich);

/// |x>|0> -> |bx>|0> (result register is the former ancilla; see roles).
/// Requires gcd(b, d^q) == 1.
ArithmeticBlock build_mulc(int d, int q, long long b);

/// |x>|y>|z> -> |x>|y>|z + x*y>.
ArithmeticBlock build_mmac(int d, int q, bool sandwich);

/// |0>|x>|0>|z> -> |0>|x>|0>|z + gamma*x^2>.
ArithmeticBlock build_smac(int d, int q, long long gamma);

/// Diagonal operator Delta_gamma on Reg1: multiplies amplitude k by
/// e^{i 2 pi gamma k^2 / d^q}; Reg2 and the squarer internals are
/// ancillas restored to |0>.
ArithmeticBlock build_delta(int d, int q, long long gamma);

}  // namespace quarc
