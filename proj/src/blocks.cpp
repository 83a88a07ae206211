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

#include "quarc/blocks.hpp"

#include <numeric>
#include <stdexcept>

namespace quarc {

namespace {

__int128 ipow128(int base, int exp) {
  __int128 v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

std::vector<int> range_idx(int start, int q) {
  std::vector<int> idx(static_cast<std::size_t>(q));
  std::iota(idx.begin(), idx.end(), start);
  return idx;
}

/// QFT body on the listed qudits (most significant first). The trailing
/// order reversal yields the textbook DFT tensor order; the arithmetic
/// sandwiches of section-5 style cores omit it, since those cores index
/// qudit l by the (q-l+1)-digit phase fraction (the reversal of a
/// sandwich pair cancels anyway).
Circuit qft_fragment(const QuditSystem& sys, const std::vector<int>& idx,
                     SwapMode mode, bool reversal = true) {
  Circuit c;
  c.system = sys;
  int q = static_cast<int>(idx.size());
  for (int l = 1; l <= q; ++l) {
    c.append(g_h(idx[static_cast<std::size_t>(l - 1)]));
    for (int k = 2; k <= q - l + 1; ++k)
      c.append(g_rk(idx[static_cast<std::size_t>(l + k - 2)],
                    idx[static_cast<std::size_t>(l - 1)], k));
  }
  if (q > 1 && reversal) {
    if (mode == SwapMode::relabel) {
      std::vector<int> perm(static_cast<std::size_t>(q));
      for (int i = 0; i < q; ++i)
        perm[static_cast<std::size_t>(i)] = q - 1 - i;
      c.append(g_perm(idx, perm));
    } else {
      for (int i = 0; i < q / 2; ++i)
        c.append(g_swap(idx[static_cast<std::size_t>(i)],
                        idx[static_cast<std::size_t>(q - 1 - i)]));
    }
  }
  return c;
}

/// phi_{l,m}(b) = sum_k 2 pi m b_{k+l-1} / d^k, the merged rotation
/// angles of the constant adder.
std::vector<Angle> addc_angles(int d, int q, long long b, int l) {
  std::vector<Angle> phis;
  for (int m = 1; m < d; ++m) {
    Angle phi;
    for (int k = 1; k <= q - l + 1; ++k) {
      int digit = msd_digit(b, k + l - 1, d, q);
      if (digit != 0)
        phi = phi + Angle(static_cast<__int128>(m) * digit, ipow128(d, k));
    }
    phis.push_back(phi);
  }
  return phis;
}

Circuit add_core(const QuditSystem& sys, const std::vector<int>& b_idx,
                 const std::vector<int>& a_idx) {
  Circuit c;
  c.system = sys;
  int q = static_cast<int>(a_idx.size());
  for (int l = 1; l <= q; ++l)
    for (int k = 1; k <= q - l + 1; ++k)
      c.append(g_rk(b_idx[static_cast<std::size_t>(l + k - 2)],
                    a_idx[static_cast<std::size_t>(l - 1)], k));
  return c;
}

Circuit addc_core(const QuditSystem& sys, const std::vector<int>& a_idx,
                  int d, long long b) {
  Circuit c;
  c.system = sys;
  int q = static_cast<int>(a_idx.size());
  for (int l = 1; l <= q; ++l) {
    std::vector<Angle> phis = addc_angles(d, q, b, l);
    std::vector<Angle> full;
    full.emplace_back();
    full.insert(full.end(), phis.begin(), phis.end());
    c.append(g_diag(a_idx[static_cast<std::size_t>(l - 1)], full));
  }
  return c;
}

Circuit caddc_core(const QuditSystem& sys, int ctrl, int c_value,
                   const std::vector<int>& a_idx, int d, long long b) {
  Circuit c;
  c.system = sys;
  int q = static_cast<int>(a_idx.size());
  for (int l = 1; l <= q; ++l)
    c.append(g_cd(ctrl, a_idx[static_cast<std::size_t>(l - 1)], c_value,
                  addc_angles(d, q, b, l)));
  return c;
}

Circuit gcaddc_core(const QuditSystem& sys, int ctrl,
                    const std::vector<int>& a_idx, int d, long long b,
                    long long mod) {
  Circuit c;
  c.system = sys;
  for (int cv = 1; cv < d; ++cv)
    c.append(caddc_core(sys, ctrl, cv, a_idx, d, b * cv % mod));
  return c;
}

Circuit mac_core(const QuditSystem& sys, const std::vector<int>& x_idx,
                 const std::vector<int>& a_idx, int d, long long b,
                 long long mod) {
  Circuit c;
  c.system = sys;
  int q = static_cast<int>(x_idx.size());
  long long scaled = b % mod;
  for (int s = 0; s < q; ++s) {
    c.append(gcaddc_core(sys, x_idx[static_cast<std::size_t>(q - 1 - s)],
                         a_idx, d, scaled, mod));
    scaled = scaled * d % mod;
  }
  return c;
}

Circuit mmac_core(const QuditSystem& sys, const std::vector<int>& x_idx,
                  const std::vector<int>& y_idx,
                  const std::vector<int>& z_idx) {
  Circuit c;
  c.system = sys;
  int q = static_cast<int>(z_idx.size());
  for (int l = 1; l <= q; ++l)
    for (int k = 1; k <= l; ++k)
      for (int t = 0; t <= l - k; ++t)
        c.append(g_rbark(x_idx[static_cast<std::size_t>(q - t - 1)],
                         y_idx[static_cast<std::size_t>(q + k - l + t - 1)],
                         z_idx[static_cast<std::size_t>(l - 1)], k));
  return c;
}

void mark(ArithmeticBlock& blk, const std::string& label, std::size_t from) {
  blk.segments.emplace_back(label,
                            std::make_pair(from, blk.circuit.size()));
}

void append_segment(ArithmeticBlock& blk, const std::string& label,
                    const Circuit& frag) {
  std::size_t from = blk.circuit.size();
  blk.circuit.append(frag);
  mark(blk, label, from);
}

/// core wrapped in QFT / inverse QFT on the accumulator register.
/// reversal selects the phase-digit convention the core expects: false
/// for the adder-family cores, true for the multiplier-accumulator core.
void append_sandwiched(ArithmeticBlock& blk, const std::string& label,
                       const std::vector<int>& acc_idx, const Circuit& core,
                       bool reversal) {
  Circuit qft =
      qft_fragment(blk.circuit.system, acc_idx, SwapMode::relabel, reversal);
  append_segment(blk, label + ".qft", qft);
  append_segment(blk, label + ".core", core);
  append_segment(blk, label + ".iqft", inverse(qft));
}

void check_constant(long long b, long long mod, const char* what) {
  if (b < 0 || b >= mod)
    throw std::invalid_argument(std::string(what) + " out of [0, d^q)");
}

QuditSystem make_system(int d, std::vector<Register> regs) {
  int w = 0;
  for (const auto& r : regs) w += r.size;
  return QuditSystem(d, w, std::move(regs));
}

}  // namespace

const char* block_name(BlockKind k) {
  switch (k) {
    case BlockKind::QFT: return "qft";
    case BlockKind::ADD: return "add";
    case BlockKind::ADDC: return "addc";
    case BlockKind::CADDC: return "caddc";
    case BlockKind::GCADDC: return "gcaddc";
    case BlockKind::MAC: return "mac";
    case BlockKind::MULC: return "mulc";
    case BlockKind::MMAC: return "mmac";
    case BlockKind::SMAC: return "smac";
    case BlockKind::DELTA: return "delta";
  }
  return "?";
}

BlockKind block_from_name(const std::string& name) {
  for (BlockKind k :
       {BlockKind::QFT, BlockKind::ADD, BlockKind::ADDC, BlockKind::CADDC,
        BlockKind::GCADDC, BlockKind::MAC, BlockKind::MULC, BlockKind::MMAC,
        BlockKind::SMAC, BlockKind::DELTA})
    if (name == block_name(k)) return k;
  throw std::invalid_argument("unknown block '" + name + "'");
}

long long modulus_of(int d, int q) {
  long long m = 1;
  for (int i = 0; i < q; ++i) {
    if (m > (1LL << 62) / d) throw std::invalid_argument("d^q overflows");
    m *= d;
  }
  return m;
}

int msd_digit(long long value, int index, int d, int q) {
  long long div = 1;
  for (int i = 0; i < q - index; ++i) div *= d;
  return static_cast<int>(value / div % d);
}

long long mod_inverse(long long b, long long m) {
  long long r0 = m, r1 = b % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long qt = r0 / r1;
    long long r2 = r0 - qt * r1;
    long long s2 = s0 - qt * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1)
    throw std::invalid_argument(
        "constant not invertible: gcd(b, d^q) = " + std::to_string(r0));
  return (s0 % m + m) % m;
}

ArithmeticBlock build_qft(int d, int q, SwapMode mode) {
  if (q < 1) throw std::invalid_argument("build_qft: q must be >= 1");
  ArithmeticBlock blk;
  blk.kind = BlockKind::QFT;
  blk.d = d;
  blk.q = q;
  blk.circuit.system = make_system(d, {{"x", 0, q}});
  blk.circuit.label = "qft";
  blk.roles = {{"data", "x"}};
  append_segment(blk, "qft", qft_fragment(blk.circuit.system, range_idx(0, q), mode));
  blk.circuit.validate();
  return blk;
}

ArithmeticBlock build_add(int d, int q, bool sandwich) {
  ArithmeticBlock blk;
  blk.kind = BlockKind::ADD;
  blk.d = d;
  blk.q = q;
  blk.sandwiched = sandwich;
  blk.circuit.system = make_system(d, {{"b", 0, q}, {"a", q, q}});
  blk.circuit.label = "add";
  blk.roles = {{"addend", "b"}, {"accumulator", "a"}};
  Circuit core = add_core(blk.circuit.system, range_idx(0, q), range_idx(q, q));
  if (sandwich)
    append_sandwiched(blk, "add", range_idx(q, q), core, false);
  else
    append_segment(blk, "add.core", core);
  blk.circuit.validate();
  return blk;
}

ArithmeticBlock build_addc(int d, int q, long long b, bool sandwich) {
  check_constant(b, modulus_of(d, q), "b");
  ArithmeticBlock blk;
  blk.kind = BlockKind::ADDC;
  blk.d = d;
  blk.q = q;
  blk.b = b;
  blk.sandwiched = sandwich;
  blk.circuit.system = make_system(d, {{"a", 0, q}});
  blk.circuit.label = "addc";
  blk.roles = {{"accumulator", "a"}};
  Circuit core = addc_core(blk.circuit.system, range_idx(0, q), d, b);
  if (sandwich)
    append_sandwiched(blk, "addc", range_idx(0, q), core, false);
  else
    append_segment(blk, "addc.core", core);
  blk.circuit.validate();
  return blk;
}

ArithmeticBlock build_caddc(int d, int q, int c, long long b, bool sandwich) {
  check_constant(b, modulus_of(d, q), "b");
  if (c < 0 || c >= d) throw std::invalid_argument("control value out of [0,d)");
  ArithmeticBlock blk;
  blk.kind = BlockKind::CADDC;
  blk.d = d;
  blk.q = q;
  blk.b = b;
  blk.c = c;
  blk.sandwiched = sandwich;
  blk.circuit.system = make_system(d, {{"ctrl", 0, 1}, {"a", 1, q}});
  blk.circuit.label = "caddc";
  blk.roles = {{"control", "ctrl"}, {"accumulator", "a"}};
  Circuit core = caddc_core(blk.circuit.system, 0, c, range_idx(1, q), d, b);
  if (sandwich)
    append_sandwiched(blk, "caddc", range_idx(1, q), core, false);
  else
    append_segment(blk, "caddc.core", core);
  blk.circuit.validate();
  return blk;
}

ArithmeticBlock build_gcaddc(int d, int q, long long b, bool sandwich) {
  long long mod = modulus_of(d, q);
  check_constant(b, mod, "b");
  ArithmeticBlock blk;
  blk.kind = BlockKind::GCADDC;
  blk.d = d;
  blk.q = q;
  blk.b = b;
  blk.sandwiched = sandwich;
  blk.circuit.system = make_system(d, {{"ctrl", 0, 1}, {"a", 1, q}});
  blk.circuit.label = "gcaddc";
  blk.roles = {{"control", "ctrl"}, {"accumulator", "a"}};
  Circuit core = gcaddc_core(blk.circuit.system, 0, range_idx(1, q), d, b, mod);
  if (sandwich)
    append_sandwiched(blk, "gcaddc", range_idx(1, q), core, false);
  else
    append_segment(blk, "gcaddc.core", core);
  blk.circuit.validate();
  return blk;
}

ArithmeticBlock build_mac(int d, int q, long long b, bool sandwich) {
  long long mod = modulus_of(d, q);
  check_constant(b, mod, "b");
  ArithmeticBlock blk;
  blk.kind = BlockKind::MAC;
  blk.d = d;
  blk.q = q;
  blk.b = b;
  blk.sandwiched = sandwich;
  blk.circuit.system = make_system(d, {{"x", 0, q}, {"a", q, q}});
  blk.circuit.label = "mac";
  blk.roles = {{"multiplier", "x"}, {"accumulator", "a"}};
  Circuit core =
      mac_core(blk.circuit.system, range_idx(0, q), range_idx(q, q), d, b, mod);
  if (sandwich)
    append_sandwiched(blk, "mac", range_idx(q, q), core, false);
  else
    append_segment(blk, "mac.core", core);
  blk.circuit.validate();
  return blk;
}

ArithmeticBlock build_mulc(int d, int q, long long b) {
  long long mod = modulus_of(d, q);
  check_constant(b, mod, "b");
  long long binv = mod_inverse(b, mod);
  ArithmeticBlock blk;
  blk.kind = BlockKind::MULC;
  blk.d = d;
  blk.q = q;
  blk.b = b;
  blk.sandwiched = true;
  blk.circuit.system = make_system(d, {{"x", 0, q}, {"anc", q, q}});
  blk.circuit.label = "mulc";
  blk.roles = {{"result", "anc"}, {"zeroed", "x"}};
  const QuditSystem& sys = blk.circuit.system;
  std::vector<int> xi = range_idx(0, q), ai = range_idx(q, q);

  append_sandwiched(blk, "mulc.mac_b", ai,
                    mac_core(sys, xi, ai, d, b, mod), false);
  Circuit qftx = qft_fragment(sys, xi, SwapMode::relabel, false);
  append_segment(blk, "mulc.qft_x", qftx);
  append_segment(blk, "mulc.inv_mac_binv",
                 inverse(mac_core(sys, ai, xi, d, binv, mod)));
  append_segment(blk, "mulc.iqft_x", inverse(qftx));
  blk.circuit.validate();
  return blk;
}

ArithmeticBlock build_mmac(int d, int q, bool sandwich) {
  ArithmeticBlock blk;
  blk.kind = BlockKind::MMAC;
  blk.d = d;
  blk.q = q;
  blk.sandwiched = sandwich;
  blk.circuit.system =
      make_system(d, {{"x", 0, q}, {"y", q, q}, {"z", 2 * q, q}});
  blk.circuit.label = "mmac";
  blk.roles = {{"multiplier", "x"}, {"multiplicand", "y"}, {"accumulator", "z"}};
  Circuit core = mmac_core(blk.circuit.system, range_idx(0, q),
                           range_idx(q, q), range_idx(2 * q, q));
  if (sandwich)
    append_sandwiched(blk, "mmac", range_idx(2 * q, q), core, true);
  else
    append_segment(blk, "mmac.core", core);
  blk.circuit.validate();
  return blk;
}

namespace {

/// Shared by SMAC and the diagonal operator: x copied into anc_a, squared
/// into anc_b, gamma * x^2 accumulated into z, ancillas uncomputed.
void append_smac_body(ArithmeticBlock& blk, int d, int q, long long gamma,
                      const std::vector<int>& anc_a,
                      const std::vector<int>& x_idx,
                      const std::vector<int>& anc_b,
                      const std::vector<int>& z_idx) {
  long long mod = modulus_of(d, q);
  const QuditSystem& sys = blk.circuit.system;
  Circuit qft_a = qft_fragment(sys, anc_a, SwapMode::relabel, false);
  Circuit copy = compose(compose(qft_a, add_core(sys, x_idx, anc_a)),
                         inverse(qft_a));
  Circuit qft_b = qft_fragment(sys, anc_b, SwapMode::relabel, true);
  Circuit square = compose(
      compose(qft_b, mmac_core(sys, anc_a, x_idx, anc_b)), inverse(qft_b));

  append_segment(blk, "smac.copy", copy);
  append_segment(blk, "smac.square", square);
  append_sandwiched(blk, "smac.mac_gamma", z_idx,
                    mac_core(sys, anc_b, z_idx, d, gamma, mod), false);
  append_segment(blk, "smac.unsquare", inverse(square));
  append_segment(blk, "smac.uncopy", inverse(copy));
}

}  // namespace

ArithmeticBlock build_smac(int d, int q, long long gamma) {
  check_constant(gamma, modulus_of(d, q), "gamma");
  ArithmeticBlock blk;
  blk.kind = BlockKind::SMAC;
  blk.d = d;
  blk.q = q;
  blk.gamma = gamma;
  blk.sandwiched = true;
  blk.circuit.system = make_system(
      d, {{"anc1", 0, q}, {"x", q, q}, {"anc2", 2 * q, q}, {"z", 3 * q, q}});
  blk.circuit.label = "smac";
  blk.roles = {{"argument", "x"}, {"accumulator", "z"},
               {"ancilla1", "anc1"}, {"ancilla2", "anc2"}};
  append_smac_body(blk, d, q, gamma, range_idx(0, q), range_idx(q, q),
                   range_idx(2 * q, q), range_idx(3 * q, q));
  blk.circuit.validate();
  return blk;
}

ArithmeticBlock build_delta(int d, int q, long long gamma) {
  check_constant(gamma, modulus_of(d, q), "gamma");
  ArithmeticBlock blk;
  blk.kind = BlockKind::DELTA;
  blk.d = d;
  blk.q = q;
  blk.gamma = gamma;
  blk.circuit.system = make_system(
      d,
      {{"reg1", 0, q}, {"reg2", q, q}, {"anc1", 2 * q, q}, {"anc2", 3 * q, q}});
  blk.circuit.label = "delta";
  blk.roles = {{"data", "reg1"}, {"phase_anc", "reg2"},
               {"ancilla1", "anc1"}, {"ancilla2", "anc2"}};

  const QuditSystem& sys = blk.circuit.system;
  std::vector<int> r2 = range_idx(q, q);

  Circuit prep;
  prep.system = sys;
  for (int l = 0; l < q; ++l) prep.append(g_h(r2[static_cast<std::size_t>(l)]));
  for (int l = 0; l < q; ++l) {
    // qudit l (msd first) carries digit weight d^{q-1-l}
    int mpow = q - 1 - l;
    std::vector<Angle> phases;
    long long Q = modulus_of(d, q);
    long long step = 1;
    for (int i = 0; i < mpow; ++i) step *= d;
    for (int r = 0; r < d; ++r)
      phases.push_back(-Angle(static_cast<__int128>(r) * step, Q));
    prep.append(g_diag(r2[static_cast<std::size_t>(l)], phases));
  }
  append_segment(blk, "delta.prep", prep);

  append_smac_body(blk, d, q, gamma, range_idx(2 * q, q), range_idx(0, q),
                   range_idx(3 * q, q), r2);

  append_segment(blk, "delta.unprep", inverse(prep));
  blk.circuit.validate();
  return blk;
}

}  // namespace quarc
