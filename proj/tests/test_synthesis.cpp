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

#include <doctest.h>

#include "quarc/sim.hpp"
#include "quarc/synthesis.hpp"

using namespace quarc;

namespace {

CMat composed(const Decomposition& dec) {
  return dec.global_phase.unit() * circuit_unitary(dec.as_circuit(), 1u << 20);
}

long long ipow(int b, int e) {
  long long v = 1;
  for (int i = 0; i < e; ++i) v *= b;
  return v;
}

std::vector<Angle> rk_phis(int d, int K, int m) {
  std::vector<Angle> phis;
  for (int l = 1; l < d; ++l)
    phis.emplace_back(static_cast<long long>(m) * l, ipow(d, K));
  return phis;
}

}  // namespace

TEST_CASE("synth_dprime") {
  // one level: the paired chain realizes D'(theta) exactly
  auto dec2 = synth_dprime(2, {Angle(1, 9)});
  CHECK(dec2.sequence.size() == 2);
  CHECK(dec2.verify_defect() <= 1e-12);

  auto dec3 = synth_dprime(3, {Angle(1, 9), Angle(2, 9)});
  CHECK(max_entry_diff(composed(dec3),
                       gates::dprime_gate(3, {Angle(1, 9), Angle(2, 9)})) <=
        1e-10);

  // angles past pi still compose exactly
  auto big = synth_dprime(3, {Angle(5, 9), Angle(7, 9)});
  CHECK(big.verify_defect() <= 1e-12);

  auto zero = synth_dprime(4, {Angle(), Angle(), Angle()});
  CHECK(max_entry_diff(composed(zero), CMat::Identity(4, 4)) <= 1e-12);

  CHECK_THROWS(synth_dprime(3, {Angle(1, 9)}));
}

TEST_CASE("synth_cd_prime structure and matrix") {
  // 4(d-1)+1 gates: 13 at d=3
  auto dec = synth_cd_prime(3, 1, {Angle(1, 9), Angle(2, 9)});
  CHECK(dec.sequence.size() == 13);
  CHECK(max_entry_diff(composed(dec),
                       gates::cd(3, 1, {Angle(1, 9), Angle(2, 9)})) <= 1e-10);

  // off-control columns act as identity (cells cancel)
  CMat u = composed(dec);
  for (int c = 0; c < 3; ++c) {
    if (c == 1) continue;
    CHECK(max_entry_diff(u.block(c * 3, c * 3, 3, 3), CMat::Identity(3, 3)) <=
          1e-12);
  }

  // Fig. 2 reading: chain of cells equals S_m times the controlled-D'
  // with the paper's angle map a_l = phi_l - (1/d) sum(phi)
  std::vector<Angle> phis{Angle(1, 9), Angle(2, 9)};
  Angle g = (phis[0] + phis[1]) / 3;
  std::vector<Angle> as{phis[0] - g, phis[1] - g};
  CMat sm = CMat::Identity(9, 9);
  for (int t = 0; t < 3; ++t) sm(1 * 3 + t, 1 * 3 + t) = g.unit();
  CHECK(max_entry_diff(composed(dec), sm * gates::cdprime(3, 1, as)) <= 1e-10);
}

TEST_CASE("synth_rk counts and matrices") {
  // 4(d-1)^2 elementary gates plus d-1 phase gates
  for (int d = 2; d <= 7; ++d)
    for (int K : {2, 3}) {
      auto dec = synth_rk(d, K);
      long long phase = 0, elementary = 0;
      for (const auto& g : dec.sequence)
        (g.kind == GateKind::PHASE ? phase : elementary)++;
      CHECK(elementary == 4LL * (d - 1) * (d - 1));
      CHECK(phase == d - 1);
    }
  // K=1: same count except d=6, where one cell angle is exactly a half
  // turn and splits into a quarter-turn pair
  for (int d = 2; d <= 7; ++d) {
    auto dec = synth_rk(d, 1);
    long long elementary = 0;
    for (const auto& g : dec.sequence)
      if (g.kind != GateKind::PHASE) elementary++;
    CHECK(elementary == 4LL * (d - 1) * (d - 1) + (d == 6 ? 2 : 0));
  }

  CMat r22 = composed(synth_rk(2, 2));
  CMat want = CMat::Identity(4, 4);
  want(3, 3) = Cx(0, 1);
  CHECK(max_entry_diff(r22, want) <= 1e-10);

  CHECK(max_entry_diff(composed(synth_rk(3, 1)), gates::rk(3, 1)) <= 1e-10);
}

TEST_CASE("synth_gccx") {
  // d=2 reduces to the standard 15-gate Toffoli network
  auto toffoli = synth_gccx(2, 1, 1, 0, 1);
  CHECK(toffoli.sequence.size() == 15);
  CHECK(max_entry_diff(composed(toffoli), gates::gccx(2, 1, 1, 0, 1)) <=
        1e-10);

  auto dec = synth_gccx(3, 2, 1, 0, 1);
  CHECK(max_entry_diff(composed(dec), gates::gccx(3, 2, 1, 0, 1)) <= 1e-10);

  // control pairs other than (m,n) act as identity on the target
  CMat u = composed(dec);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == 2 && b == 1) continue;
      long long base = (a * 3 + b) * 3;
      CHECK(max_entry_diff(u.block(base, base, 3, 3),
                           CMat::Identity(3, 3)) <= 1e-10);
    }

  // gate families stay inside the discrete toolkit
  for (const auto& g : dec.sequence) {
    bool allowed = g.kind == GateKind::H_JK || g.kind == GateKind::T_JK ||
                   g.kind == GateKind::T_JK_DAG || g.kind == GateKind::GCX ||
                   g.kind == GateKind::PHASE || g.kind == GateKind::RZ;
    CHECK(allowed);
  }
}

TEST_CASE("synth_ccd_prime") {
  auto zero = synth_ccd_prime(3, 1, 2, {Angle(), Angle()});
  PhaseCompare pc = equal_up_to_global_phase(
      composed(zero), CMat::Identity(27, 27), 1e-10);
  CHECK(pc.equal);

  auto dec = synth_ccd_prime(3, 1, 2, {Angle(1, 9), Angle(2, 9)});
  CHECK(max_entry_diff(composed(dec),
                       gates::ccd(3, 1, 2, {Angle(1, 9), Angle(2, 9)})) <=
        1e-10);

  CMat u = composed(dec);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == 1 && b == 2) continue;
      long long base = (a * 3 + b) * 3;
      CHECK(max_entry_diff(u.block(base, base, 3, 3),
                           CMat::Identity(3, 3)) <= 1e-10);
    }
}

TEST_CASE("synth_rbark") {
  // d=2, k=1: phase -1 exactly at |1,1,1>
  CMat u = composed(synth_rbark(2, 1));
  CMat want = CMat::Identity(8, 8);
  want(7, 7) = Cx(-1, 0);
  CHECK(max_entry_diff(u, want) <= 1e-10);

  CHECK(max_entry_diff(composed(synth_rbark(3, 2)), gates::rbark(3, 2)) <=
        1e-10);
}

TEST_CASE("decomposition of the inverse equals inverse of the decomposition") {
  auto dec = synth_rk(3, 2);
  Circuit fwd = dec.as_circuit();
  // inverse R_k expands through gate inversion of the sequence
  CMat inv_of_dec = circuit_unitary(inverse(fwd));
  CMat dec_of_inv = gates::rk(3, 2, -1);
  CHECK(max_entry_diff(inv_of_dec, dec_of_inv) <= 1e-10);
}

TEST_CASE("verification grid d in {2,3,4}, k <= 3") {
  for (int d : {2, 3, 4}) {
    for (int K : {1, 2, 3}) {
      CHECK(synth_rk(d, K).verify_defect() <= 1e-10);
      CHECK(synth_rbark(d, K).verify_defect() <= 1e-10);
    }
    for (int m = 0; m < d; ++m) {
      CHECK(synth_cd_prime(d, m, rk_phis(d, 2, std::max(1, m))).verify_defect() <=
            1e-10);
      for (int n = 0; n < d; ++n)
        CHECK(synth_ccd_prime(d, m, n, rk_phis(d, 2, 1)).verify_defect() <=
              1e-10);
    }
  }
}
