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

#include <random>

#include "quarc/blocks.hpp"
#include "quarc/oracle.hpp"
#include "quarc/sim.hpp"

using namespace quarc;

namespace {

StateVector random_state(const QuditSystem& sys, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  StateVector s = StateVector::basis(sys, 0);
  double norm = 0;
  for (auto& a : s.amps) {
    a = Cx(gauss(rng), gauss(rng));
    norm += std::norm(a);
  }
  norm = std::sqrt(norm);
  for (auto& a : s.amps) a /= norm;
  return s;
}

/// Independent reference: embed the gate's local matrix at its qudits by
/// plain index arithmetic over the full Hilbert space.
CMat embed_full(const GateSpec& g, const QuditSystem& sys) {
  CMat local = gate_matrix(g, sys.d);
  std::uint64_t dim = sys.dimension();
  int nq = static_cast<int>(g.qudits.size());
  auto stride = [&](int qudit) {
    std::uint64_t s = 1;
    for (int i = sys.w - 1 - qudit; i > 0; --i) s *= static_cast<std::uint64_t>(sys.d);
    return s;
  };
  CMat full = CMat::Zero(static_cast<Eigen::Index>(dim),
                         static_cast<Eigen::Index>(dim));
  for (std::uint64_t col = 0; col < dim; ++col) {
    // local column index from the digits at g.qudits
    long long lcol = 0;
    for (int i = 0; i < nq; ++i)
      lcol = lcol * sys.d +
             static_cast<long long>(col / stride(g.qudits[static_cast<std::size_t>(i)]) %
                                    static_cast<std::uint64_t>(sys.d));
    for (long long lrow = 0; lrow < local.rows(); ++lrow) {
      Cx v = local(lrow, lcol);
      if (v == Cx(0, 0)) continue;
      // replace the digits of col at g.qudits with those of lrow
      std::uint64_t row = col;
      long long rest = lrow;
      for (int i = nq - 1; i >= 0; --i) {
        std::uint64_t st = stride(g.qudits[static_cast<std::size_t>(i)]);
        int old_digit = static_cast<int>(col / st % static_cast<std::uint64_t>(sys.d));
        int new_digit = static_cast<int>(rest % sys.d);
        rest /= sys.d;
        row += (static_cast<std::uint64_t>(new_digit) -
                static_cast<std::uint64_t>(old_digit)) *
               st;
      }
      full(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v;
    }
  }
  return full;
}

}  // namespace

TEST_CASE("basic gate application") {
  QuditSystem sys(3, 1);
  StateVector s = StateVector::basis(sys, 0);
  apply_gate(s, g_x(0, 0, 1));
  CHECK(std::abs(s.amps[1] - Cx(1, 0)) <= 1e-15);

  StateVector h = StateVector::basis(sys, 1);
  apply_gate(h, g_h(0));
  for (int r = 0; r < 3; ++r) {
    Cx want = Angle(r, 3).unit() / std::sqrt(3.0);
    CHECK(std::abs(h.amps[static_cast<std::uint64_t>(r)] - want) <= 1e-14);
  }

  QuditSystem two(3, 2);
  StateVector g = StateVector::basis(two, 2 * 3 + 0);  // |2>|0>
  apply_gate(g, g_gcx(0, 1, 2, 0, 1));
  CHECK(std::abs(g.amps[2 * 3 + 1] - Cx(1, 0)) <= 1e-15);
}

TEST_CASE("apply_gate equals the embedded gate matrix") {
  QuditSystem sys(3, 3);
  std::vector<GateSpec> gates = {
      g_x(1, 0, 2),
      g_rot(GateKind::RZ, 2, 0, 1, Angle(1, 9)),
      g_rot(GateKind::RX, 0, 1, 2, Angle(1, 8)),
      g_h(1),
      g_h_dag(2),
      g_hjk(0, 0, 2),
      g_sjk(1, 1, 2),
      g_tjk(2, 0, 1, true),
      g_phase(0, 2, Angle(3, 7)),
      g_diag(1, {Angle(), Angle(1, 9), Angle(4, 9)}),
      g_gcx(2, 0, 1, 0, 1),
      g_gccx(0, 1, 2, 2, 1, 0, 2),
      g_cd(1, 0, 2, {Angle(1, 9), Angle(2, 9)}),
      g_ccd(2, 0, 1, 1, 0, {Angle(1, 3), Angle(2, 3)}),
      g_rk(0, 2, 2),
      g_rbark(2, 1, 0, 1, -1),
      g_swap(0, 2),
      g_perm({0, 1, 2}, {1, 2, 0}),
  };
  int seed = 0;
  for (const auto& g : gates) {
    StateVector s = random_state(sys, static_cast<unsigned>(100 + seed++));
    CMat full = embed_full(g, sys);
    CVec ref = full * Eigen::Map<const CVec>(s.amps.data(),
                                             static_cast<Eigen::Index>(s.dim()));
    apply_gate(s, g);
    double diff = 0;
    for (std::uint64_t i = 0; i < s.dim(); ++i)
      diff = std::max(diff,
                      std::abs(s.amps[i] - ref(static_cast<Eigen::Index>(i))));
    INFO(kind_name(g.kind));
    CHECK(diff <= 1e-12);
  }
}

TEST_CASE("run_circuit basics") {
  auto add = build_add(3, 2, true);
  Circuit empty;
  empty.system = add.circuit.system;
  StateVector s = random_state(add.circuit.system, 7);
  StateVector same = run_circuit(s, empty);
  CHECK(same.amps == s.amps);

  // QFT then inverse QFT restores a random state
  auto qft = build_qft(3, 2);
  QuditSystem sys(3, 2);
  StateVector r = random_state(sys, 11);
  StateVector round = run_circuit(
      run_circuit(r, qft.circuit), inverse(qft.circuit));
  double diff = 0;
  for (std::uint64_t i = 0; i < r.dim(); ++i)
    diff = std::max(diff, std::abs(round.amps[i] - r.amps[i]));
  CHECK(diff <= 1e-10);

  // |7>|4> -> |7>|2> for d=3, q=2
  StateVector in = StateVector::basis(add.circuit.system, 7 * 9 + 4);
  StateVector out = run_circuit(in, add.circuit);
  CHECK(std::norm(out.amps[7 * 9 + 2]) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("circuit_unitary") {
  auto qft = build_qft(3, 2);
  CHECK(max_entry_diff(circuit_unitary(qft.circuit), dft_matrix(3, 2)) <=
        1e-10);

  Circuit id;
  id.system = QuditSystem(3, 2);
  CHECK(max_entry_diff(circuit_unitary(id), CMat::Identity(9, 9)) == 0.0);

  Circuit rz;
  rz.system = QuditSystem(3, 1);
  rz.append(g_rot(GateKind::RZ, 0, 0, 1, Angle(1, 9)));
  CHECK(max_entry_diff(circuit_unitary(rz), gate_matrix(rz.gates[0], 3)) <=
        1e-15);

  Circuit big;
  big.system = QuditSystem(3, 8);
  CHECK_THROWS(circuit_unitary(big));  // 6561 over the default cap
  CHECK_NOTHROW(circuit_unitary(big, 7000));
}

TEST_CASE("equal_up_to_global_phase") {
  CMat u = dft_matrix(3, 1);
  PhaseCompare same = equal_up_to_global_phase(
      std::polar(1.0, M_PI / 7) * u, u, 1e-10);
  CHECK(same.equal);
  CHECK(same.phase == doctest::Approx(M_PI / 7));

  CMat x = gates::x_jk(2, 0, 1);
  CHECK_FALSE(equal_up_to_global_phase(CMat::Identity(2, 2), x, 1e-10).equal);
}

TEST_CASE("reduced purity") {
  QuditSystem sys(3, 2, {{"a", 0, 1}, {"b", 1, 1}});
  StateVector product = StateVector::basis(sys, 4);
  CHECK(reduced_purity(product, sys.reg("a")) == doctest::Approx(1.0));

  StateVector bell = StateVector::basis(sys, 0);
  for (auto& a : bell.amps) a = 0;
  double w = 1.0 / std::sqrt(3.0);
  bell.amps[0 * 3 + 0] = w;
  bell.amps[1 * 3 + 1] = w;
  bell.amps[2 * 3 + 2] = w;
  CHECK(reduced_purity(bell, sys.reg("a")) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("norm preservation over a long circuit") {
  auto smac = build_smac(3, 2, 2);
  StateVector s = random_state(smac.circuit.system, 23);
  StateVector out = run_circuit(s, smac.circuit);
  CHECK(std::abs(out.norm() - 1.0) <= 1e-9);
}

TEST_CASE("register helpers") {
  QuditSystem sys(3, 4, {{"hi", 0, 2}, {"lo", 2, 2}});
  StateVector s = StateVector::basis(sys, 0);
  std::uint64_t n = s.index_of({7, 5});
  CHECK(s.register_value(n, sys.reg("hi")) == 7);
  CHECK(s.register_value(n, sys.reg("lo")) == 5);
  CHECK(n == 7 * 9 + 5);
  CHECK(register_probability(s, sys.reg("hi"), 0) == doctest::Approx(1.0));
}
