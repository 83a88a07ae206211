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

#include "quarc/blocks.hpp"
#include "quarc/sim.hpp"

using namespace quarc;

namespace {

Circuit assorted_circuit() {
  Circuit c;
  c.system = QuditSystem(3, 3);
  c.append(g_h(0));
  c.append(g_rot(GateKind::RZ, 1, 0, 2, Angle(1, 9)));
  c.append(g_gcx(0, 1, 2, 0, 1));
  c.append(g_rk(1, 2, 2));
  c.append(g_cd(0, 2, 1, {Angle(1, 9), Angle(2, 9)}));
  c.append(g_rbark(0, 1, 2, 1));
  c.append(g_perm({0, 1, 2}, {2, 0, 1}));
  c.append(g_diag(1, {Angle(), Angle(1, 3), Angle(2, 3)}));
  return c;
}

}  // namespace

TEST_CASE("system invariants") {
  CHECK_THROWS(QuditSystem(1, 2));
  CHECK_THROWS(QuditSystem(3, 0));
  CHECK_THROWS(QuditSystem(3, 4, {{"a", 0, 2}, {"b", 1, 2}}));  // overlap
  CHECK_THROWS(QuditSystem(3, 4, {{"a", 0, 2}}));               // gap
  QuditSystem sys(3, 4, {{"a", 0, 2}, {"b", 2, 2}});
  CHECK(sys.reg("b").start == 2);
  CHECK(sys.dimension() == 81);
}

TEST_CASE("gate validation") {
  QuditSystem sys(3, 2);
  CHECK_THROWS(g_x(0, 1, 1));  // equal levels
  GateSpec bad = g_x(0, 0, 2);
  bad.k = 5;
  CHECK_THROWS(bad.validate(sys));
  GateSpec dup = g_gcx(1, 1, 0, 0, 1);
  CHECK_THROWS(dup.validate(sys));
  GateSpec range = g_gcx(0, 1, 3, 0, 1);
  CHECK_THROWS(range.validate(sys));
  CHECK_NOTHROW(g_gcx(0, 1, 2, 0, 1).validate(sys));
}

TEST_CASE("inverse is an involution and negates angles") {
  Circuit c = assorted_circuit();
  Circuit cc = inverse(inverse(c));
  REQUIRE(cc.gates.size() == c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i)
    CHECK(cc.gates[i] == c.gates[i]);

  // inverse of R_z(2*pi/9) stores 2*pi*8/9
  Circuit rz;
  rz.system = QuditSystem(3, 1);
  rz.append(g_rot(GateKind::RZ, 0, 0, 1, Angle(1, 9)));
  Circuit inv = inverse(rz);
  CHECK(inv.gates[0].angles[0] == Angle(8, 9));

  // self-inverse kinds unchanged; H turns into HDAG
  Circuit h;
  h.system = QuditSystem(3, 1);
  h.append(g_h(0));
  h.append(g_x(0, 0, 2));
  Circuit hi = inverse(h);
  CHECK(hi.gates[0].kind == GateKind::X_JK);
  CHECK(hi.gates[1].kind == GateKind::H_DAG);
}

TEST_CASE("compose basics") {
  Circuit c = assorted_circuit();
  Circuit empty;
  empty.system = c.system;
  Circuit both = compose(c, empty);
  CHECK(both.gates.size() == c.gates.size());

  Circuit other;
  other.system = QuditSystem(3, 2);
  CHECK_THROWS(compose(c, other));
}

TEST_CASE("inverse QFT composes to identity") {
  auto qft = build_qft(3, 2);
  Circuit round = compose(qft.circuit, inverse(qft.circuit));
  CMat u = circuit_unitary(round);
  CHECK(max_entry_diff(u, CMat::Identity(9, 9)) <= 1e-10);
}

TEST_CASE("compose is associative and anti-distributes over inverse") {
  auto a = build_addc(3, 2, 4, true).circuit;
  auto b = build_addc(3, 2, 7, true).circuit;
  auto c = build_add(3, 2, false).circuit;
  // associativity at the unitary level
  CMat u1 = circuit_unitary(compose(compose(a, b), c));
  CMat u2 = circuit_unitary(compose(a, compose(b, c)));
  CHECK(max_entry_diff(u1, u2) <= 1e-10);
  // inverse(compose(a,b)) == compose(inverse(b), inverse(a))
  CMat v1 = circuit_unitary(inverse(compose(a, b)));
  CMat v2 = circuit_unitary(compose(inverse(b), inverse(a)));
  CHECK(max_entry_diff(v1, v2) <= 1e-10);
}

TEST_CASE("unitary of a composition is the product") {
  auto a = build_addc(2, 2, 1, true).circuit;
  auto b = build_addc(2, 2, 2, true).circuit;
  CMat ua = circuit_unitary(a), ub = circuit_unitary(b);
  CMat uc = circuit_unitary(compose(a, b));
  CHECK(max_entry_diff(uc, ub * ua) <= 1e-10);
}
