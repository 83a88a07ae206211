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

#include "quarc/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace quarc {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

void require(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

}  // namespace

void QuditSystem::check() const {
  require(d >= 2, "QuditSystem: d must be >= 2");
  require(w >= 1, "QuditSystem: w must be >= 1");
  if (registers.empty()) return;
  std::vector<char> covered(static_cast<std::size_t>(w), 0);
  for (const auto& r : registers) {
    require(r.size >= 1 && r.start >= 0 && r.start + r.size <= w,
            "QuditSystem: register '" + r.name + "' out of range");
    for (int q = r.start; q < r.start + r.size; ++q) {
      require(!covered[static_cast<std::size_t>(q)],
              "QuditSystem: overlapping registers at qudit " +
                  std::to_string(q));
      covered[static_cast<std::size_t>(q)] = 1;
    }
  }
  for (int q = 0; q < w; ++q)
    require(covered[static_cast<std::size_t>(q)],
            "QuditSystem: registers do not cover qudit " + std::to_string(q));
}

const Register& QuditSystem::reg(const std::string& name) const {
  for (const auto& r : registers)
    if (r.name == name) return r;
  fail("QuditSystem: no register named '" + name + "'");
}

std::uint64_t QuditSystem::dimension() const {
  std::uint64_t dim = 1;
  for (int i = 0; i < w; ++i) {
    require(dim <= UINT64_MAX / static_cast<std::uint64_t>(d),
            "QuditSystem: dimension overflows 64 bits");
    dim *= static_cast<std::uint64_t>(d);
  }
  return dim;
}

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::X_JK: return "X";
    case GateKind::RZ: return "RZ";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::H: return "H";
    case GateKind::H_DAG: return "HDAG";
    case GateKind::H_JK: return "HJK";
    case GateKind::S_JK: return "SJK";
    case GateKind::S_JK_DAG: return "SJKD";
    case GateKind::T_JK: return "TJK";
    case GateKind::T_JK_DAG: return "TJKD";
    case GateKind::PHASE: return "PH";
    case GateKind::DIAG: return "DIAG";
    case GateKind::GCX: return "GCX";
    case GateKind::GCCX: return "GCCX";
    case GateKind::CD: return "CD";
    case GateKind::CCD: return "CCD";
    case GateKind::RK: return "RK";
    case GateKind::RBARK: return "RBK";
    case GateKind::SWAP: return "SWAP";
    case GateKind::PERM: return "PERM";
  }
  return "?";
}

bool kind_is_diagonal(GateKind k) {
  switch (k) {
    case GateKind::RZ:
    case GateKind::S_JK:
    case GateKind::S_JK_DAG:
    case GateKind::T_JK:
    case GateKind::T_JK_DAG:
    case GateKind::PHASE:
    case GateKind::DIAG:
    case GateKind::CD:
    case GateKind::CCD:
    case GateKind::RK:
    case GateKind::RBARK:
      return true;
    default:
      return false;
  }
}

bool kind_is_self_inverse(GateKind k) {
  switch (k) {
    case GateKind::X_JK:
    case GateKind::H_JK:
    case GateKind::GCX:
    case GateKind::GCCX:
    case GateKind::SWAP:
      return true;
    default:
      return false;
  }
}

int kind_arity(GateKind k) {
  switch (k) {
    case GateKind::GCX:
    case GateKind::CD:
    case GateKind::RK:
    case GateKind::SWAP:
      return 2;
    case GateKind::GCCX:
    case GateKind::CCD:
    case GateKind::RBARK:
      return 3;
    case GateKind::PERM:
      return 0;
    default:
      return 1;
  }
}

void GateSpec::validate(const QuditSystem& sys) const {
  int arity = kind_arity(kind);
  if (arity != 0)
    require(static_cast<int>(qudits.size()) == arity,
            std::string(kind_name(kind)) + ": expected " +
                std::to_string(arity) + " qudits");
  require(!qudits.empty(), std::string(kind_name(kind)) + ": no qudits");
  for (std::size_t a = 0; a < qudits.size(); ++a) {
    require(qudits[a] >= 0 && qudits[a] < sys.w,
            std::string(kind_name(kind)) + ": qudit index out of range");
    for (std::size_t b = a + 1; b < qudits.size(); ++b)
      require(qudits[a] != qudits[b],
              std::string(kind_name(kind)) + ": duplicate qudit index");
  }

  auto check_levels = [&] {
    require(j >= 0 && k > j && k < sys.d,
            std::string(kind_name(kind)) + ": need 0 <= j < k < d");
  };
  auto check_m = [&](int v, const char* what) {
    require(v >= 0 && v < sys.d,
            std::string(kind_name(kind)) + ": " + what + " out of [0,d)");
  };

  switch (kind) {
    case GateKind::X_JK:
    case GateKind::H_JK:
    case GateKind::S_JK:
    case GateKind::S_JK_DAG:
    case GateKind::T_JK:
    case GateKind::T_JK_DAG:
      check_levels();
      break;
    case GateKind::RZ:
    case GateKind::RX:
    case GateKind::RY:
      check_levels();
      require(angles.size() == 1, "rotation: exactly one angle");
      break;
    case GateKind::H:
    case GateKind::H_DAG:
      break;
    case GateKind::PHASE:
      check_m(m, "level m");
      require(angles.size() == 1, "PH: exactly one angle");
      break;
    case GateKind::DIAG:
      require(static_cast<int>(angles.size()) == sys.d,
              "DIAG: expected d angles");
      break;
    case GateKind::GCX:
      check_levels();
      check_m(m, "control value m");
      break;
    case GateKind::GCCX:
      check_levels();
      check_m(m, "control value m");
      check_m(n, "control value n");
      break;
    case GateKind::CD:
      check_m(m, "control value m");
      require(static_cast<int>(angles.size()) == sys.d - 1,
              "CD: expected d-1 angles");
      break;
    case GateKind::CCD:
      check_m(m, "control value m");
      check_m(n, "control value n");
      require(static_cast<int>(angles.size()) == sys.d - 1,
              "CCD: expected d-1 angles");
      break;
    case GateKind::RK:
    case GateKind::RBARK:
      require(K >= 1 && K <= 127, "R_k: K out of range");
      require(sign == 1 || sign == -1, "R_k: sign must be +-1");
      break;
    case GateKind::SWAP:
      break;
    case GateKind::PERM: {
      require(perm.size() == qudits.size(), "PERM: size mismatch");
      std::vector<char> seen(perm.size(), 0);
      for (int p : perm) {
        require(p >= 0 && p < static_cast<int>(perm.size()),
                "PERM: entry out of range");
        require(!seen[static_cast<std::size_t>(p)], "PERM: not a permutation");
        seen[static_cast<std::size_t>(p)] = 1;
      }
      break;
    }
  }
}

GateSpec GateSpec::inverse() const {
  GateSpec g = *this;
  if (kind_is_self_inverse(kind)) return g;
  switch (kind) {
    case GateKind::H:
      g.kind = GateKind::H_DAG;
      return g;
    case GateKind::H_DAG:
      g.kind = GateKind::H;
      return g;
    case GateKind::S_JK:
      g.kind = GateKind::S_JK_DAG;
      return g;
    case GateKind::S_JK_DAG:
      g.kind = GateKind::S_JK;
      return g;
    case GateKind::T_JK:
      g.kind = GateKind::T_JK_DAG;
      return g;
    case GateKind::T_JK_DAG:
      g.kind = GateKind::T_JK;
      return g;
    case GateKind::RK:
    case GateKind::RBARK:
      g.sign = -sign;
      return g;
    case GateKind::PERM: {
      for (std::size_t i = 0; i < perm.size(); ++i)
        g.perm[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
      return g;
    }
    default:
      for (auto& a : g.angles) a = -a;
      return g;
  }
}

bool GateSpec::operator==(const GateSpec& o) const {
  return kind == o.kind && qudits == o.qudits && j == o.j && k == o.k &&
         m == o.m && n == o.n && angles == o.angles && K == o.K &&
         sign == o.sign && perm == o.perm;
}

namespace {

void order_levels(int& j, int& k) {
  if (j > k) std::swap(j, k);
  if (j == k) fail("two-level gate: j == k");
}

}  // namespace

GateSpec g_x(int qudit, int j, int k) {
  order_levels(j, k);
  GateSpec g;
  g.kind = GateKind::X_JK;
  g.qudits = {qudit};
  g.j = j;
  g.k = k;
  return g;
}

GateSpec g_rot(GateKind axis, int qudit, int j, int k, const Angle& theta) {
  if (axis != GateKind::RZ && axis != GateKind::RX && axis != GateKind::RY)
    fail("g_rot: axis must be RZ/RX/RY");
  order_levels(j, k);
  GateSpec g;
  g.kind = axis;
  g.qudits = {qudit};
  g.j = j;
  g.k = k;
  g.angles = {theta};
  return g;
}

GateSpec g_h(int qudit) {
  GateSpec g;
  g.kind = GateKind::H;
  g.qudits = {qudit};
  return g;
}

GateSpec g_h_dag(int qudit) {
  GateSpec g;
  g.kind = GateKind::H_DAG;
  g.qudits = {qudit};
  return g;
}

GateSpec g_hjk(int qudit, int j, int k) {
  order_levels(j, k);
  GateSpec g;
  g.kind = GateKind::H_JK;
  g.qudits = {qudit};
  g.j = j;
  g.k = k;
  return g;
}

GateSpec g_sjk(int qudit, int j, int k, bool dagger) {
  order_levels(j, k);
  GateSpec g;
  g.kind = dagger ? GateKind::S_JK_DAG : GateKind::S_JK;
  g.qudits = {qudit};
  g.j = j;
  g.k = k;
  return g;
}

GateSpec g_tjk(int qudit, int j, int k, bool dagger) {
  order_levels(j, k);
  GateSpec g;
  g.kind = dagger ? GateKind::T_JK_DAG : GateKind::T_JK;
  g.qudits = {qudit};
  g.j = j;
  g.k = k;
  return g;
}

GateSpec g_phase(int qudit, int level, const Angle& a) {
  GateSpec g;
  g.kind = GateKind::PHASE;
  g.qudits = {qudit};
  g.m = level;
  g.angles = {a};
  return g;
}

GateSpec g_diag(int qudit, std::vector<Angle> phases) {
  GateSpec g;
  g.kind = GateKind::DIAG;
  g.qudits = {qudit};
  g.angles = std::move(phases);
  return g;
}

GateSpec g_gcx(int control, int target, int m, int j, int k) {
  order_levels(j, k);
  GateSpec g;
  g.kind = GateKind::GCX;
  g.qudits = {control, target};
  g.m = m;
  g.j = j;
  g.k = k;
  return g;
}

GateSpec g_gccx(int c1, int c2, int target, int m, int n, int j, int k) {
  order_levels(j, k);
  GateSpec g;
  g.kind = GateKind::GCCX;
  g.qudits = {c1, c2, target};
  g.m = m;
  g.n = n;
  g.j = j;
  g.k = k;
  return g;
}

GateSpec g_cd(int control, int target, int m, std::vector<Angle> phis) {
  GateSpec g;
  g.kind = GateKind::CD;
  g.qudits = {control, target};
  g.m = m;
  g.angles = std::move(phis);
  return g;
}

GateSpec g_ccd(int c1, int c2, int target, int m, int n,
               std::vector<Angle> phis) {
  GateSpec g;
  g.kind = GateKind::CCD;
  g.qudits = {c1, c2, target};
  g.m = m;
  g.n = n;
  g.angles = std::move(phis);
  return g;
}

GateSpec g_rk(int control, int target, int K, int sign) {
  GateSpec g;
  g.kind = GateKind::RK;
  g.qudits = {control, target};
  g.K = K;
  g.sign = sign;
  return g;
}

GateSpec g_rbark(int c1, int c2, int target, int K, int sign) {
  GateSpec g;
  g.kind = GateKind::RBARK;
  g.qudits = {c1, c2, target};
  g.K = K;
  g.sign = sign;
  return g;
}

GateSpec g_swap(int a, int b) {
  GateSpec g;
  g.kind = GateKind::SWAP;
  g.qudits = {a, b};
  return g;
}

GateSpec g_perm(std::vector<int> qudits, std::vector<int> perm) {
  GateSpec g;
  g.kind = GateKind::PERM;
  g.qudits = std::move(qudits);
  g.perm = std::move(perm);
  return g;
}

void Circuit::append(const Circuit& other) {
  if (!(system == other.system))
    fail("Circuit::append: register layout mismatch");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (!(a.system == b.system)) fail("compose: system mismatch");
  Circuit c = a;
  c.gates.insert(c.gates.end(), b.gates.begin(), b.gates.end());
  return c;
}

Circuit inverse(const Circuit& c) {
  Circuit r;
  r.system = c.system;
  r.label = c.label.empty() ? "" : c.label + "_inv";
  r.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it)
    r.gates.push_back(it->inverse());
  return r;
}

}  // namespace quarc
