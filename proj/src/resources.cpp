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

#include "quarc/resources.hpp"

#include <cmath>
#include <stdexcept>

#include "quarc/synthesis.hpp"

namespace quarc {

namespace {

bool is_leaf(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::H_DAG:
    case GateKind::RZ:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::GCX:
    case GateKind::H_JK:
    case GateKind::S_JK:
    case GateKind::S_JK_DAG:
    case GateKind::T_JK:
    case GateKind::T_JK_DAG:
    case GateKind::PHASE:
    case GateKind::SWAP:
    case GateKind::PERM:
      return true;
    default:
      return false;
  }
}

/// Rewrites a locally-indexed decomposition sequence onto actual qudits,
/// recursing until only leaf kinds remain.
void append_remapped(std::vector<GateSpec>& out,
                     const std::vector<GateSpec>& seq,
                     const std::vector<int>& qudits, int d) {
  for (GateSpec g : seq) {
    for (auto& q : g.qudits) q = qudits[static_cast<std::size_t>(q)];
    if (is_leaf(g.kind)) {
      out.push_back(std::move(g));
    } else {
      auto sub = expand_gate(g, d);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
}

const char* family_of(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::H_DAG:
      return "H(d)";
    case GateKind::RZ:
      return "Rz";
    case GateKind::RX:
      return "Rx";
    case GateKind::RY:
      return "Ry";
    case GateKind::GCX:
      return "GCX";
    case GateKind::H_JK:
      return "H(jk)";
    case GateKind::S_JK:
    case GateKind::S_JK_DAG:
      return "S(jk)";
    case GateKind::T_JK:
    case GateKind::T_JK_DAG:
      return "T(jk)";
    default:
      return nullptr;
  }
}

}  // namespace

std::vector<GateSpec> expand_gate(const GateSpec& g, int d) {
  if (is_leaf(g.kind)) return {g};
  std::vector<GateSpec> out;
  switch (g.kind) {
    case GateKind::X_JK:
      return expand_two_level(g);
    case GateKind::DIAG:
      return expand_diag(g, d);
    case GateKind::CD: {
      Decomposition dec = synth_cd_prime(d, g.m, g.angles);
      append_remapped(out, dec.sequence, g.qudits, d);
      return out;
    }
    case GateKind::CCD: {
      Decomposition dec = synth_ccd_prime(d, g.m, g.n, g.angles);
      append_remapped(out, dec.sequence, g.qudits, d);
      return out;
    }
    case GateKind::RK: {
      Decomposition dec = synth_rk(d, g.K);
      std::vector<GateSpec> seq = dec.sequence;
      if (g.sign < 0) {
        std::vector<GateSpec> rev;
        for (auto it = seq.rbegin(); it != seq.rend(); ++it)
          rev.push_back(it->inverse());
        seq = std::move(rev);
      }
      append_remapped(out, seq, g.qudits, d);
      return out;
    }
    case GateKind::RBARK: {
      Decomposition dec = synth_rbark(d, g.K);
      std::vector<GateSpec> seq = dec.sequence;
      if (g.sign < 0) {
        std::vector<GateSpec> rev;
        for (auto it = seq.rbegin(); it != seq.rend(); ++it)
          rev.push_back(it->inverse());
        seq = std::move(rev);
      }
      append_remapped(out, seq, g.qudits, d);
      return out;
    }
    case GateKind::GCCX: {
      Decomposition dec = synth_gccx(d, g.m, g.n, g.j, g.k);
      append_remapped(out, dec.sequence, g.qudits, d);
      return out;
    }
    default:
      throw std::invalid_argument(std::string("expand_gate: cannot expand ") +
                                  kind_name(g.kind));
  }
}

Circuit expand_circuit(const Circuit& c) {
  Circuit out;
  out.system = c.system;
  out.label = c.label.empty() ? "expanded" : c.label + "_elem";
  for (const auto& g : c.gates) {
    auto seq = expand_gate(g, c.system.d);
    out.gates.insert(out.gates.end(), seq.begin(), seq.end());
  }
  return out;
}

ResourceReport count_elementary(const Circuit& c) {
  ResourceReport rep;
  rep.width = c.system.w;

  // Expansion gate counts depend only on structure, so identical R_k /
  // Rbar_k instances are expanded once.
  std::map<std::string, std::map<std::string, long long>> memo;
  auto key_of = [](const GateSpec& g) {
    std::string key = kind_name(g.kind);
    key += ":" + std::to_string(g.K) + ":" + std::to_string(g.sign);
    return key;
  };

  for (const auto& g : c.gates) {
    rep.basic[kind_name(g.kind)]++;
    if (g.kind != GateKind::PERM) rep.basic_total++;

    std::map<std::string, long long> counts;
    bool memoizable = g.kind == GateKind::RK || g.kind == GateKind::RBARK ||
                      g.kind == GateKind::GCCX;
    std::string key = memoizable ? key_of(g) : std::string();
    if (memoizable && g.kind == GateKind::GCCX)
      key += ":" + std::to_string(g.m) + ":" + std::to_string(g.n);
    auto hit = memoizable ? memo.find(key) : memo.end();
    if (hit != memo.end()) {
      counts = hit->second;
    } else {
      for (const auto& e : expand_gate(g, c.system.d)) {
        if (e.kind == GateKind::PHASE)
          counts["phase"]++;
        else if (e.kind == GateKind::SWAP)
          counts["swap"]++;
        else if (e.kind == GateKind::PERM)
          ;  // relabeling costs nothing
        else
          counts[family_of(e.kind)]++;
      }
      if (memoizable) memo[key] = counts;
    }
    for (const auto& [fam, cnt] : counts) {
      if (fam == "phase")
        rep.phase_gates += cnt;
      else if (fam == "swap")
        rep.swap_gates += cnt;
      else {
        rep.elementary[fam] += cnt;
        rep.elementary_total += cnt;
      }
    }
  }
  return rep;
}

namespace {

struct Scheduler {
  std::vector<std::vector<char>> busy;  // [qudit][layer]
  std::vector<std::size_t> hint;        // first possibly-free layer
  long long depth = 0;

  explicit Scheduler(int w)
      : busy(static_cast<std::size_t>(w)), hint(static_cast<std::size_t>(w), 0) {}

  std::size_t first_free(int q, std::size_t from) {
    auto& b = busy[static_cast<std::size_t>(q)];
    std::size_t l = std::max(from, hint[static_cast<std::size_t>(q)]);
    while (l < b.size() && b[l]) ++l;
    return l;
  }

  void occupy(int q, std::size_t layer) {
    auto& b = busy[static_cast<std::size_t>(q)];
    if (layer >= b.size()) b.resize(layer + 1, 0);
    b[layer] = 1;
    auto& h = hint[static_cast<std::size_t>(q)];
    while (h < b.size() && b[h]) ++h;
  }

  std::size_t place(const std::vector<int>& qudits, std::size_t earliest) {
    // fixpoint of cand -> max over qudits of first free layer >= cand
    std::size_t cand = earliest;
    for (;;) {
      std::size_t next = cand;
      for (int q : qudits) next = std::max(next, first_free(q, next));
      if (next == cand) break;
      cand = next;
    }
    for (int q : qudits) occupy(q, cand);
    depth = std::max<long long>(depth, static_cast<long long>(cand) + 1);
    return cand;
  }
};

/// One greedy ASAP pass: gates are visited in the given priority order,
/// each goes to the first layer at/after its dependency frontier with
/// all its qudits free. Ordering constraints: PERM is a barrier; a gate
/// must follow every earlier non-commuting gate sharing a qudit with it
/// (two diagonal gates always commute). Visiting order must respect
/// those constraints, which the caller guarantees by only permuting
/// mutually commuting gates.
std::vector<std::size_t> greedy_pass(const Circuit& c,
                                     const std::vector<std::size_t>& order,
                                     long long* depth_out) {
  Scheduler sched(c.system.w);
  std::vector<long long> last_any(static_cast<std::size_t>(c.system.w), -1);
  std::vector<long long> last_nondiag(static_cast<std::size_t>(c.system.w), -1);
  std::vector<std::size_t> layers(c.gates.size(), 0);

  for (std::size_t i : order) {
    const GateSpec& g = c.gates[i];
    if (g.kind == GateKind::PERM) {
      long long mx = -1;
      for (int q : g.qudits)
        mx = std::max(mx, last_any[static_cast<std::size_t>(q)]);
      for (int q : g.qudits) {
        last_any[static_cast<std::size_t>(q)] = mx;
        last_nondiag[static_cast<std::size_t>(q)] = mx;
      }
      layers[i] = static_cast<std::size_t>(mx + 1);
      continue;
    }
    bool diag = kind_is_diagonal(g.kind);
    long long earliest = 0;
    for (int q : g.qudits) {
      long long pred = diag ? last_nondiag[static_cast<std::size_t>(q)]
                            : last_any[static_cast<std::size_t>(q)];
      earliest = std::max(earliest, pred + 1);
    }
    std::size_t layer = sched.place(g.qudits, static_cast<std::size_t>(earliest));
    layers[i] = layer;
    for (int q : g.qudits) {
      last_any[static_cast<std::size_t>(q)] =
          std::max(last_any[static_cast<std::size_t>(q)],
                   static_cast<long long>(layer));
      if (!diag)
        last_nondiag[static_cast<std::size_t>(q)] =
            std::max(last_nondiag[static_cast<std::size_t>(q)],
                     static_cast<long long>(layer));
    }
  }
  if (depth_out) *depth_out = sched.depth;
  return layers;
}

/// Stable-sorts each maximal run of consecutive diagonal gates by the
/// key (indexed by gate position); such gates mutually commute, so any
/// permutation inside a run is sound regardless of shared qudits.
template <typename Key>
std::vector<std::size_t> commuting_run_order(const Circuit& c, Key key) {
  std::vector<std::size_t> order(c.gates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::size_t i = 0;
  while (i < order.size()) {
    if (!kind_is_diagonal(c.gates[i].kind)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < order.size() && kind_is_diagonal(c.gates[j].kind)) ++j;
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(i),
                     order.begin() + static_cast<std::ptrdiff_t>(j),
                     [&](std::size_t a, std::size_t b) {
                       return key(a) < key(b);
                     });
    i = j;
  }
  return order;
}

/**
 * Portfolio of greedy passes: emission order, loaded-qudits-first inside
 * commuting runs, and (for small circuits) seeded jittered variants of
 * the load key. Deterministic; returns the best layering found.
 */
std::vector<std::size_t> schedule_layers(const Circuit& c, long long* depth_out) {
  std::vector<std::size_t> identity(c.gates.size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;

  // per-qudit gate loads
  std::vector<long long> load(static_cast<std::size_t>(c.system.w), 0);
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::PERM) continue;
    for (int q : g.qudits) load[static_cast<std::size_t>(q)]++;
  }
  auto sum_load = [&](std::size_t i) {
    const GateSpec& g = c.gates[i];
    long long s = 0;
    if (g.kind != GateKind::PERM)
      for (int q : g.qudits) s += load[static_cast<std::size_t>(q)];
    return -s;
  };

  long long best_depth = 0;
  std::vector<std::size_t> best =
      greedy_pass(c, identity, &best_depth);

  auto consider = [&](const std::vector<std::size_t>& order) {
    long long depth = 0;
    std::vector<std::size_t> layers = greedy_pass(c, order, &depth);
    if (depth < best_depth) {
      best_depth = depth;
      best = std::move(layers);
    }
  };

  consider(commuting_run_order(c, sum_load));

  if (c.gates.size() <= 1024) {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next_rand = [&state]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> keyval(c.gates.size());
      for (std::size_t i = 0; i < c.gates.size(); ++i)
        keyval[i] = static_cast<double>(sum_load(i)) +
                    static_cast<double>(next_rand() % 4096) / 2048.0 - 1.0;
      consider(commuting_run_order(c, [&](std::size_t i) { return keyval[i]; }));
    }
  }

  if (depth_out) *depth_out = best_depth;
  return best;
}

Circuit maybe_expand(const Circuit& c, DepthLevel level) {
  return level == DepthLevel::elementary ? expand_circuit(c) : c;
}

}  // namespace

long long schedule_depth(const Circuit& c, DepthLevel level) {
  Circuit work = maybe_expand(c, level);
  long long depth = 0;
  schedule_layers(work, &depth);
  return depth;
}

Circuit scheduled_order(const Circuit& c, DepthLevel level) {
  Circuit work = maybe_expand(c, level);
  long long depth = 0;
  std::vector<std::size_t> layers = schedule_layers(work, &depth);
  std::vector<std::size_t> order(work.gates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return layers[a] < layers[b];
                   });
  Circuit out;
  out.system = work.system;
  out.label = work.label + "_scheduled";
  for (std::size_t i : order) out.gates.push_back(work.gates[i]);
  return out;
}

ResourceReport analyze(const ArithmeticBlock& blk, bool with_depth) {
  ResourceReport rep = count_elementary(blk.circuit);
  if (with_depth) {
    rep.depth_basic = schedule_depth(blk.circuit, DepthLevel::basic);
    rep.depth_elementary = schedule_depth(blk.circuit, DepthLevel::elementary);
  }
  for (const auto& [label, range] : blk.segments)
    rep.block_breakdown.emplace_back(
        label, static_cast<long long>(range.second - range.first));
  return rep;
}

FitResult loglog_fit(const std::vector<std::pair<int, double>>& samples) {
  if (samples.size() < 4)
    throw std::invalid_argument("loglog_fit: need at least 4 samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [q, v] : samples) {
    if (q < 1 || v <= 0)
      throw std::invalid_argument("loglog_fit: non-positive sample");
    double x = std::log(static_cast<double>(q));
    double y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(samples.size());
  FitResult fit;
  fit.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.exponent * sx) / n;
  double ss = 0;
  for (const auto& [q, v] : samples) {
    double x = std::log(static_cast<double>(q));
    double r = std::log(v) - (fit.exponent * x + fit.intercept);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

FitResult asymptotic_fit(BlockKind kind, int d, const std::vector<int>& qs,
                         FitMetric metric) {
  std::vector<std::pair<int, double>> samples;
  for (int q : qs) {
    ArithmeticBlock blk;
    switch (kind) {
      case BlockKind::QFT: blk = build_qft(d, q); break;
      case BlockKind::ADD: blk = build_add(d, q, true); break;
      case BlockKind::ADDC: blk = build_addc(d, q, 1, true); break;
      case BlockKind::CADDC: blk = build_caddc(d, q, 1, 1, true); break;
      case BlockKind::GCADDC: blk = build_gcaddc(d, q, 1, true); break;
      case BlockKind::MAC: blk = build_mac(d, q, 1, true); break;
      case BlockKind::MULC: blk = build_mulc(d, q, 1); break;
      case BlockKind::MMAC: blk = build_mmac(d, q, true); break;
      case BlockKind::SMAC: blk = build_smac(d, q, 1); break;
      case BlockKind::DELTA: blk = build_delta(d, q, 1); break;
    }
    double value = 0;
    switch (metric) {
      case FitMetric::elementary_cost:
        value = static_cast<double>(count_elementary(blk.circuit).elementary_total);
        break;
      case FitMetric::basic_depth:
        value = static_cast<double>(
            schedule_depth(blk.circuit, DepthLevel::basic));
        break;
      case FitMetric::rbar_count:
        value = static_cast<double>(
            count_elementary(blk.circuit).basic.count("RBK")
                ? count_elementary(blk.circuit).basic.at("RBK")
                : 0);
        break;
    }
    samples.emplace_back(q, value);
  }
  return loglog_fit(samples);
}

}  // namespace quarc
