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

#include "quarc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace quarc {

std::vector<long long> oracle_eval(const OracleSpec& spec,
                                   const std::vector<long long>& in) {
  const long long M = modulus_of(spec.d, spec.q);
  auto reduce = [M](long long v) { return (v % M + M) % M; };
  auto expect_arity = [&](std::size_t n) {
    if (in.size() != n)
      throw std::invalid_argument("oracle_eval: wrong input arity");
    for (long long v : in)
      if (v < 0) throw std::invalid_argument("oracle_eval: negative input");
  };

  switch (spec.kind) {
    case BlockKind::ADD: {
      expect_arity(2);
      return {in[0], reduce(in[1] + in[0])};
    }
    case BlockKind::ADDC: {
      expect_arity(1);
      return {reduce(in[0] + spec.b)};
    }
    case BlockKind::CADDC: {
      expect_arity(2);
      long long add = in[0] == spec.c ? spec.b : 0;
      return {in[0], reduce(in[1] + add)};
    }
    case BlockKind::GCADDC: {
      expect_arity(2);
      return {in[0], reduce(in[1] + spec.b % M * in[0])};
    }
    case BlockKind::MAC: {
      expect_arity(2);
      return {in[0], reduce(in[1] + spec.b % M * in[0])};
    }
    case BlockKind::MULC: {
      expect_arity(2);
      long long binv = mod_inverse(spec.b, M);
      // (x, w) -> physically (-b^{-1} w, w + b x); the result role maps
      // to the second register, the first returns to zero for w = 0.
      return {reduce(-binv * in[1]), reduce(in[1] + spec.b % M * in[0])};
    }
    case BlockKind::MMAC: {
      expect_arity(3);
      return {in[0], in[1], reduce(in[2] + in[0] * in[1] % M)};
    }
    case BlockKind::SMAC: {
      expect_arity(4);
      long long a1 = in[0], x = in[1], a3 = in[2], z = in[3];
      long long sq = reduce(a3 + reduce(a1 + x) * x % M);
      return {a1, x, a3, reduce(z + spec.gamma % M * sq)};
    }
    case BlockKind::QFT:
    case BlockKind::DELTA:
      throw std::invalid_argument(
          "oracle_eval: block has no basis-permutation oracle");
  }
  throw std::logic_error("oracle_eval: unhandled kind");
}

CMat dft_matrix(int d, int q, std::uint64_t cap) {
  QuditSystem sys(d, q);
  std::uint64_t n = sys.dimension();
  if (n > cap) throw std::invalid_argument("dft_matrix: dimension cap exceeded");
  CMat u(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::uint64_t r = 0; r < n; ++r)
    for (std::uint64_t c = 0; c < n; ++c)
      u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          s * Angle(static_cast<__int128>(r) * c, static_cast<__int128>(n))
                  .unit();
  return u;
}

CVec diag_phase_vector(int d, int q, long long gamma) {
  long long Q = modulus_of(d, q);
  CVec v(static_cast<Eigen::Index>(Q));
  for (long long k = 0; k < Q; ++k)
    v(static_cast<Eigen::Index>(k)) =
        Angle(static_cast<__int128>(gamma) * k % Q * k % Q,
              static_cast<__int128>(Q))
            .unit();
  return v;
}

CheckReport exhaustive_check(const ArithmeticBlock& blk,
                             const OracleSpec& spec, int threads,
                             double min_fidelity) {
  const std::uint64_t dim = blk.circuit.system.dimension();
  StateVector probe = StateVector::basis(blk.circuit.system, 0);
  const auto& regs = blk.circuit.system.registers;

  if (threads <= 0) {
    unsigned hc = std::thread::hardware_concurrency();
    threads = hc == 0 ? 1 : static_cast<int>(hc);
  }
  threads = std::min<int>(threads, 16);

  CheckReport report;
  report.total = dim;
  std::mutex mu;
  std::atomic<std::uint64_t> next{0};
  constexpr std::uint64_t kChunk = 16;
  constexpr std::size_t kMaxFailures = 64;

  auto worker = [&] {
    std::uint64_t local_pass = 0;
    double local_worst = 1.0;
    std::vector<CheckFailure> local_fail;
    for (;;) {
      std::uint64_t base = next.fetch_add(kChunk);
      if (base >= dim) break;
      std::uint64_t end = std::min(dim, base + kChunk);
      for (std::uint64_t n = base; n < end; ++n) {
        std::vector<long long> in;
        in.reserve(regs.size());
        for (const auto& r : regs)
          in.push_back(static_cast<long long>(probe.register_value(n, r)));
        std::vector<long long> out = oracle_eval(spec, in);
        std::vector<std::uint64_t> outv(out.begin(), out.end());
        std::uint64_t expected = probe.index_of(outv);
        StateVector s =
            run_circuit(StateVector::basis(blk.circuit.system, n), blk.circuit);
        double fidelity = std::norm(s.amps[expected]);
        local_worst = std::min(local_worst, fidelity);
        if (fidelity >= min_fidelity) {
          ++local_pass;
        } else if (local_fail.size() < kMaxFailures) {
          std::uint64_t got = 0;
          for (std::uint64_t i = 1; i < dim; ++i)
            if (std::norm(s.amps[i]) > std::norm(s.amps[got])) got = i;
          local_fail.push_back(CheckFailure{n, expected, got, fidelity});
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    report.passed += local_pass;
    report.worst_fidelity = std::min(report.worst_fidelity, local_worst);
    report.failures.insert(report.failures.end(), local_fail.begin(),
                           local_fail.end());
  };

  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(report.failures.begin(), report.failures.end(),
            [](const CheckFailure& a, const CheckFailure& b) {
              return a.input < b.input;
            });
  if (report.failures.size() > kMaxFailures)
    report.failures.resize(kMaxFailures);
  return report;
}

}  // namespace quarc
