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

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <random>

#include "quarc/approx.hpp"
#include "quarc/blocks.hpp"
#include "quarc/oracle.hpp"
#include "quarc/resources.hpp"
#include "quarc/serialize.hpp"
#include "quarc/sim.hpp"

using nlohmann::json;
using namespace quarc;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct BlockArgs {
  int d = 3;
  int q = 2;
  long long b = 1;
  int c = 1;
  long long gamma = 1;
  bool sandwich = false;
  std::string swap_mode = "relabel";
};

void add_block_options(CLI::App* cmd, BlockArgs& args, std::string& block) {
  cmd->add_option("block", block, "block kind (qft, add, addc, caddc, gcaddc, mac, mulc, mmac, smac, delta)")
      ->required();
  cmd->add_option("--d", args.d, "qudit dimension")->required();
  cmd->add_option("--q", args.q, "register width in qudits")->required();
  cmd->add_option("--b", args.b, "additive/multiplicative constant");
  cmd->add_option("--c", args.c, "control basis value (caddc)");
  cmd->add_option("--gamma", args.gamma, "squarer constant");
  cmd->add_flag("--sandwich", args.sandwich, "wrap the core in QFT / inverse QFT");
  cmd->add_option("--swap-mode", args.swap_mode, "relabel|physical (qft only)")
      ->check(CLI::IsMember({"relabel", "physical"}));
}

ArithmeticBlock make_block(const std::string& name, const BlockArgs& a) {
  switch (block_from_name(name)) {
    case BlockKind::QFT:
      return build_qft(a.d, a.q,
                       a.swap_mode == "physical" ? SwapMode::physical
                                                 : SwapMode::relabel);
    case BlockKind::ADD: return build_add(a.d, a.q, a.sandwich);
    case BlockKind::ADDC: return build_addc(a.d, a.q, a.b, a.sandwich);
    case BlockKind::CADDC: return build_caddc(a.d, a.q, a.c, a.b, a.sandwich);
    case BlockKind::GCADDC: return build_gcaddc(a.d, a.q, a.b, a.sandwich);
    case BlockKind::MAC: return build_mac(a.d, a.q, a.b, a.sandwich);
    case BlockKind::MULC: return build_mulc(a.d, a.q, a.b);
    case BlockKind::MMAC: return build_mmac(a.d, a.q, a.sandwich);
    case BlockKind::SMAC: return build_smac(a.d, a.q, a.gamma);
    case BlockKind::DELTA: return build_delta(a.d, a.q, a.gamma);
  }
  throw std::invalid_argument("unknown block");
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::vector<int> parse_q_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("expected q-range a..b");
  int a = std::stoi(text.substr(0, dots));
  int b = std::stoi(text.substr(dots + 2));
  if (a < 1 || b < a) throw std::invalid_argument("bad q-range");
  std::vector<int> qs;
  for (int q = a; q <= b; ++q) qs.push_back(q);
  return qs;
}

int run_simulate(const std::string& circuit_path, const std::string& input,
                 bool as_json) {
  Circuit c = load_circuit(circuit_path);
  StateVector s = StateVector::basis(c.system, 0);
  if (input.rfind("basis:", 0) == 0) {
    s = StateVector::basis(c.system, std::stoull(input.substr(6)));
  } else {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open state file " + input);
    for (auto& amp : s.amps) {
      double re, im;
      if (!(in >> re >> im))
        throw std::runtime_error("state file too short");
      amp = Cx(re, im);
    }
    double norm = s.norm();
    if (std::abs(norm - 1.0) > 1e-6)
      throw std::runtime_error("input state is not normalized");
  }
  StateVector out = run_circuit(std::move(s), c);

  json amps = json::array();
  std::cout << std::setprecision(12);
  for (std::uint64_t n = 0; n < out.dim(); ++n) {
    if (std::norm(out.amps[n]) < 1e-24) continue;
    if (as_json) {
      amps.push_back({{"index", n},
                      {"re", out.amps[n].real()},
                      {"im", out.amps[n].imag()}});
    } else {
      std::cout << n << "  " << out.amps[n].real() << "  "
                << out.amps[n].imag() << "\n";
    }
  }
  if (as_json) std::cout << json{{"amplitudes", amps}}.dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& name, const BlockArgs& args, int threads,
               bool as_json) {
  BlockArgs with_sandwich = args;
  with_sandwich.sandwich = true;
  ArithmeticBlock blk = make_block(name, with_sandwich);
  BlockKind kind = block_from_name(name);

  json out;
  bool ok = true;
  if (kind == BlockKind::QFT) {
    CMat u = circuit_unitary(blk.circuit);
    double diff = max_entry_diff(u, dft_matrix(args.d, args.q));
    ok = diff <= 1e-10;
    out = {{"block", name}, {"max_entry_diff", diff}, {"pass", ok}};
    if (!as_json)
      std::cout << "qft d=" << args.d << " q=" << args.q
                << ": max entry diff vs DFT = " << diff
                << (ok ? "  PASS" : "  FAIL") << "\n";
  } else if (kind == BlockKind::DELTA) {
    // phase action on random states plus ancilla purity
    std::mt19937_64 rng(7);
    CVec phases = diag_phase_vector(args.d, args.q, args.gamma);
    long long Q = modulus_of(args.d, args.q);
    std::uint64_t env = blk.circuit.system.dimension() / static_cast<std::uint64_t>(Q);
    double worst_amp = 0.0, worst_purity = 1.0;
    for (int trial = 0; trial < 10; ++trial) {
      StateVector s = StateVector::basis(blk.circuit.system, 0);
      std::normal_distribution<double> gauss;
      std::vector<Cx> coeff(static_cast<std::size_t>(Q));
      double norm = 0;
      for (auto& x : coeff) {
        x = Cx(gauss(rng), gauss(rng));
        norm += std::norm(x);
      }
      norm = std::sqrt(norm);
      for (auto& a : s.amps) a = 0;
      for (long long k = 0; k < Q; ++k)
        s.amps[static_cast<std::uint64_t>(k) * env] =
            coeff[static_cast<std::size_t>(k)] / norm;
      StateVector res = run_circuit(s, blk.circuit);
      for (long long k = 0; k < Q; ++k) {
        Cx want = coeff[static_cast<std::size_t>(k)] / norm *
                  phases(static_cast<Eigen::Index>(k));
        worst_amp = std::max(
            worst_amp,
            std::abs(res.amps[static_cast<std::uint64_t>(k) * env] - want));
      }
      worst_purity = std::min(
          worst_purity, reduced_purity(res, blk.circuit.system.reg("reg2")));
    }
    ok = worst_amp <= 1e-8 && worst_purity >= 1.0 - 1e-9;
    out = {{"block", name},
           {"worst_amplitude_error", worst_amp},
           {"worst_reg2_purity", worst_purity},
           {"pass", ok}};
    if (!as_json)
      std::cout << "delta d=" << args.d << " q=" << args.q
                << " gamma=" << args.gamma << ": amp err " << worst_amp
                << ", purity " << worst_purity
                << (ok ? "  PASS" : "  FAIL") << "\n";
  } else {
    CheckReport rep = exhaustive_check(blk, OracleSpec::of(blk), threads);
    ok = rep.ok();
    out = {{"block", name},
           {"total", rep.total},
           {"passed", rep.passed},
           {"worst_fidelity", rep.worst_fidelity},
           {"pass", ok}};
    if (!as_json) {
      std::cout << name << " d=" << args.d << " q=" << args.q << ": "
                << rep.passed << "/" << rep.total
                << " basis states, worst fidelity " << rep.worst_fidelity
                << (ok ? "  PASS" : "  FAIL") << "\n";
      for (const auto& f : rep.failures)
        std::cout << "  input " << f.input << ": expected " << f.expected
                  << ", got " << f.got << " (fidelity " << f.fidelity << ")\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return ok ? 0 : kExitVerifyFailure;
}

void print_report(const ResourceReport& rep, const std::string& title,
                  bool as_json) {
  if (as_json) {
    json j{{"title", title},
           {"width", rep.width},
           {"basic_total", rep.basic_total},
           {"elementary_total", rep.elementary_total},
           {"phase_gates", rep.phase_gates},
           {"swap_gates", rep.swap_gates},
           {"depth_basic", rep.depth_basic},
           {"depth_elementary", rep.depth_elementary},
           {"basic", rep.basic},
           {"elementary", rep.elementary}};
    if (!rep.block_breakdown.empty()) {
      json seg = json::array();
      for (const auto& [label, count] : rep.block_breakdown)
        seg.push_back({{"segment", label}, {"basic_gates", count}});
      j["segments"] = seg;
    }
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << title << "\n";
  std::cout << "  width               " << rep.width << "\n";
  std::cout << "  basic gates         " << rep.basic_total << "\n";
  for (const auto& [kind, count] : rep.basic)
    std::cout << "    " << std::left << std::setw(8) << kind << std::right
              << std::setw(10) << count << "\n";
  std::cout << "  elementary gates    " << rep.elementary_total << "\n";
  for (const auto& [fam, count] : rep.elementary)
    std::cout << "    " << std::left << std::setw(8) << fam << std::right
              << std::setw(10) << count << "\n";
  std::cout << "  phase gates         " << rep.phase_gates << "\n";
  if (rep.swap_gates)
    std::cout << "  swap gates          " << rep.swap_gates << "\n";
  std::cout << "  depth (basic)       " << rep.depth_basic << "\n";
  std::cout << "  depth (elementary)  " << rep.depth_elementary << "\n";
  if (!rep.block_breakdown.empty()) {
    std::cout << "  segments:\n";
    for (const auto& [label, count] : rep.block_breakdown)
      std::cout << "    " << std::left << std::setw(20) << label << std::right
                << std::setw(8) << count << "\n";
  }
}

int run_export_table1(int d, const std::vector<int>& qs, bool as_json) {
  struct Row {
    BlockKind kind;
    const char* paper_cost;
    const char* paper_depth;
    const char* paper_width;
    int width_factor;
  };
  const Row rows[] = {
      {BlockKind::QFT, "4d^2q^2", "8d^2q", "q", 1},
      {BlockKind::ADD, "4d^2q^2", "4d^2q", "2q", 2},
      {BlockKind::MAC, "4d^2q^2", "4d^2q", "2q", 2},
      {BlockKind::MULC, "24d^2q^2", "32d^2q", "2q", 2},
      {BlockKind::MMAC, "7d^3q^3", "21d^3q^2", "3q", 3},
      {BlockKind::SMAC, "14d^3q^3", "42d^3q^2", "4q", 4},
      {BlockKind::DELTA, "14d^3q^3", "42d^3q^2", "4q", 4},
  };
  json jrows = json::array();
  if (!as_json) {
    std::cout << "Table-1 comparison, d=" << d << ", q=" << qs.front() << ".."
              << qs.back() << "\n";
    std::cout << std::left << std::setw(7) << "block" << std::setw(11)
              << "paperCost" << std::setw(12) << "fitExp" << std::setw(12)
              << "cost(qmax)" << std::setw(12) << "paperDepth" << std::setw(12)
              << "depth(qmax)" << std::setw(11) << "paperWidth"
              << "width(qmax)\n";
  }
  for (const Row& row : rows) {
    FitResult fit = asymptotic_fit(row.kind, d, qs);
    ArithmeticBlock blk;
    int qmax = qs.back();
    BlockArgs a;
    a.d = d;
    a.q = qmax;
    a.sandwich = true;
    blk = make_block(block_name(row.kind), a);
    ResourceReport rep = count_elementary(blk.circuit);
    long long depth = schedule_depth(blk.circuit, DepthLevel::basic);
    if (as_json) {
      jrows.push_back({{"block", block_name(row.kind)},
                       {"paper_cost", row.paper_cost},
                       {"fitted_cost_exponent", fit.exponent},
                       {"fit_residual", fit.residual},
                       {"elementary_cost_at_qmax", rep.elementary_total},
                       {"paper_depth", row.paper_depth},
                       {"basic_depth_at_qmax", depth},
                       {"paper_width", row.paper_width},
                       {"width_at_qmax", rep.width},
                       {"width_expected", row.width_factor * qmax}});
    } else {
      std::cout << std::left << std::setw(7) << block_name(row.kind)
                << std::setw(11) << row.paper_cost << std::setw(12)
                << std::setprecision(4) << fit.exponent << std::setw(12)
                << rep.elementary_total << std::setw(12) << row.paper_depth
                << std::setw(12) << depth << std::setw(11) << row.paper_width
                << rep.width << (rep.width == row.width_factor * qmax
                                     ? ""
                                     : "  (WIDTH MISMATCH)")
                << "\n";
    }
  }
  if (as_json) std::cout << json{{"d", d}, {"rows", jrows}}.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qudit QFT arithmetic circuits: build, simulate, verify, analyze"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  // build
  auto* build = app.add_subcommand("build", "construct a circuit and write it to a file");
  BlockArgs build_args;
  std::string build_block, build_out;
  add_block_options(build, build_args, build_block);
  build->add_option("-o,--output", build_out, "output circuit file")->required();

  // simulate
  auto* simulate = app.add_subcommand("simulate", "run a circuit on an input state");
  std::string sim_circuit, sim_input = "basis:0";
  simulate->add_option("--circuit", sim_circuit, "circuit file")->required();
  simulate->add_option("--input", sim_input, "basis:<int> or state file path");

  // verify
  auto* verify = app.add_subcommand("verify", "check a block against its classical oracle");
  BlockArgs verify_args;
  std::string verify_block;
  int verify_threads = 0;
  bool exhaustive = false;
  add_block_options(verify, verify_args, verify_block);
  verify->add_flag("--exhaustive", exhaustive, "enumerate every basis input");
  verify->add_option("--threads", verify_threads, "worker threads (0 = auto)");

  // resources
  auto* resources = app.add_subcommand("resources", "gate counts and scheduled depth");
  std::string res_circuit, res_block, res_qrange, res_expand;
  BlockArgs res_args;
  bool res_fit = false;
  resources->add_option("--circuit", res_circuit, "circuit file");
  resources->add_option("--block", res_block, "block kind (alternative to --circuit)");
  resources->add_option("--d", res_args.d, "qudit dimension");
  resources->add_option("--q", res_args.q, "register width");
  resources->add_option("--b", res_args.b, "constant");
  resources->add_option("--c", res_args.c, "control value");
  resources->add_option("--gamma", res_args.gamma, "squarer constant");
  resources->add_flag("--sandwich", res_args.sandwich, "include QFT sandwich");
  resources->add_option("--expand", res_expand, "elementary: report expansion only");
  resources->add_flag("--fit", res_fit, "log-log exponent fit over --q-range");
  resources->add_option("--q-range", res_qrange, "fit range a..b");

  // approx
  auto* approx = app.add_subcommand("approx", "discrete H/T approximation of rotations");
  std::string approx_gate = "rz", approx_theta = "1/8";
  int approx_maxlen = 16;
  double approx_target = 0.0;
  bool approx_csv = false;
  approx->add_option("gate", approx_gate, "rz (rotation family)");
  approx->add_option("--theta", approx_theta, "angle as a rational of 2*pi, e.g. 1/8");
  approx->add_option("--max-len", approx_maxlen, "maximum word length (<= 24)");
  approx->add_option("--target-err", approx_target, "stop once this error is reached");
  approx->add_flag("--csv", approx_csv, "print the error-vs-length curve as CSV");

  // export
  auto* exp = app.add_subcommand("export", "paper-table comparisons");
  bool table1 = false;
  int exp_d = 3;
  std::string exp_qrange = "2..8";
  exp->add_flag("--table1", table1, "cost/depth/width table");
  exp->add_option("--d", exp_d, "qudit dimension");
  exp->add_option("--q-range", exp_qrange, "q range a..b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (build->parsed()) {
      ArithmeticBlock blk = make_block(build_block, build_args);
      std::ofstream out(build_out);
      if (!out) throw std::runtime_error("cannot write " + build_out);
      out << serialize(blk.circuit);
      std::cout << "wrote " << build_out << " (" << blk.circuit.size()
                << " gates, width " << blk.circuit.system.w << ")\n";
      return 0;
    }
    if (simulate->parsed()) return run_simulate(sim_circuit, sim_input, as_json);
    if (verify->parsed()) {
      if (!exhaustive && block_from_name(verify_block) != BlockKind::QFT &&
          block_from_name(verify_block) != BlockKind::DELTA)
        throw std::invalid_argument("verify requires --exhaustive for arithmetic blocks");
      return run_verify(verify_block, verify_args, verify_threads, as_json);
    }
    if (resources->parsed()) {
      if (res_fit) {
        if (res_block.empty() || res_qrange.empty())
          throw std::invalid_argument("--fit needs --block and --q-range");
        FitResult fit = asymptotic_fit(block_from_name(res_block), res_args.d,
                                       parse_q_range(res_qrange));
        if (as_json)
          std::cout << json{{"block", res_block},
                            {"d", res_args.d},
                            {"exponent", fit.exponent},
                            {"residual", fit.residual}}
                           .dump(2)
                    << "\n";
        else
          std::cout << res_block << " d=" << res_args.d
                    << " cost exponent: " << fit.exponent << " (residual "
                    << fit.residual << ")\n";
        return 0;
      }
      ResourceReport rep;
      std::string title;
      if (!res_circuit.empty()) {
        Circuit c = load_circuit(res_circuit);
        if (res_expand == "elementary") c = expand_circuit(c);
        rep = count_elementary(c);
        rep.depth_basic = schedule_depth(c, DepthLevel::basic);
        rep.depth_elementary = schedule_depth(c, DepthLevel::elementary);
        title = res_circuit;
      } else if (!res_block.empty()) {
        ArithmeticBlock blk = make_block(res_block, res_args);
        rep = analyze(blk);
        title = res_block;
      } else {
        throw std::invalid_argument("resources needs --circuit or --block");
      }
      print_report(rep, title, as_json);
      return 0;
    }
    if (approx->parsed()) {
      if (approx_gate != "rz")
        throw std::invalid_argument("approx: only the rz family is exposed");
      Angle theta = Angle::parse(approx_theta);
      ApproxResult res = approx_vz(theta, approx_maxlen, approx_target);
      if (approx_csv) {
        std::cout << "max_len,best_error\n";
        for (std::size_t l = 0; l < res.curve.size(); ++l)
          std::cout << l << "," << std::setprecision(12) << res.curve[l] << "\n";
      } else if (as_json) {
        std::cout << json{{"theta", approx_theta},
                          {"word", res.word},
                          {"length", res.length},
                          {"error", res.error}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "theta = 2*pi*" << approx_theta << "\n";
        std::cout << "word:   " << (res.word.empty() ? "(empty)" : res.word)
                  << "\n";
        std::cout << "length: " << res.length << "\n";
        std::cout << "error:  " << std::setprecision(12) << res.error << "\n";
        std::cout << "worst-case circuit angle 2*pi/d^q needs error of the "
                     "same order; see the error curve via --csv\n";
      }
      return 0;
    }
    if (exp->parsed()) {
      if (!table1) throw std::invalid_argument("export: only --table1 is available");
      return run_export_table1(exp_d, parse_q_range(exp_qrange), as_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
