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

#include "quarc/serialize.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace quarc {

namespace {

const std::map<std::string, GateKind>& kind_table() {
  static const std::map<std::string, GateKind> table = {
      {"X", GateKind::X_JK},       {"RZ", GateKind::RZ},
      {"RX", GateKind::RX},        {"RY", GateKind::RY},
      {"H", GateKind::H},          {"HDAG", GateKind::H_DAG},
      {"HJK", GateKind::H_JK},     {"SJK", GateKind::S_JK},
      {"SJKD", GateKind::S_JK_DAG},{"TJK", GateKind::T_JK},
      {"TJKD", GateKind::T_JK_DAG},{"PH", GateKind::PHASE},
      {"DIAG", GateKind::DIAG},    {"GCX", GateKind::GCX},
      {"GCCX", GateKind::GCCX},    {"CD", GateKind::CD},
      {"CCD", GateKind::CCD},      {"RK", GateKind::RK},
      {"RBK", GateKind::RBARK},    {"SWAP", GateKind::SWAP},
      {"PERM", GateKind::PERM},
  };
  return table;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, int line, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("bad integer for ") + what + ": " + s);
  }
}

}  // namespace

std::string serialize_gate(const GateSpec& g) {
  std::ostringstream os;
  os << kind_name(g.kind);
  if (g.j >= 0) os << " j=" << g.j << " k=" << g.k;
  if (g.m >= 0) os << " m=" << g.m;
  if (g.n >= 0) os << " n=" << g.n;
  if (!g.angles.empty()) {
    os << " a=";
    for (std::size_t i = 0; i < g.angles.size(); ++i) {
      if (i) os << ',';
      os << g.angles[i].str();
    }
  }
  if (g.kind == GateKind::RK || g.kind == GateKind::RBARK) {
    os << " K=" << g.K;
    if (g.sign < 0) os << " s=-1";
  }
  if (g.kind == GateKind::PERM) {
    os << " p=";
    for (std::size_t i = 0; i < g.perm.size(); ++i) {
      if (i) os << ',';
      os << g.perm[i];
    }
  }
  os << " @ ";
  for (std::size_t i = 0; i < g.qudits.size(); ++i) {
    if (i) os << ',';
    os << g.qudits[i];
  }
  return os.str();
}

std::string serialize(const Circuit& c) {
  std::ostringstream os;
  os << "QC 1 d=" << c.system.d << " w=" << c.system.w << "\n";
  if (!c.label.empty()) os << "# " << c.label << "\n";
  for (const auto& r : c.system.registers)
    os << "reg " << r.name << " " << r.start << ".." << r.start + r.size - 1
       << "\n";
  for (const auto& g : c.gates) os << serialize_gate(g) << "\n";
  return os.str();
}

Circuit parse(const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  Circuit c;
  bool have_header = false;
  std::vector<Register> regs;

  while (std::getline(is, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;

    if (!have_header) {
      if (tok.size() != 4 || tok[0] != "QC" || tok[1] != "1" ||
          tok[2].rfind("d=", 0) != 0 || tok[3].rfind("w=", 0) != 0)
        throw ParseError(lineno, "expected header 'QC 1 d=<d> w=<w>'");
      int d = parse_int(tok[2].substr(2), lineno, "d");
      int w = parse_int(tok[3].substr(2), lineno, "w");
      if (d < 2 || w < 1) throw ParseError(lineno, "header out of range");
      c.system.d = d;
      c.system.w = w;
      have_header = true;
      continue;
    }

    if (tok[0] == "reg") {
      if (tok.size() != 3) throw ParseError(lineno, "reg: expected name and range");
      auto dots = tok[2].find("..");
      if (dots == std::string::npos)
        throw ParseError(lineno, "reg: expected <start>..<end>");
      int start = parse_int(tok[2].substr(0, dots), lineno, "reg start");
      int end = parse_int(tok[2].substr(dots + 2), lineno, "reg end");
      if (start < 0 || end < start || end >= c.system.w)
        throw ParseError(lineno, "reg: range out of bounds");
      for (const auto& r : regs)
        if (r.name == tok[1])
          throw ParseError(lineno, "duplicate register '" + tok[1] + "'");
      regs.push_back(Register{tok[1], start, end - start + 1});
      continue;
    }

    auto it = kind_table().find(tok[0]);
    if (it == kind_table().end())
      throw ParseError(lineno, "unknown gate kind '" + tok[0] + "'");
    GateSpec g;
    g.kind = it->second;

    bool seen_at = false;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      const std::string& f = tok[i];
      if (f == "@") {
        if (i + 1 >= tok.size()) throw ParseError(lineno, "missing qudit list");
        for (const auto& q : split(tok[i + 1], ','))
          g.qudits.push_back(parse_int(q, lineno, "qudit index"));
        if (i + 2 != tok.size()) throw ParseError(lineno, "trailing tokens");
        seen_at = true;
        break;
      }
      auto eq = f.find('=');
      if (eq == std::string::npos)
        throw ParseError(lineno, "expected key=value, got '" + f + "'");
      std::string key = f.substr(0, eq);
      std::string val = f.substr(eq + 1);
      if (key == "j") g.j = parse_int(val, lineno, "j");
      else if (key == "k") g.k = parse_int(val, lineno, "k");
      else if (key == "m") g.m = parse_int(val, lineno, "m");
      else if (key == "n") g.n = parse_int(val, lineno, "n");
      else if (key == "K") g.K = parse_int(val, lineno, "K");
      else if (key == "s") g.sign = parse_int(val, lineno, "s");
      else if (key == "a") {
        for (const auto& a : split(val, ',')) {
          try {
            g.angles.push_back(Angle::parse(a));
          } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
          }
        }
      } else if (key == "p") {
        for (const auto& p : split(val, ','))
          g.perm.push_back(parse_int(p, lineno, "perm entry"));
      } else {
        throw ParseError(lineno, "unknown key '" + key + "'");
      }
    }
    if (!seen_at) throw ParseError(lineno, "missing '@ <qudits>'");
    try {
      g.validate(c.system);
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
    c.gates.push_back(std::move(g));
  }

  if (!have_header) throw ParseError(lineno, "missing header");
  if (!regs.empty()) {
    c.system.registers = regs;
    try {
      c.system.check();
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return c;
}

}  // namespace quarc
