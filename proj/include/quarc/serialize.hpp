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

#include <string>

#include "quarc/circuit.hpp"

namespace quarc {

/**
 * Line-oriented circuit file:
 *
 *   QC 1 d=<d> w=<w>
 *   reg <name> <start>..<end>        (end inclusive; optional)
 *   <KIND> [j= k=] [m=] [n=] [a=p/q,...] [K=] [s=] [p=i,...] @ <q,...>
 *
 * Angles are exact rationals of 2*pi; '#' starts a comment. Round-trips
 * structurally, including exact angles.
 */
std::string serialize(const Circuit& c);

std::string serialize_gate(const GateSpec& g);

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

/// Parses and validates; throws ParseError with a line number otherwise.
Circuit parse(const std::string& text);

}  // namespace quarc
