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

#include <Eigen/Dense>
#include <vector>

#include "quarc/circuit.hpp"

namespace quarc {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Cx = std::complex<double>;

/// max-entry norm of U†U - I.
double unitarity_defect(const CMat& u);
/// max-entry norm of A - B.
double max_entry_diff(const CMat& a, const CMat& b);

// Explicit matrices for every gate family. Dimensions are d, d^2 or d^3.
// Every constructor asserts unitarity to 1e-12 before returning.
namespace gates {

/// Exchanges basis states |j>,|k>, identity elsewhere.
CMat x_jk(int d, int j, int k);
/// exp(-i theta sigma_a^{(jk)} / 2), identity outside the {j,k} subspace.
/// axis must be RZ, RX or RY.
CMat rot_jk(GateKind axis, int d, int j, int k, const Angle& theta);
/// Order-d Fourier gate: entries e^{i 2 pi r c / d} / sqrt(d).
CMat hadamard(int d);
CMat hadamard_dag(int d);

/// diag(1, e^{i phi_1}, ..., e^{i phi_{d-1}}); expects d-1 angles.
CMat d_gate(int d, const std::vector<Angle>& phis);
/// diag(e^{-i(a_1+...+a_{d-1})}, e^{i a_1}, ..., e^{i a_{d-1}}).
CMat dprime_gate(int d, const std::vector<Angle>& as);
/// Phi_k: d_gate with phi_m = 2 pi m / d^K.
CMat phi_k(int d, int K);
/// Phase gate S_m: e^{i a} at level m.
CMat phase_at(int d, int m, const Angle& a);
/// D_Q^{d^m} (or its adjoint): diag over r of omega_Q^{+-r d^m}, Q = d^q.
CMat dq_power(int d, int q, int m, bool dagger);
/// Arbitrary diagonal from d explicit angles.
CMat diag_full(int d, const std::vector<Angle>& phases);

/// Block-diagonal controlled versions (first factor is the control).
CMat gcx(int d, int m, int j, int k);
CMat cd(int d, int m, const std::vector<Angle>& phis);
CMat cdprime(int d, int m, const std::vector<Angle>& as);
CMat rk(int d, int K, int sign = 1);
CMat gccx(int d, int m, int n, int j, int k);
CMat ccd(int d, int m, int n, const std::vector<Angle>& phis);
CMat rbark(int d, int K, int sign = 1);

/// Two-level S, T, H gates of Appendix-A flavour.
CMat sjk(int d, int j, int k, bool dagger = false);
CMat tjk(int d, int j, int k, bool dagger = false);
CMat hjk(int d, int j, int k);

CMat swap(int d);

}  // namespace gates

/// Local matrix of a gate instance on its own qudits, dimension
/// d^(number of qudits). Controls come first, matching GateSpec order.
CMat gate_matrix(const GateSpec& g, int d);

}  // namespace quarc
