// Copyright 2026 The dafact Authors
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

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dafact/annealing.hpp"
#include "dafact/pauli.hpp"

namespace dafact {

// Counterdiabatic ansatz families. Every variant produces a lambda-dot-free
// Hermitian gauge potential A(lambda); the full CD contribution to the
// Hamiltonian is lambda_dot * A, which vanishes at t = 0 and t = T.
enum class CdKind { None, Local, NestedCommutator, Pool };

struct CdSpec {
  CdKind kind = CdKind::None;
  int order = 1;  // nested-commutator expansion order l >= 1

  // Accepts "none" | "local" | "nc<l>" | "pool"; throws InvalidInput.
  static CdSpec parse(const std::string& text);
  std::string to_string() const;
  friend bool operator==(const CdSpec&, const CdSpec&) = default;
};

// Variational action S = Tr(G^2)/2^n with G = dH/dlambda + i[A, H_ad(lambda)].
// Minimizing S over an ansatz family yields its optimal CD coefficients.
double action(const AnnealingProblem& p, const PauliSum& a, double lambda);

// Local ansatz A = sum_j alpha_j Y_j. Closed-form coefficients
//   alpha_j = -hx h_j / R_j,
//   R_j = 2[(1-lambda)^2 hx^2 + lambda^2 (h_j^2 + 2 S2_j + 3 S3_j + 4 S4_j)],
// S_k = sum of squared k-body couplings containing site j. alpha_j := 0 when
// R_j < 1e-12 (fully decoupled site; zero is the minimizer there). Entry j-1
// holds site j.
std::vector<double> local_cd_coefficients(const AnnealingProblem& p, double lambda);
PauliSum local_gauge_potential(const AnnealingProblem& p, double lambda);

// Tied quadratic objective whose exact minimizer is the local closed form:
// per site (-hx - 2 a_j lambda h_j)^2 + (h_j + 2 a_j (1-lambda) hx)^2, plus
// for each k-body coupling (k >= 2) the locality weight {8, 12, 16}[k-2]
// times (lambda c)^2 sum_{j in S} a_j^2, plus the coefficient drift c^2.
double tied_surrogate_action(const AnnealingProblem& p, const std::vector<double>& alphas,
                             double lambda);

// Exact minimizer of a quadratic functional: gradient and Hessian recovered
// by symmetric probing (exact for quadratics, any eps), then a least-squares
// solve dropping singular values below 1e-12 of the largest.
std::vector<double> probe_quadratic_minimum(
    const std::function<double(const std::vector<double>&)>& fun, int m, double eps = 0.5);

// Least-squares action minimization over span{basis}: with E_a = i[B_a, H]
// solves M c = -b, M_ab = <E_a, E_b>, b_a = <dH, E_a>; singular systems get
// the smallest-norm pseudo-solution. Returns coefficients and sum c_a B_a.
std::pair<std::vector<double>, PauliSum> minimize_over_family(
    const AnnealingProblem& p, const std::vector<PauliSum>& basis, double lambda);

// Nested-commutator basis: B_1 = i[dH, H] and B_{k+1} = [H, [H, B_k]], all
// Hermitian; order k involves the (2k-1)-fold nested commutator with H.
// Requires l >= 1 (InvalidInput) and n <= 12 (CapExceeded).
std::vector<PauliSum> nc_basis(const AnnealingProblem& p, double lambda, int l);

struct NcPotential {
  std::vector<double> coeffs;  // alpha_1 .. alpha_l
  PauliSum op;
};
NcPotential nc_gauge_potential(const AnnealingProblem& p, int l, double lambda);

// Operator-pool channels with tied scalars: Y ties per-site coefficients to
// the fields h_j, Z|Y and X|Y tie per-pair coefficients to the two-body J_ij:
//   ch0 = sum_j h_j Y_j
//   ch1 = sum_pairs J_ij (Z_i Y_j + Y_i Z_j)
//   ch2 = sum_pairs J_ij (X_i Y_j + Y_i X_j)
std::array<PauliSum, 3> pool_channels(const AnnealingProblem& p);

struct PoolPotential {
  std::array<double, 3> coeffs{};  // alpha, beta, gamma
  std::array<bool, 3> active{};    // false when the channel operator vanishes
  PauliSum op;
};
PoolPotential pool_gauge_potential(const AnnealingProblem& p, double lambda);

// Gauge potential for the chosen variant; empty for CdKind::None.
PauliSum cd_gauge_potential(const AnnealingProblem& p, const CdSpec& cd, double lambda);

// H_ad(lambda(t)) + lambda_dot(t) * A(lambda(t)). Equals H_i at t = 0 and
// H_f at t = T exactly for every variant (the endpoint solve is skipped).
PauliSum total_hamiltonian(const AnnealingProblem& p, const CdSpec& cd, double t, double T);

}  // namespace dafact
