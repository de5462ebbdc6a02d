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

#include "dafact/annealing.hpp"
#include "dafact/cd.hpp"
#include "dafact/statevector.hpp"

namespace dafact {

// Where within step j the Hamiltonian is sampled. Midpoint (t_j = (j-1/2)dt)
// is the default: endpoint sampling evaluates the final step at t = T where
// lambda_dot = 0, which silently erases the CD term from the last (and for
// 2-step runs, half the total) evolution. Endpoint (t_j = j dt) is kept as an
// option for convergence studies.
enum class SamplingRule { Midpoint, Endpoint };

struct TrotterPlan {
  double T = 0.0;
  double dt = 0.0;
  SamplingRule rule = SamplingRule::Midpoint;
  // Keep only the weight-1 Y components of the CD term (interaction CD terms
  // dropped), mirroring hardware runs that cannot afford the extra couplers.
  bool hardware_mode = false;
};

// M = round(T/dt) with |M*dt - T| < 1e-9 * max(T, 1) enforced; T = 0 yields
// M = 0 without touching dt. Throws InvalidInput.
int step_count(const TrotterPlan& plan);

// Weight-1 Y terms of a gauge potential; everything else dropped.
PauliSum hardware_filter(const PauliSum& a);

// First-order product formula. Step j applies, at t_j per the sampling rule:
//   1. all diagonal terms at once, amp[b] *= exp(-i lambda dt E_f[b]) with
//      E_f the full H_f diagonal including the constant (the diagonal factors
//      commute exactly, so fusing them is not an approximation);
//   2. the transverse field, exp(-i (1-lambda) hx dt X_k), sites ascending;
//   3. each CD term exp(-i lambda_dot c dt P) in canonical pattern order.
// Starts from |+>^n and returns the final state.
StateVector trotter_evolve(const AnnealingProblem& p, const CdSpec& cd, const TrotterPlan& plan);

}  // namespace dafact
