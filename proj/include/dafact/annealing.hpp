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

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dafact/binary_polynomial.hpp"
#include "dafact/encoding.hpp"
#include "dafact/pauli.hpp"

namespace dafact {

// Interpolated annealing problem
//   H_ad(lambda) = (1 - lambda) H_i + lambda H_f,
//   H_i = hx * sum_k X_k  (hx < 0 makes |+>^n the ground state of H_i),
//   H_f = constant + sum_S c_S prod_{k in S} Z_k  (diagonal; S a site mask).
// The effective parameters of H_ad are h^x(t) = (1-lambda) hx per site and
// lambda * c_S per diagonal term; their lambda-derivatives are -hx and c_S.
struct AnnealingProblem {
  int n = 0;
  std::map<std::uint64_t, double> zc;  // site mask (site k = bit k-1) -> coefficient
  double constant = 0.0;
  double hx = -1.0;

  // Field coefficient on one site; 0 when absent.
  double field(int site) const;
  // All diagonal terms of exactly k sites, mask-ascending.
  std::vector<std::pair<std::uint64_t, double>> kbody(int k) const;

  PauliSum h_initial() const;
  PauliSum h_final() const;  // includes the identity term
  PauliSum h_adiabatic(double lambda) const;
  PauliSum dlambda_h() const;  // H_f - H_i

  // Diagonal of H_f over all 2^n basis labels (includes the constant).
  std::vector<double> energy_table() const;
};

// Ising coefficients become the interpolation target; masks above bit n-1
// are rejected. n = 0 is allowed (fully determined instances).
AnnealingProblem make_problem(const IsingForm& H, int n, double hx);

AnnealingProblem make_problem(const FactorizationInstance& inst, double hx);

}  // namespace dafact
