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

#include "dafact/annealing.hpp"

#include <bit>

namespace dafact {

double AnnealingProblem::field(int site) const {
  const auto it = zc.find(std::uint64_t{1} << (site - 1));
  return it == zc.end() ? 0.0 : it->second;
}

std::vector<std::pair<std::uint64_t, double>> AnnealingProblem::kbody(int k) const {
  std::vector<std::pair<std::uint64_t, double>> out;
  for (const auto& [mask, c] : zc)
    if (std::popcount(mask) == k) out.emplace_back(mask, c);
  return out;
}

PauliSum AnnealingProblem::h_initial() const {
  PauliSum h;
  for (int k = 1; k <= n; ++k) h.add_term({std::uint64_t{1} << (k - 1), 0}, hx);
  h.normalize();
  return h;
}

PauliSum AnnealingProblem::h_final() const {
  PauliSum h = PauliSum::identity(constant);
  for (const auto& [mask, c] : zc) h.add_term({0, mask}, c);
  h.normalize();
  return h;
}

PauliSum AnnealingProblem::h_adiabatic(double lambda) const {
  return (1.0 - lambda) * h_initial() + lambda * h_final();
}

PauliSum AnnealingProblem::dlambda_h() const { return h_final() - h_initial(); }

std::vector<double> AnnealingProblem::energy_table() const {
  if (n > kDiagonalEnumCap) throw CapExceeded("energy_table: qubit count above enumeration cap");
  std::vector<double> e(std::size_t{1} << n, constant);
  for (const auto& [mask, c] : zc)
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
      e[b] += (std::popcount(b & mask) & 1) ? -c : c;
  return e;
}

AnnealingProblem make_problem(const IsingForm& H, int n, double hx) {
  if (n < 0) throw InvalidInput("make_problem: negative qubit count");
  AnnealingProblem p;
  p.n = n;
  p.constant = H.constant;
  p.hx = hx;
  for (const auto& [mask, c] : H.zc) {
    if (mask == 0) {
      p.constant += c;
      continue;
    }
    if (n < 64 && (mask >> n) != 0) throw InvalidInput("make_problem: term touches a site above n");
    p.zc[mask] = c;
  }
  return p;
}

AnnealingProblem make_problem(const FactorizationInstance& inst, double hx) {
  return make_problem(build_direct_hamiltonian(inst), inst.n_qubits(), hx);
}

}  // namespace dafact
