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

#include "dafact/trotter.hpp"

#include <algorithm>
#include <cmath>

#include "dafact/schedule.hpp"

namespace dafact {

int step_count(const TrotterPlan& plan) {
  if (plan.T < 0.0) throw InvalidInput("trotter: negative total time");
  if (plan.T == 0.0) return 0;
  if (!(plan.dt > 0.0)) throw InvalidInput("trotter: step size must be positive");
  const double ratio = plan.T / plan.dt;
  const long long M = std::llround(ratio);
  if (std::abs(static_cast<double>(M) * plan.dt - plan.T) > 1e-9 * std::max(plan.T, 1.0))
    throw InvalidInput("trotter: dt does not divide T");
  return static_cast<int>(M);
}

PauliSum hardware_filter(const PauliSum& a) {
  PauliSum out;
  for (const PauliTerm& t : a.terms())
    if (t.p.weight() == 1 && t.p.x == t.p.z) out.add_term(t.p, t.coeff);
  out.normalize();
  return out;
}

StateVector trotter_evolve(const AnnealingProblem& p, const CdSpec& cd, const TrotterPlan& plan) {
  const int M = step_count(plan);
  StateVector psi = plus_state(p.n);
  const std::vector<double> energy = p.energy_table();
  for (int j = 1; j <= M; ++j) {
    const double t = plan.rule == SamplingRule::Midpoint ? (j - 0.5) * plan.dt : j * plan.dt;
    const SchedulePoint s = schedule_eval(t, plan.T);
    apply_phase_table(psi, energy, s.lambda * plan.dt);
    const double theta_x = (1.0 - s.lambda) * p.hx * plan.dt;
    for (int k = 1; k <= p.n; ++k)
      apply_pauli_exponential(psi, theta_x, {std::uint64_t{1} << (k - 1), 0});
    if (cd.kind != CdKind::None) {
      PauliSum a = cd_gauge_potential(p, cd, s.lambda);
      if (plan.hardware_mode) a = hardware_filter(a);
      for (const PauliTerm& term : a.terms())
        apply_pauli_exponential(psi, s.lambda_dot * term.coeff * plan.dt, term.p);
    }
  }
  return psi;
}

}  // namespace dafact
