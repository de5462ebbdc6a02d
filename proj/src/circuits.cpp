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

#include "dafact/circuits.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>

#include "dafact/schedule.hpp"

namespace dafact {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void push(Circuit& c, GateKind kind, int q, int control, double angle, int step,
          GateComponent component, const PauliString& origin) {
  c.gates.push_back({kind, q, control, angle, step, component, origin});
}

}  // namespace

void append_pauli_exponential(Circuit& c, double theta, const PauliString& p, int step,
                              GateComponent component) {
  if (p.identity()) {
    c.global_phase -= theta;
    return;
  }
  const std::uint64_t active = p.x | p.z;

  // Pre basis changes: conjugate every non-Z site into Z. Y = U Z U^dagger
  // with U = Rx(-pi/2), so the circuit applies U^dagger = Rx(pi/2) first and
  // U last; X uses the self-inverse H on both sides.
  std::vector<int> sites;
  for (int k = 1; k <= c.n; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << (k - 1);
    if (!(active & bit)) continue;
    sites.push_back(k);
    if (p.x & bit) {
      if (p.z & bit)
        push(c, GateKind::Rx, k, 0, kHalfPi, step, component, p);
      else
        push(c, GateKind::H, k, 0, 0.0, step, component, p);
    }
  }

  // Parity ladder onto the highest active site, one Rz there, unladder.
  for (std::size_t i = 0; i + 1 < sites.size(); ++i)
    push(c, GateKind::Cnot, sites[i + 1], sites[i], 0.0, step, component, p);
  push(c, GateKind::Rz, sites.back(), 0, 2.0 * theta, step, component, p);
  for (std::size_t i = sites.size() - 1; i-- > 0;)
    push(c, GateKind::Cnot, sites[i + 1], sites[i], 0.0, step, component, p);

  for (int k : sites) {
    const std::uint64_t bit = std::uint64_t{1} << (k - 1);
    if (p.x & bit) {
      if (p.z & bit)
        push(c, GateKind::Rx, k, 0, -kHalfPi, step, component, p);
      else
        push(c, GateKind::H, k, 0, 0.0, step, component, p);
    }
  }
}

Circuit compile_plan(const AnnealingProblem& p, const CdSpec& cd, const TrotterPlan& plan) {
  const int M = step_count(plan);
  Circuit c;
  c.n = p.n;
  for (int k = 1; k <= p.n; ++k)
    push(c, GateKind::H, k, 0, 0.0, 0, GateComponent::Prep, PauliString{});

  // Diagonal terms in (weight, mask) order; they commute, so compiling them
  // one by one is exactly the fused phase table of trotter_evolve.
  std::vector<std::pair<std::uint64_t, double>> diag(p.zc.begin(), p.zc.end());
  std::sort(diag.begin(), diag.end(), [](const auto& a, const auto& b) {
    const int wa = std::popcount(a.first), wb = std::popcount(b.first);
    return wa != wb ? wa < wb : a.first < b.first;
  });

  for (int j = 1; j <= M; ++j) {
    const double t = plan.rule == SamplingRule::Midpoint ? (j - 0.5) * plan.dt : j * plan.dt;
    const SchedulePoint s = schedule_eval(t, plan.T);
    c.global_phase -= s.lambda * p.constant * plan.dt;
    for (const auto& [mask, coeff] : diag)
      append_pauli_exponential(c, s.lambda * coeff * plan.dt, {0, mask}, j,
                               GateComponent::Adiabatic);
    const double theta_x = (1.0 - s.lambda) * p.hx * plan.dt;
    for (int k = 1; k <= p.n; ++k)
      append_pauli_exponential(c, theta_x, {std::uint64_t{1} << (k - 1), 0}, j,
                               GateComponent::Adiabatic);
    if (cd.kind != CdKind::None) {
      PauliSum a = cd_gauge_potential(p, cd, s.lambda);
      if (plan.hardware_mode) a = hardware_filter(a);
      for (const PauliTerm& term : a.terms())
        append_pauli_exponential(c, s.lambda_dot * term.coeff * plan.dt, term.p, j,
                                 GateComponent::Cd);
    }
  }
  return c;
}

GateCounts gate_counts(const Circuit& c) {
  GateCounts out;
  out.total = static_cast<long long>(c.gates.size());
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H: ++out.by_kind["h"]; break;
      case GateKind::Rx: ++out.by_kind["rx"]; break;
      case GateKind::Rz: ++out.by_kind["rz"]; break;
      case GateKind::Cnot: ++out.by_kind["cx"]; break;
    }
    ++out.by_step[g.step];
    switch (g.component) {
      case GateComponent::Prep: ++out.by_component["prep"]; break;
      case GateComponent::Adiabatic: ++out.by_component["adiabatic"]; break;
      case GateComponent::Cd: ++out.by_component["cd"]; break;
    }
  }
  return out;
}

std::string emit_qasm(const Circuit& c) {
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  char buf[96];
  std::snprintf(buf, sizeof buf, "qreg q[%d];\ncreg c[%d];\n", c.n, c.n);
  out += buf;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
        std::snprintf(buf, sizeof buf, "h q[%d];\n", g.q - 1);
        break;
      case GateKind::Rx:
        std::snprintf(buf, sizeof buf, "rx(%.17g) q[%d];\n", g.angle, g.q - 1);
        break;
      case GateKind::Rz:
        std::snprintf(buf, sizeof buf, "rz(%.17g) q[%d];\n", g.angle, g.q - 1);
        break;
      case GateKind::Cnot:
        std::snprintf(buf, sizeof buf, "cx q[%d],q[%d];\n", g.control - 1, g.q - 1);
        break;
    }
    out += buf;
  }
  out += "measure q -> c;\n";
  return out;
}

StateVector simulate(const Circuit& c) {
  StateVector psi;
  psi.n = c.n;
  psi.amp.assign(std::size_t{1} << c.n, {0.0, 0.0});
  psi.amp[0] = {1.0, 0.0};
  const std::complex<double> im(0.0, 1.0);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

  for (const Gate& g : c.gates) {
    const std::uint64_t tbit = std::uint64_t{1} << (g.q - 1);
    switch (g.kind) {
      case GateKind::H:
        for (std::uint64_t b = 0; b < psi.amp.size(); ++b) {
          if (b & tbit) continue;
          const auto lo = psi.amp[b], hi = psi.amp[b | tbit];
          psi.amp[b] = inv_sqrt2 * (lo + hi);
          psi.amp[b | tbit] = inv_sqrt2 * (lo - hi);
        }
        break;
      case GateKind::Rx: {
        const double ch = std::cos(g.angle / 2.0), sh = std::sin(g.angle / 2.0);
        for (std::uint64_t b = 0; b < psi.amp.size(); ++b) {
          if (b & tbit) continue;
          const auto lo = psi.amp[b], hi = psi.amp[b | tbit];
          psi.amp[b] = ch * lo - im * sh * hi;
          psi.amp[b | tbit] = ch * hi - im * sh * lo;
        }
        break;
      }
      case GateKind::Rz: {
        const std::complex<double> ph_lo = std::exp(-im * (g.angle / 2.0));
        const std::complex<double> ph_hi = std::exp(im * (g.angle / 2.0));
        for (std::uint64_t b = 0; b < psi.amp.size(); ++b)
          psi.amp[b] *= (b & tbit) ? ph_hi : ph_lo;
        break;
      }
      case GateKind::Cnot: {
        const std::uint64_t cbit = std::uint64_t{1} << (g.control - 1);
        for (std::uint64_t b = 0; b < psi.amp.size(); ++b)
          if ((b & cbit) && !(b & tbit)) std::swap(psi.amp[b], psi.amp[b | tbit]);
        break;
      }
    }
  }
  const std::complex<double> phase = std::exp(im * c.global_phase);
  for (auto& a : psi.amp) a *= phase;
  return psi;
}

}  // namespace dafact
