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

#include "dafact/exact_evolve.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/numeric/odeint.hpp>

namespace dafact {

namespace {

// Real-flattened state [Re psi | Im psi] keeps the stepper's error control on
// plain doubles.
using Flat = std::vector<double>;

struct SchroedingerRhs {
  const AnnealingProblem* p;
  const CdSpec* cd;
  double T;

  void operator()(const Flat& y, Flat& dydt, double t) const {
    const std::size_t dim = y.size() / 2;
    StateVector psi;
    psi.n = p->n;
    psi.amp.resize(dim);
    for (std::size_t b = 0; b < dim; ++b) psi.amp[b] = {y[b], y[dim + b]};
    const PauliSum H = total_hamiltonian(*p, *cd, t, T);
    std::vector<std::complex<double>> hpsi(dim, {0.0, 0.0});
    for (const PauliTerm& term : H.terms()) accumulate_pauli_apply(hpsi, psi, term.p, term.coeff);
    dydt.resize(2 * dim);
    for (std::size_t b = 0; b < dim; ++b) {
      // d psi/dt = -i H psi
      dydt[b] = hpsi[b].imag();
      dydt[dim + b] = -hpsi[b].real();
    }
  }
};

}  // namespace

StateVector exact_evolve(const AnnealingProblem& p, const CdSpec& cd, double T, double rtol,
                         double atol) {
  if (p.n > kExactEvolveSiteCap) throw CapExceeded("exact_evolve: site count above cap");
  if (T < 0.0) throw InvalidInput("exact_evolve: negative total time");
  StateVector psi = plus_state(p.n);
  if (T == 0.0) return psi;

  const std::size_t dim = psi.amp.size();
  Flat y(2 * dim);
  for (std::size_t b = 0; b < dim; ++b) {
    y[b] = psi.amp[b].real();
    y[dim + b] = psi.amp[b].imag();
  }

  namespace ode = boost::numeric::odeint;
  ode::runge_kutta_fehlberg78<Flat> stepper;
  auto controlled = ode::make_controlled(atol, rtol, stepper);
  ode::integrate_adaptive(controlled, SchroedingerRhs{&p, &cd, T}, y, 0.0, T, T / 100.0);

  for (std::size_t b = 0; b < dim; ++b) psi.amp[b] = {y[b], y[dim + b]};
  const double drift = std::abs(norm(psi) - 1.0);
  if (drift > 1e-6)
    throw std::runtime_error("exact_evolve: norm drift " + std::to_string(drift) +
                             " exceeds tolerance");
  return psi;
}

}  // namespace dafact
