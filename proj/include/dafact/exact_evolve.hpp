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

inline constexpr int kExactEvolveSiteCap = 10;

// Continuous-time oracle: integrates d psi/dt = -i H(t) psi from |+>^n with
// an adaptive 8th-order Runge-Kutta-Fehlberg stepper, H(t) applied
// matrix-free term by term. The CD coefficient solve runs at every right-hand
// side evaluation, so this is the reference, not the fast path. Caps n at
// kExactEvolveSiteCap; throws if the final norm drifted beyond 1e-6.
StateVector exact_evolve(const AnnealingProblem& p, const CdSpec& cd, double T,
                         double rtol = 1e-10, double atol = 1e-12);

}  // namespace dafact
