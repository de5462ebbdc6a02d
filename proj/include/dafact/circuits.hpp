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

#include <map>
#include <string>
#include <vector>

#include "dafact/trotter.hpp"

namespace dafact {

// Gate semantics: H is the Hadamard, Rx(phi) = exp(-i phi X / 2),
// Rz(phi) = exp(-i phi Z / 2), Cnot flips `q` when `control` is set.
enum class GateKind { H, Rx, Rz, Cnot };

// Which part of the splitting a gate implements: the preparation layer, the
// interpolated problem Hamiltonian, or the counterdiabatic term.
enum class GateComponent { Prep, Adiabatic, Cd };

struct Gate {
  GateKind kind = GateKind::H;
  int q = 0;        // target site (1-based)
  int control = 0;  // Cnot control site; 0 for one-qubit gates
  double angle = 0.0;
  int step = 0;  // splitting step; 0 for the preparation layer
  GateComponent component = GateComponent::Prep;
  PauliString origin;  // exponentiated pattern the gate came from
};

// Immutable after build. The represented unitary is
// exp(i global_phase) x (product of the gates applied in list order); phases
// from identity patterns are recorded, never emitted as gates.
struct Circuit {
  int n = 0;
  std::vector<Gate> gates;
  double global_phase = 0.0;
};

// Appends gates implementing exp(-i theta P) exactly: per-site basis changes
// (H for X, Rx(pi/2)/Rx(-pi/2) for Y), a Cnot ladder collecting parity onto
// the highest active site, and one Rz(2 theta) there. A k-site pattern costs
// 2(k-1) Cnots + 1 Rz plus the basis changes; the identity pattern adds no
// gates and -theta of global phase.
void append_pauli_exponential(Circuit& c, double theta, const PauliString& p, int step,
                              GateComponent component);

// The digitized evolution as a circuit: a Hadamard layer preparing |+>^n,
// then per step the diagonal terms (sorted by weight, then mask), the
// transverse field, and the counterdiabatic terms, at the same sampled
// schedule point and in the same order as trotter_evolve. The constant
// diagonal term only shifts the global phase. Simulating the result matches
// trotter_evolve to roundoff.
Circuit compile_plan(const AnnealingProblem& p, const CdSpec& cd, const TrotterPlan& plan);

struct GateCounts {
  long long total = 0;
  std::map<std::string, long long> by_kind;       // "h", "rx", "rz", "cx"
  std::map<int, long long> by_step;               // 0 = preparation layer
  std::map<std::string, long long> by_component;  // "prep", "adiabatic", "cd"
};

GateCounts gate_counts(const Circuit& c);

// OpenQASM 2.0 text: header, registers, the gates in order (site k maps to
// q[k-1]), terminal measurement of every qubit. Byte-deterministic; the
// global phase is unobservable and not emitted.
std::string emit_qasm(const Circuit& c);

// Applies the circuit to |0...0> (gate list order, then the global phase).
StateVector simulate(const Circuit& c);

}  // namespace dafact
