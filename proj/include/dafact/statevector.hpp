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

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "dafact/pauli.hpp"

namespace dafact {

inline constexpr int kStateSiteCap = 24;

// Dense statevector on n qubits; basis index bit k-1 holds qubit k. The hot
// kernels are OpenMP-parallel with every amplitude written exactly once and
// no cross-element reductions, so results are bitwise independent of the
// worker count. dafact::serial holds a plain-loop mirror used as the
// reference in tests and benchmarks.
struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amp;
};

// All 2^n amplitudes equal 2^(-n/2); requires 1 <= n <= kStateSiteCap.
StateVector plus_state(int n);

double norm(const StateVector& s);

// amp[b] *= exp(-i * scale * energy[b]); energy has 2^n entries.
void apply_phase_table(StateVector& s, const std::vector<double>& energy, double scale);

// Applies exp(-i theta P) exactly: P maps |b> to
// i^{|x&z|} (-1)^{popcount(b&z)} |b xor x>, so amplitudes rotate in the
// (b, b xor x) pairs; norm is preserved for any theta.
void apply_pauli_exponential(StateVector& s, double theta, const PauliString& p);

// out += coeff * (P |s>); out must hold 2^n entries (matrix-free H psi).
void accumulate_pauli_apply(std::vector<std::complex<double>>& out, const StateVector& s,
                            const PauliString& p, double coeff);

std::vector<double> probabilities(const StateVector& s);

// Total probability mass on the given basis labels.
double success_probability(const StateVector& s, const std::vector<std::uint64_t>& labels);

// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

// Equal-amplitude superposition of the given basis labels.
StateVector uniform_superposition(int n, const std::vector<std::uint64_t>& labels);

// Seeded categorical sampling by inverse CDF over the basis distribution;
// uniform deviates are built from the top 53 bits of mt19937_64 outputs, so
// histograms are bit-reproducible across platforms. Labels with zero counts
// are omitted. shots >= 0.
std::map<std::uint64_t, long long> sample_counts(const StateVector& s, long long shots,
                                                 std::uint64_t seed);

namespace serial {
// Reference kernels: same arithmetic as the parallel versions, plain loops.
void apply_phase_table(StateVector& s, const std::vector<double>& energy, double scale);
void apply_pauli_exponential(StateVector& s, double theta, const PauliString& p);
void accumulate_pauli_apply(std::vector<std::complex<double>>& out, const StateVector& s,
                            const PauliString& p, double coeff);
}  // namespace serial

}  // namespace dafact
