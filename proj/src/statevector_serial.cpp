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

// Serial reference kernels. Same arithmetic as the OpenMP versions in
// statevector.cpp, spelled as plain loops; tests assert bitwise-identical
// amplitudes and the benchmark tool compares throughput.

#include <bit>
#include <cmath>

#include "dafact/encoding.hpp"
#include "dafact/statevector.hpp"

namespace dafact::serial {

namespace {

using Cplx = std::complex<double>;

inline Cplx i_power(int e) {
  switch (e & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline double parity_sign(std::uint64_t v) { return (std::popcount(v) & 1) ? -1.0 : 1.0; }

}  // namespace

void apply_phase_table(StateVector& s, const std::vector<double>& energy, double scale) {
  if (energy.size() != s.amp.size()) throw InvalidInput("apply_phase_table: size mismatch");
  for (std::size_t b = 0; b < s.amp.size(); ++b)
    s.amp[b] *= Cplx(std::cos(scale * energy[b]), -std::sin(scale * energy[b]));
}

void apply_pauli_exponential(StateVector& s, double theta, const PauliString& p) {
  const std::size_t dim = s.amp.size();
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  if (p.x == 0) {
    const Cplx ph_plus(c, -sn), ph_minus(c, sn);
    for (std::size_t b = 0; b < dim; ++b)
      s.amp[b] *= (std::popcount(b & p.z) & 1) ? ph_minus : ph_plus;
    return;
  }
  const std::uint64_t low = p.x & (~p.x + 1);
  const Cplx base = i_power(std::popcount(p.x & p.z));
  for (std::size_t a = 0; a < dim; ++a) {
    if (a & low) continue;
    const std::uint64_t b = a ^ p.x;
    const Cplx pa = base * parity_sign(a & p.z);
    const Cplx pb = base * parity_sign(b & p.z);
    const Cplx va = s.amp[a];
    const Cplx vb = s.amp[b];
    s.amp[a] = c * va - Cplx(0.0, sn) * (pb * vb);
    s.amp[b] = c * vb - Cplx(0.0, sn) * (pa * va);
  }
}

void accumulate_pauli_apply(std::vector<std::complex<double>>& out, const StateVector& s,
                            const PauliString& p, double coeff) {
  if (out.size() != s.amp.size()) throw InvalidInput("accumulate_pauli_apply: size mismatch");
  const Cplx base = coeff * i_power(std::popcount(p.x & p.z));
  for (std::size_t b = 0; b < s.amp.size(); ++b) {
    const std::uint64_t src = b ^ p.x;
    out[b] += base * parity_sign(src & p.z) * s.amp[src];
  }
}

}  // namespace dafact::serial
