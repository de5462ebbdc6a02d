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

#include "dafact/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "dafact/encoding.hpp"

namespace dafact {

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

StateVector plus_state(int n) {
  if (n < 1 || n > kStateSiteCap) throw CapExceeded("plus_state: n outside [1, 24]");
  StateVector s;
  s.n = n;
  s.amp.assign(std::size_t{1} << n, Cplx(std::pow(2.0, -n / 2.0), 0.0));
  return s;
}

double norm(const StateVector& s) {
  double acc = 0.0;
  for (const Cplx& a : s.amp) acc += std::norm(a);
  return std::sqrt(acc);
}

void apply_phase_table(StateVector& s, const std::vector<double>& energy, double scale) {
  if (energy.size() != s.amp.size()) throw InvalidInput("apply_phase_table: size mismatch");
  const std::int64_t dim = static_cast<std::int64_t>(s.amp.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < dim; ++b)
    s.amp[b] *= Cplx(std::cos(scale * energy[b]), -std::sin(scale * energy[b]));
}

void apply_pauli_exponential(StateVector& s, double theta, const PauliString& p) {
  const std::int64_t dim = static_cast<std::int64_t>(s.amp.size());
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  if (p.x == 0) {
    // Diagonal pattern: amp[b] *= exp(-i theta sgn(b)).
    const Cplx ph_plus(c, -sn), ph_minus(c, sn);
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < dim; ++b)
      s.amp[b] *= (std::popcount(static_cast<std::uint64_t>(b) & p.z) & 1) ? ph_minus : ph_plus;
    return;
  }
  const std::uint64_t low = p.x & (~p.x + 1);
  const Cplx base = i_power(std::popcount(p.x & p.z));
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < dim; ++a) {
    if (static_cast<std::uint64_t>(a) & low) continue;  // partner handles it
    const std::uint64_t b = static_cast<std::uint64_t>(a) ^ p.x;
    const Cplx pa = base * parity_sign(static_cast<std::uint64_t>(a) & p.z);
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
  const std::int64_t dim = static_cast<std::int64_t>(s.amp.size());
  const Cplx base = coeff * i_power(std::popcount(p.x & p.z));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < dim; ++b) {
    const std::uint64_t src = static_cast<std::uint64_t>(b) ^ p.x;
    out[b] += base * parity_sign(src & p.z) * s.amp[src];
  }
}

std::vector<double> probabilities(const StateVector& s) {
  std::vector<double> pr(s.amp.size());
  for (std::size_t b = 0; b < s.amp.size(); ++b) pr[b] = std::norm(s.amp[b]);
  return pr;
}

double success_probability(const StateVector& s, const std::vector<std::uint64_t>& labels) {
  double acc = 0.0;
  for (std::uint64_t l : labels) {
    if (l >= s.amp.size()) throw InvalidInput("success_probability: label out of range");
    acc += std::norm(s.amp[l]);
  }
  return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.amp.size() != b.amp.size()) throw InvalidInput("fidelity: size mismatch");
  Cplx ov(0.0, 0.0);
  for (std::size_t k = 0; k < a.amp.size(); ++k) ov += std::conj(a.amp[k]) * b.amp[k];
  return std::norm(ov);
}

StateVector uniform_superposition(int n, const std::vector<std::uint64_t>& labels) {
  if (n < 1 || n > kStateSiteCap) throw CapExceeded("uniform_superposition: n outside [1, 24]");
  if (labels.empty()) throw InvalidInput("uniform_superposition: no labels");
  StateVector s;
  s.n = n;
  s.amp.assign(std::size_t{1} << n, Cplx(0.0, 0.0));
  const double w = 1.0 / std::sqrt(static_cast<double>(labels.size()));
  for (std::uint64_t l : labels) {
    if (l >> n) throw InvalidInput("uniform_superposition: label out of range");
    s.amp[l] = Cplx(w, 0.0);
  }
  return s;
}

std::map<std::uint64_t, long long> sample_counts(const StateVector& s, long long shots,
                                                 std::uint64_t seed) {
  if (shots < 0) throw InvalidInput("sample_counts: negative shot count");
  std::vector<double> cum(s.amp.size());
  double acc = 0.0;
  for (std::size_t b = 0; b < s.amp.size(); ++b) {
    acc += std::norm(s.amp[b]);
    cum[b] = acc;
  }
  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, long long> counts;
  for (long long k = 0; k < shots; ++k) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    const std::uint64_t idx = it == cum.end() ? s.amp.size() - 1
                                              : static_cast<std::uint64_t>(it - cum.begin());
    ++counts[idx];
  }
  return counts;
}

}  // namespace dafact
