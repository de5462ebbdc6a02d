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
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dafact/binary_polynomial.hpp"

namespace dafact {

// Raised for structurally invalid requests (CLI maps it to exit code 2).
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when a valid request cannot admit a solution (CLI exit code 3).
struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when a size cap would be exceeded (CLI exit code 4).
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDirectQubitCap = 16;
inline constexpr int kDiagonalEnumCap = 24;

// Unknown-bit register sizes from the a-priori bounds: the largest factor
// candidate for x is the largest odd integer <= sqrt(N), and y is bounded by
// N/3 (3 is the smallest admissible odd factor). m() is the bit length.
//   n_x = m(odd_floor(sqrt(N))) - 1,  n_y = m(floor(N/3)) - 1.
std::pair<int, int> factor_register_sizes(long long N);

// Direct-encoding instance: factors written with their first (and only the
// first) bit fixed to 1, x = 1 + sum_{l=1}^{bits_x-1} 2^l x_l. Qubits 1..n
// hold the x-register unknowns in ascending significance, then y's.
struct FactorizationInstance {
  long long N = 0;
  int bits_x = 0;
  int bits_y = 0;

  int n_qubits() const { return (bits_x - 1) + (bits_y - 1); }
  // Reconstructs the factor candidates for a basis label (qubit k = bit k-1).
  std::pair<long long, long long> decode(std::uint64_t label) const;
};

FactorizationInstance make_instance_known_lengths(long long N, int bits_x, int bits_y);
FactorizationInstance make_instance_formula_bound(long long N);

// Expands H_f = (N - x*y)^2 exactly over the unknown bits and maps
// q = (1 - sigma^z)/2. All coefficients are integers.
IsingForm build_direct_hamiltonian(const FactorizationInstance& inst);

// Exhaustive diagonal minimum by direct polynomial evaluation (independent of
// the Ising expansion); returns minimal energy and every argmin label.
std::pair<double, std::vector<std::uint64_t>> exact_ground_states(const FactorizationInstance& inst);

// Diagonal minimum of an arbitrary Ising form on n qubits (<= kDiagonalEnumCap).
std::pair<double, std::vector<std::uint64_t>> exact_ground_states(const IsingForm& H, int n);

// Basis label rendered with site n leftmost, so kets read right-to-left as
// q_1..q_n (e.g. label 0b0100 on 4 qubits prints "0100").
std::string ket_label(std::uint64_t label, int n);

// One term per line, "coeff op-string" with site 1 leftmost (e.g. "1364 ZZIIII");
// identity row first, then terms in canonical order.
std::string render_ising(const IsingForm& H, int n);

}  // namespace dafact
