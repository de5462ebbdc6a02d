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
#include <string>
#include <vector>

namespace dafact {

// Coefficients with magnitude below this are dropped during normalization.
inline constexpr double kCoeffTol = 1e-12;

// Hermitian n-qubit Pauli pattern stored as X/Z bitmasks. Site k (1-based)
// maps to bit k-1. Per-site (x,z) bits: (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y.
// The operator represented is P = i^{|x&z|} X^x Z^z, which satisfies
// P = P^dagger and P^2 = I.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  // Canonical order: lexicographic on (z, x).
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    if (a.z != b.z) return a.z <=> b.z;
    return a.x <=> b.x;
  }

  bool identity() const { return x == 0 && z == 0; }
  int weight() const;  // number of non-identity sites
  bool commutes_with(const PauliString& other) const;
  // P(a)P(b) = i^e P(a^b); returns e mod 4.
  static int product_phase_exp(const PauliString& a, const PauliString& b);
  std::string to_string(int n_sites) const;  // e.g. "Z1 Y3"
};

struct PauliTerm {
  PauliString p;
  double coeff = 0.0;
};

// Real linear combination of Hermitian Pauli patterns, kept sorted in the
// canonical (z, x) order with duplicates combined and |coeff| < kCoeffTol
// dropped. All operators in this library (Hamiltonians, gauge potentials,
// their commutator combinations i[A,B]) are Hermitian, so real coefficients
// are closed under every operation provided here.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(std::vector<PauliTerm> terms);

  static PauliSum identity(double coeff);

  const std::vector<PauliTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(double s);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, double s) { return a *= s; }
  friend PauliSum operator*(double s, PauliSum a) { return a *= s; }

  void add_term(PauliString p, double coeff);
  // Re-sorts, merges duplicates, drops negligible coefficients.
  void normalize();

  double coeff_of(const PauliString& p) const;  // 0 if absent
  // Largest site index (1-based) touched by any term; 0 for scalar sums.
  int max_site() const;

  std::string to_string(int n_sites) const;

 private:
  std::vector<PauliTerm> terms_;
};

// i[A, B]; Hermitian (real coefficients) when A and B are.
PauliSum commutator_i(const PauliSum& a, const PauliSum& b);

// Normalized Hilbert-Schmidt inner product Tr(A B) / 2^n. Orthonormality of
// Pauli patterns makes this a coefficient dot product, independent of n.
double hs_inner(const PauliSum& a, const PauliSum& b);

inline double hs_norm2(const PauliSum& a) { return hs_inner(a, a); }

}  // namespace dafact
