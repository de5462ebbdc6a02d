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
#include <map>

namespace dafact {

// Diagonal Ising operator: coefficient per Z-pattern site mask (bit k-1 of the
// mask = sigma^z on site k), plus the identity coefficient. Values are exact
// dyadic rationals for every encoding in this library.
struct IsingForm {
  std::map<std::uint64_t, double> zc;
  double constant = 0.0;
};

// Multilinear polynomial over binary variables v_0, v_1, ... with integer
// coefficients; v^2 = v is applied on multiplication (monomial = variable-set
// mask). Integer arithmetic keeps the squared-cost expansion exact before the
// spin substitution.
class BinaryPolynomial {
 public:
  BinaryPolynomial() = default;

  static BinaryPolynomial constant(std::int64_t c);
  static BinaryPolynomial variable(int v);

  const std::map<std::uint64_t, std::int64_t>& monomials() const { return mono_; }

  BinaryPolynomial& operator+=(const BinaryPolynomial& o);
  BinaryPolynomial& operator-=(const BinaryPolynomial& o);
  friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) { return a += b; }
  friend BinaryPolynomial operator-(BinaryPolynomial a, const BinaryPolynomial& b) { return a -= b; }
  friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);
  BinaryPolynomial& operator*=(std::int64_t s);
  friend BinaryPolynomial operator*(BinaryPolynomial a, std::int64_t s) { return a *= s; }
  friend BinaryPolynomial operator*(std::int64_t s, BinaryPolynomial a) { return a *= s; }

  // Evaluates at the assignment "variable i = bit i of point".
  std::int64_t evaluate(std::uint64_t point) const;

  // Substitutes v_i = (1 - sigma_i)/2, expanding each monomial into the
  // signed subset sum over its variables. Variable i maps to site i+1.
  IsingForm to_ising() const;

 private:
  void prune();
  std::map<std::uint64_t, std::int64_t> mono_;
};

}  // namespace dafact
