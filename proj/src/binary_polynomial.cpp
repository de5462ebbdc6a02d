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

#include "dafact/binary_polynomial.hpp"

#include <bit>
#include <cmath>

namespace dafact {

BinaryPolynomial BinaryPolynomial::constant(std::int64_t c) {
  BinaryPolynomial p;
  if (c != 0) p.mono_[0] = c;
  return p;
}

BinaryPolynomial BinaryPolynomial::variable(int v) {
  BinaryPolynomial p;
  p.mono_[std::uint64_t{1} << v] = 1;
  return p;
}

void BinaryPolynomial::prune() {
  std::erase_if(mono_, [](const auto& kv) { return kv.second == 0; });
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& o) {
  for (const auto& [m, c] : o.mono_) mono_[m] += c;
  prune();
  return *this;
}

BinaryPolynomial& BinaryPolynomial::operator-=(const BinaryPolynomial& o) {
  for (const auto& [m, c] : o.mono_) mono_[m] -= c;
  prune();
  return *this;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  BinaryPolynomial out;
  for (const auto& [ma, ca] : a.mono_)
    for (const auto& [mb, cb] : b.mono_) out.mono_[ma | mb] += ca * cb;
  out.prune();
  return out;
}

BinaryPolynomial& BinaryPolynomial::operator*=(std::int64_t s) {
  for (auto& [m, c] : mono_) c *= s;
  prune();
  return *this;
}

std::int64_t BinaryPolynomial::evaluate(std::uint64_t point) const {
  std::int64_t acc = 0;
  for (const auto& [m, c] : mono_)
    if ((m & point) == m) acc += c;
  return acc;
}

IsingForm BinaryPolynomial::to_ising() const {
  // prod_{i in m} (1 - sigma_i)/2 = 2^{-|m|} sum_{S subseteq m} (-1)^{|S|} sigma_S
  IsingForm out;
  for (const auto& [m, c] : mono_) {
    const double scale = c / static_cast<double>(std::uint64_t{1} << std::popcount(m));
    std::uint64_t s = 0;
    while (true) {
      const double signedc = (std::popcount(s) & 1) ? -scale : scale;
      if (s == 0) {
        out.constant += signedc;
      } else {
        out.zc[s] += signedc;
      }
      if (s == m) break;
      s = (s - m) & m;  // next subset of m
    }
  }
  std::erase_if(out.zc, [](const auto& kv) { return std::abs(kv.second) < 1e-12; });
  return out;
}

}  // namespace dafact
