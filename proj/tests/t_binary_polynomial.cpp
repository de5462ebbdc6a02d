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
#include <random>

#include <doctest.h>

using namespace dafact;

namespace {

double ising_eval(const IsingForm& H, std::uint64_t b) {
  double e = H.constant;
  for (const auto& [mask, c] : H.zc)
    e += (std::popcount(mask & b) & 1) ? -c : c;
  return e;
}

}  // namespace

TEST_CASE("variable idempotence under multiplication") {
  const auto v = BinaryPolynomial::variable(3);
  const auto sq = v * v;
  REQUIRE(sq.monomials().size() == 1);
  CHECK(sq.monomials().begin()->first == (std::uint64_t{1} << 3));
  CHECK(sq.monomials().begin()->second == 1);
}

TEST_CASE("arithmetic and evaluation") {
  // p = (1 + 2 a)(1 + 2 b + 4 c) with a=v0, b=v1, c=v2
  const auto a = BinaryPolynomial::variable(0);
  const auto b = BinaryPolynomial::variable(1);
  const auto c = BinaryPolynomial::variable(2);
  const auto p = (BinaryPolynomial::constant(1) + 2 * a) *
                 (BinaryPolynomial::constant(1) + 2 * b + 4 * c);
  for (std::uint64_t pt = 0; pt < 8; ++pt) {
    const std::int64_t av = pt & 1, bv = (pt >> 1) & 1, cv = (pt >> 2) & 1;
    CHECK(p.evaluate(pt) == (1 + 2 * av) * (1 + 2 * bv + 4 * cv));
  }
  const auto zero = p - p;
  CHECK(zero.monomials().empty());
}

TEST_CASE("spin substitution reproduces the polynomial pointwise") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int nv = 1 + static_cast<int>(rng() % 5);
    BinaryPolynomial p;
    for (int t = 0; t < 6; ++t) {
      std::uint64_t mask = rng() & ((std::uint64_t{1} << nv) - 1);
      BinaryPolynomial m = BinaryPolynomial::constant(
          static_cast<std::int64_t>(rng() % 21) - 10);
      for (int v = 0; v < nv; ++v)
        if (mask >> v & 1) m = m * BinaryPolynomial::variable(v);
      p += m;
    }
    const IsingForm H = p.to_ising();
    for (std::uint64_t pt = 0; pt < (std::uint64_t{1} << nv); ++pt)
      CHECK(ising_eval(H, pt) == doctest::Approx(static_cast<double>(p.evaluate(pt))).epsilon(1e-12));
  }
}
