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

#include "dafact/pauli.hpp"

#include <complex>
#include <random>

#include <doctest.h>

#include "dense_oracle.hpp"

using namespace dafact;
using dafact::testing::dense;
using dafact::testing::Mat;

namespace {

PauliString random_pattern(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::uint64_t> d(0, (std::uint64_t{1} << n) - 1);
  return PauliString{d(rng), d(rng)};
}

PauliSum random_sum(std::mt19937_64& rng, int n, int nterms) {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::vector<PauliTerm> ts;
  for (int i = 0; i < nterms; ++i) ts.push_back({random_pattern(rng, n), coeff(rng)});
  return PauliSum(std::move(ts));
}

}  // namespace

TEST_CASE("pattern hermiticity and involution") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const PauliString p = random_pattern(rng, n);
    const Mat m = dense(p, n);
    CHECK((m - m.adjoint()).norm() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK((m * m - Mat::Identity(m.rows(), m.cols())).norm() ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("product phase against dense kron oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const PauliString a = random_pattern(rng, n);
    const PauliString b = random_pattern(rng, n);
    const int e = PauliString::product_phase_exp(a, b);
    const PauliString c{a.x ^ b.x, a.z ^ b.z};
    const std::complex<double> phase = std::pow(std::complex<double>(0, 1), e);
    const Mat lhs = dense(a, n) * dense(b, n);
    const Mat rhs = phase * dense(c, n);
    CHECK((lhs - rhs).norm() < 1e-9);
    // Commutation predicate must agree with the dense commutator.
    const Mat comm = dense(a, n) * dense(b, n) - dense(b, n) * dense(a, n);
    CHECK(a.commutes_with(b) == (comm.norm() < 1e-9));
  }
}

TEST_CASE("commutator_i against dense oracle") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const PauliSum A = random_sum(rng, n, 4);
    const PauliSum B = random_sum(rng, n, 4);
    const PauliSum C = commutator_i(A, B);
    const Mat a = dense(A, n), b = dense(B, n);
    const Mat expect = std::complex<double>(0, 1) * (a * b - b * a);
    CHECK((dense(C, n) - expect).norm() < 1e-9);
    // i[A,B] of Hermitian sums is Hermitian.
    const Mat c = dense(C, n);
    CHECK((c - c.adjoint()).norm() < 1e-12);
  }
}

TEST_CASE("hs_inner matches normalized dense trace") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const PauliSum A = random_sum(rng, n, 5);
    const PauliSum B = random_sum(rng, n, 5);
    const double got = hs_inner(A, B);
    const double expect = dafact::testing::hs_inner_dense(dense(A, n), dense(B, n));
    CHECK(got == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("normalization merges, orders, and drops zeros") {
  PauliSum s;
  s.add_term(PauliString{0b01, 0b10}, 0.5);
  s.add_term(PauliString{0b01, 0b10}, 0.25);
  s.add_term(PauliString{0b00, 0b01}, 1.0);
  s.add_term(PauliString{0b00, 0b01}, -1.0);
  REQUIRE(s.size() == 1);
  CHECK(s.terms()[0].coeff == doctest::Approx(0.75));
  CHECK(s.coeff_of(PauliString{0b01, 0b10}) == doctest::Approx(0.75));
  CHECK(s.coeff_of(PauliString{0, 0b01}) == doctest::Approx(0.0));

  // Canonical order is lexicographic on (z, x).
  PauliSum t;
  t.add_term(PauliString{0b10, 0b00}, 1.0);
  t.add_term(PauliString{0b00, 0b01}, 1.0);
  t.add_term(PauliString{0b01, 0b00}, 1.0);
  REQUIRE(t.size() == 3);
  CHECK(t.terms()[0].p == PauliString{0b01, 0b00});
  CHECK(t.terms()[1].p == PauliString{0b10, 0b00});
  CHECK(t.terms()[2].p == PauliString{0b00, 0b01});
}

TEST_CASE("weight, max_site, printing") {
  const PauliString p{0b101, 0b110};  // X1, Y3 on bits 0,2; Z2 on bit 1
  CHECK(p.weight() == 3);
  CHECK(p.to_string(3) == "X1 Z2 Y3");
  PauliSum s;
  s.add_term(p, -1.5);
  CHECK(s.max_site() == 3);
  CHECK(PauliSum::identity(2.0).max_site() == 0);
}
