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

#include "dafact/encoding.hpp"

#include <bit>
#include <cmath>

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

TEST_CASE("register size formulas") {
  CHECK(factor_register_sizes(217) == std::pair{3, 6});
  CHECK(factor_register_sizes(9) == std::pair{1, 1});
  CHECK_THROWS_AS(factor_register_sizes(8), InvalidInput);
  CHECK_THROWS_AS(factor_register_sizes(7), InvalidInput);
}

TEST_CASE("decode reconstructs factors with fixed low bits") {
  const auto inst217 = make_instance_known_lengths(217, 3, 5);
  REQUIRE(inst217.n_qubits() == 6);
  CHECK(inst217.decode(0b111111) == std::pair{7LL, 31LL});
  CHECK(inst217.decode(0) == std::pair{1LL, 1LL});

  const auto inst91 = make_instance_known_lengths(91, 3, 4);
  REQUIRE(inst91.n_qubits() == 5);
  CHECK(inst91.decode(0b11011) == std::pair{7LL, 13LL});
  CHECK(ket_label(0b11011, 5) == "11011");
  CHECK(ket_label(0b0100, 4) == "0100");
}

TEST_CASE("direct Hamiltonian for 217 matches the printed listing") {
  const auto inst = make_instance_known_lengths(217, 3, 5);
  const IsingForm H = build_direct_hamiltonian(inst);
  CHECK(H.constant == doctest::Approx(26474.0));
  CHECK(H.zc.at(0b000011) == doctest::Approx(1364.0));
  CHECK(H.zc.at(0b000001) == doctest::Approx(4216.0));
  CHECK(H.zc.at(0b001111) == doctest::Approx(16.0));
  // Every coefficient is an integer for the direct encoding.
  for (const auto& [mask, c] : H.zc) CHECK(c == doctest::Approx(std::round(c)).epsilon(1e-12));
  // Diagonal equals (N - xy)^2 for every basis label.
  for (std::uint64_t b = 0; b < 64; ++b) {
    const auto [x, y] = inst.decode(b);
    const double want = static_cast<double>((217 - x * y) * (217 - x * y));
    CHECK(ising_eval(H, b) == doctest::Approx(want).epsilon(1e-12));
  }
  // Sum of all coefficients = diagonal at |0...0> = (N-1)^2.
  double sum = H.constant;
  for (const auto& [mask, c] : H.zc) sum += c;
  CHECK(sum == doctest::Approx(216.0 * 216.0));
  const auto [e0, labels] = exact_ground_states(inst);
  CHECK(e0 == doctest::Approx(0.0));
  REQUIRE(labels.size() == 1);
  CHECK(ket_label(labels[0], 6) == "111111");
}

TEST_CASE("diagonal equality for 15 and ground state for 21") {
  const auto i15 = make_instance_known_lengths(15, 2, 3);
  const IsingForm H15 = build_direct_hamiltonian(i15);
  for (std::uint64_t b = 0; b < 8; ++b) {
    const auto [x, y] = i15.decode(b);
    CHECK(ising_eval(H15, b) == doctest::Approx(static_cast<double>((15 - x * y) * (15 - x * y))));
  }
  const auto i21 = make_instance_known_lengths(21, 2, 3);
  const IsingForm H21 = build_direct_hamiltonian(i21);
  CHECK(ising_eval(H21, 0b111) == doctest::Approx(0.0));
  const auto [e0, labels] = exact_ground_states(i21);
  CHECK(e0 == doctest::Approx(0.0));
  REQUIRE(labels.size() == 1);
  CHECK(ket_label(labels[0], 3) == "111");
  CHECK(i21.decode(labels[0]) == std::pair{3LL, 7LL});
}

TEST_CASE("x/y exchange symmetry gives the 35 degenerate pair") {
  const auto inst = make_instance_known_lengths(35, 3, 3);
  const auto [e0, labels] = exact_ground_states(inst);
  CHECK(e0 == doctest::Approx(0.0));
  REQUIRE(labels.size() == 2);
  CHECK(ket_label(labels[0], 4) + "," + ket_label(labels[1], 4) == "1011,1110");
  CHECK(inst.decode(labels[0]) == std::pair{7LL, 5LL});
  CHECK(inst.decode(labels[1]) == std::pair{5LL, 7LL});
  // Swapping the two registers leaves the Hamiltonian unchanged when
  // bits_x == bits_y.
  const IsingForm H = build_direct_hamiltonian(inst);
  for (std::uint64_t b = 0; b < 16; ++b) {
    const std::uint64_t swapped = ((b & 0b0011) << 2) | ((b >> 2) & 0b0011);
    CHECK(ising_eval(H, b) == doctest::Approx(ising_eval(H, swapped)));
  }
}

TEST_CASE("caps and validation") {
  CHECK_THROWS_AS(make_instance_known_lengths(10, 3, 3), InvalidInput);
  CHECK_THROWS_AS(make_instance_known_lengths(21, 1, 3), InvalidInput);
  CHECK_THROWS_AS(build_direct_hamiltonian(make_instance_known_lengths(3, 10, 10)), CapExceeded);
  const auto fb = make_instance_formula_bound(217);
  CHECK(fb.bits_x == 4);
  CHECK(fb.bits_y == 7);
}

TEST_CASE("golden rendering format") {
  const auto inst = make_instance_known_lengths(217, 3, 5);
  const IsingForm H = build_direct_hamiltonian(inst);
  const std::string text = render_ising(H, 6);
  CHECK(text.find("26474.0 IIIIII") != std::string::npos);
  CHECK(text.find("1364.0 ZZIIII") != std::string::npos);
  CHECK(text.find("4216.0 ZIIIII") != std::string::npos);
  CHECK(text.find("16.0 ZZZZII") != std::string::npos);
}
