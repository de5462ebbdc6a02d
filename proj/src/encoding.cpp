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
#include <cstdio>
#include <sstream>

namespace dafact {

namespace {

int bit_length(long long v) { return std::bit_width(static_cast<std::uint64_t>(v)); }

std::string format_coeff(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

}  // namespace

std::pair<int, int> factor_register_sizes(long long N) {
  if (N < 9) throw InvalidInput("factor_register_sizes: N must be >= 9");
  if (N % 2 == 0) throw InvalidInput("factor_register_sizes: N must be odd");
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(N)));
  while ((r + 1) * (r + 1) <= N) ++r;
  while (r * r > N) --r;
  if (r % 2 == 0) --r;  // largest odd integer <= sqrt(N)
  const int n_x = bit_length(r) - 1;
  const int n_y = bit_length(N / 3) - 1;
  return {n_x, n_y};
}

std::pair<long long, long long> FactorizationInstance::decode(std::uint64_t label) const {
  long long x = 1, y = 1;
  for (int l = 1; l <= bits_x - 1; ++l)
    if (label >> (l - 1) & 1) x += 1LL << l;
  for (int m = 1; m <= bits_y - 1; ++m)
    if (label >> (bits_x - 1 + m - 1) & 1) y += 1LL << m;
  return {x, y};
}

FactorizationInstance make_instance_known_lengths(long long N, int bits_x, int bits_y) {
  if (N < 3 || N % 2 == 0) throw InvalidInput("direct encoding requires odd N >= 3");
  if (bits_x < 2 || bits_y < 2)
    throw InvalidInput("factor bit lengths must be >= 2 (a 1-bit odd factor is the trivial 1)");
  return FactorizationInstance{N, bits_x, bits_y};
}

FactorizationInstance make_instance_formula_bound(long long N) {
  const auto [n_x, n_y] = factor_register_sizes(N);
  return make_instance_known_lengths(N, n_x + 1, n_y + 1);
}

IsingForm build_direct_hamiltonian(const FactorizationInstance& inst) {
  const int n = inst.n_qubits();
  if (n > kDirectQubitCap) throw CapExceeded("direct encoding exceeds the qubit cap");
  BinaryPolynomial x = BinaryPolynomial::constant(1);
  for (int l = 1; l <= inst.bits_x - 1; ++l)
    x += (std::int64_t{1} << l) * BinaryPolynomial::variable(l - 1);
  BinaryPolynomial y = BinaryPolynomial::constant(1);
  for (int m = 1; m <= inst.bits_y - 1; ++m)
    y += (std::int64_t{1} << m) * BinaryPolynomial::variable(inst.bits_x - 1 + m - 1);
  BinaryPolynomial cost = BinaryPolynomial::constant(inst.N) - x * y;
  return (cost * cost).to_ising();
}

std::pair<double, std::vector<std::uint64_t>> exact_ground_states(const FactorizationInstance& inst) {
  const int n = inst.n_qubits();
  if (n > kDiagonalEnumCap) throw CapExceeded("diagonal enumeration exceeds the qubit cap");
  double best = 0.0;
  std::vector<std::uint64_t> argmin;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    const auto [xv, yv] = inst.decode(b);
    const double d = static_cast<double>(inst.N - xv * yv);
    const double e = d * d;
    if (b == 0 || e < best - 1e-9) {
      best = e;
      argmin.assign(1, b);
    } else if (e < best + 1e-9) {
      argmin.push_back(b);
    }
  }
  return {best, argmin};
}

std::pair<double, std::vector<std::uint64_t>> exact_ground_states(const IsingForm& H, int n) {
  if (n > kDiagonalEnumCap) throw CapExceeded("diagonal enumeration exceeds the qubit cap");
  double best = 0.0;
  std::vector<std::uint64_t> argmin;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    double e = H.constant;
    for (const auto& [mask, c] : H.zc)
      e += (std::popcount(mask & b) & 1) ? -c : c;
    if (b == 0 || e < best - 1e-9) {
      best = e;
      argmin.assign(1, b);
    } else if (e < best + 1e-9) {
      argmin.push_back(b);
    }
  }
  return {best, argmin};
}

std::string ket_label(std::uint64_t label, int n) {
  std::string s(n, '0');
  for (int k = 1; k <= n; ++k)
    if (label >> (k - 1) & 1) s[n - k] = '1';
  return s;
}

std::string render_ising(const IsingForm& H, int n) {
  std::ostringstream os;
  os << format_coeff(H.constant) << ' ' << std::string(n, 'I') << '\n';
  for (const auto& [mask, c] : H.zc) {
    std::string op(n, 'I');
    for (int k = 1; k <= n; ++k)
      if (mask >> (k - 1) & 1) op[k - 1] = 'Z';
    os << format_coeff(c) << ' ' << op << '\n';
  }
  return os.str();
}

}  // namespace dafact
