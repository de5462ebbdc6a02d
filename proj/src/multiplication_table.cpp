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

#include "dafact/multiplication_table.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace dafact {

namespace {

int popcount128(Mask m) {
  return std::popcount(static_cast<std::uint64_t>(m)) +
         std::popcount(static_cast<std::uint64_t>(m >> 64));
}

}  // namespace

int mask_popcount(Mask m) { return popcount128(m); }

int mask_lowest_bit(Mask m) {
  const auto lo = static_cast<std::uint64_t>(m);
  if (lo != 0) return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
}

bool lex_index_less(Mask a, Mask b) {
  // Lexicographic order of the ascending variable-index sequences; a strict
  // prefix sorts first.
  while (a != 0 && b != 0) {
    const int la = mask_lowest_bit(a), lb = mask_lowest_bit(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

bool graded_mono_less(Mask a, Mask b) {
  const int da = popcount128(a), db = popcount128(b);
  if (da != db) return da < db;
  return lex_index_less(a, b);
}

std::string TableVar::name() const {
  std::ostringstream os;
  if (kind == 0) os << 'x' << i;
  else if (kind == 1) os << 'y' << i;
  else os << 'c' << i << '_' << j;
  return os.str();
}

int TableSystem::var_index(const TableVar& v) const {
  const auto it = std::lower_bound(vars.begin(), vars.end(), v);
  if (it != vars.end() && *it == v) return static_cast<int>(it - vars.begin());
  return -1;
}

std::string TableSystem::render_poly(const Poly& p) const {
  if (p.empty()) return "0";
  // Graded order: constants first, then by degree, ties by variable sequence.
  std::vector<std::pair<Mask, std::int64_t>> items(p.begin(), p.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return graded_mono_less(a.first, b.first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : items) {
    os << (first ? (c < 0 ? "- " : "") : (c < 0 ? " - " : " + "));
    first = false;
    const std::int64_t a = c < 0 ? -c : c;
    std::string mono;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if ((m >> k) & 1) mono += (mono.empty() ? "" : "*") + vars[k].name();
    if (mono.empty()) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << mono;
    }
  }
  return os.str();
}

std::string TableSystem::render_system() const {
  std::ostringstream os;
  for (const Poly& p : constraints) os << render_poly(p) << " = 0\n";
  return os.str();
}

TableSystem build_table_equations(long long N, int bits_x, int bits_y) {
  if (N < 3 || N % 2 == 0) throw InvalidInput("table encoding requires odd N >= 3");
  if (bits_x < 2 || bits_y < 2) throw InvalidInput("factor bit lengths must be >= 2");

  TableSystem sys;
  sys.N = N;
  sys.bits_x = bits_x;
  sys.bits_y = bits_y;

  // Collect every variable in canonical order first so that monomial masks
  // sort consistently with the variable order.
  const int nb = std::bit_width(static_cast<std::uint64_t>(N));
  const int last_col = nb - 1;
  const int ncols = std::max(bits_x + bits_y - 1, nb);

  for (int i = 1; i < bits_x - 1; ++i) sys.vars.push_back({0, i, 0});
  for (int j = 1; j < bits_y - 1; ++j) sys.vars.push_back({1, j, 0});
  // Carry structure depends only on per-column term counts; reproduce the
  // column scan to enumerate carries.
  std::vector<int> incoming(ncols + 9, 0);
  std::vector<TableVar> carries;
  for (int k = 0; k < ncols; ++k) {
    int mx = 0;
    for (int i = 0; i < bits_x; ++i)
      for (int j = 0; j < bits_y; ++j)
        if (i + j == k) ++mx;
    mx += incoming[k];
    const int nout = mx >= 1 ? std::bit_width(static_cast<unsigned>(mx)) - 1 : 0;
    for (int d = 1; d <= nout; ++d) {
      const int tgt = k + d;
      if (tgt > last_col) continue;
      carries.push_back({2, k, tgt});
      ++incoming[tgt];
    }
  }
  sys.vars.insert(sys.vars.end(), carries.begin(), carries.end());
  std::sort(sys.vars.begin(), sys.vars.end());

  const auto var_poly = [&sys](const TableVar& v) {
    Poly p;
    p[Mask{1} << sys.var_index(v)] = 1;
    return p;
  };
  const auto bit_poly = [&](int kind, int idx, int bits) -> Poly {
    if (idx == 0 || idx == bits - 1) return Poly{{Mask{0}, 1}};
    return var_poly({kind, idx, 0});
  };
  const auto pmul = [](const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [m1, c1] : a)
      for (const auto& [m2, c2] : b) r[m1 | m2] += c1 * c2;
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
  };
  const auto padd_into = [](Poly& a, const Poly& b, std::int64_t s) {
    for (const auto& [m, c] : b) {
      a[m] += c * s;
      if (a[m] == 0) a.erase(m);
    }
  };

  std::fill(incoming.begin(), incoming.end(), 0);
  std::vector<std::vector<TableVar>> carry_in(ncols + 9);
  for (int k = 0; k < ncols; ++k) {
    Poly poly;
    int mx = 0;
    for (int i = 0; i < bits_x; ++i)
      for (int j = 0; j < bits_y; ++j)
        if (i + j == k) {
          padd_into(poly, pmul(bit_poly(0, i, bits_x), bit_poly(1, j, bits_y)), 1);
          ++mx;
        }
    for (const TableVar& cv : carry_in[k]) {
      padd_into(poly, var_poly(cv), 1);
      ++mx;
    }
    const std::int64_t Nk = k < nb ? (N >> k) & 1 : 0;
    padd_into(poly, Poly{{Mask{0}, 1}}, -Nk);
    const int nout = mx >= 1 ? std::bit_width(static_cast<unsigned>(mx)) - 1 : 0;
    for (int d = 1; d <= nout; ++d) {
      const int tgt = k + d;
      if (tgt > last_col) continue;
      const TableVar cv{2, k, tgt};
      carry_in[tgt].push_back(cv);
      padd_into(poly, var_poly(cv), -(std::int64_t{1} << d));
    }
    sys.constraints.push_back(std::move(poly));
  }
  return sys;
}

std::int64_t poly_eval(const Poly& p, Mask assignment) {
  std::int64_t acc = 0;
  for (const auto& [m, c] : p)
    if ((m & assignment) == m) acc += c;
  return acc;
}

BinaryPolynomial cost_polynomial(const std::vector<Poly>& constraints,
                                 const std::vector<int>& order) {
  std::map<int, int> slot;  // global var index -> qubit slot
  for (std::size_t k = 0; k < order.size(); ++k) slot[order[k]] = static_cast<int>(k);
  BinaryPolynomial cost;
  for (const Poly& eq : constraints) {
    BinaryPolynomial e;
    for (const auto& [m, c] : eq) {
      BinaryPolynomial mono = BinaryPolynomial::constant(c);
      for (int k = 0; k < 128; ++k)
        if ((m >> k) & 1) mono = mono * BinaryPolynomial::variable(slot.at(k));
      e += mono;
    }
    cost += e * e;
  }
  return cost;
}

}  // namespace dafact
