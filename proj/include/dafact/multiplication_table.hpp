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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dafact/binary_polynomial.hpp"
#include "dafact/encoding.hpp"

namespace dafact {

// Variable of the multiplication-table system: factor bits x_i / y_j and the
// column carries c_{i,j} (carry out of column i into column j).
struct TableVar {
  int kind = 0;  // 0 = x, 1 = y, 2 = c
  int i = 0;
  int j = 0;
  friend auto operator<=>(const TableVar&, const TableVar&) = default;
  std::string name() const;
};

// Multilinear integer polynomial over interned table variables. Monomials are
// variable-index bitmasks (128 variables suffice for every supported N).
using Mask = unsigned __int128;
using Poly = std::map<Mask, std::int64_t>;

struct TableSystem {
  long long N = 0;
  int bits_x = 0;
  int bits_y = 0;
  std::vector<TableVar> vars;  // index -> variable, ascending TableVar order
  std::vector<Poly> constraints;

  int var_index(const TableVar& v) const;  // -1 if absent
  std::string render_poly(const Poly& p) const;
  std::string render_system() const;  // one "lhs = 0" line per constraint
};

// One equation per product column: partial products + incoming carries
// - N_k - 2^d * outgoing carries = 0. First and last bit of each factor are
// fixed to 1; carries past the top column of N are omitted, forcing the
// overflow columns to vanish.
TableSystem build_table_equations(long long N, int bits_x, int bits_y);

std::int64_t poly_eval(const Poly& p, Mask assignment);

int mask_popcount(Mask m);
int mask_lowest_bit(Mask m);       // m != 0
bool lex_index_less(Mask a, Mask b);
bool graded_mono_less(Mask a, Mask b);

// Sum of squared constraints over the surviving variables (variable k of
// `order` becomes binary variable k).
BinaryPolynomial cost_polynomial(const std::vector<Poly>& constraints,
                                 const std::vector<int>& order);

}  // namespace dafact
