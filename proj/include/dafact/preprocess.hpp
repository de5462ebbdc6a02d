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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dafact/multiplication_table.hpp"

namespace dafact {

// Fixpoint rule toggles. Defaults reproduce the reference reductions; the
// flags exist so tests can exercise solution-set preservation per rule.
struct PreprocessRules {
  bool symmetric_gate = true;  // keep x_i + y_i = 1 when bits_x == bits_y
  bool pair_subst = true;      // substitute pair constraints away
  bool phase2 = true;          // carry elimination on +-1 linear constraints
};

// Back-substitution record: `var` was eliminated and equals `expr` evaluated
// over variables decided later in the reconstruction (survivors first, then
// the log in reverse elimination order).
struct SubstEntry {
  int var = -1;
  Poly expr;
};

// Alias/constant state of one variable after preprocessing.
struct ResolvedVar {
  bool is_const = false;
  int bit = 0;     // fixed value when is_const
  int root = -1;   // class representative otherwise
  int parity = 0;  // value = value(root) ^ parity
};

// Result of the constraint reduction: the surviving equation system plus
// everything needed to rebuild a full table assignment from survivor bits.
struct ReducedSystem {
  TableSystem table;  // original system (variable names, rendering)
  std::vector<Poly> constraints;
  std::vector<int> survivors;  // ascending variable indices; slot k -> binary variable k
  std::vector<SubstEntry> subst_log;
  std::vector<ResolvedVar> resolved;  // per original variable
  std::set<Mask> zero_products;

  int n_qubits() const { return static_cast<int>(survivors.size()); }
  Mask survivor_mask(std::uint64_t bits) const;
  bool satisfies(std::uint64_t bits) const;
  std::vector<std::uint64_t> solutions() const;  // brute force over survivors

  // Sum of squared surviving constraints over survivor slots.
  BinaryPolynomial cost() const;

  // Full back-substitution: survivor assignment -> factors (x, y). Empty when
  // the substitution chain leaves {0,1} (never the case on true solutions).
  std::optional<std::pair<long long, long long>> decode(std::uint64_t bits) const;

  std::string render() const;  // reduced system, one "lhs = 0" line each
};

// Reduces `sys` to fixpoint under: normalization/dedup, independent-monomial
// range forcing, pattern rules (u+v-1, 1+m-2m', m1+m2-2m3, u-v, m-1) with
// parity union-find substitution and zero-product facts, product-tag
// emission, then carry elimination. Solution-set preserving; throws
// Infeasible when a constraint cannot vanish over {0,1}.
ReducedSystem preprocess_system(const TableSystem& sys, const PreprocessRules& rules = {});

// build_table_equations + preprocess_system.
ReducedSystem reduce_factorization(long long N, int bits_x, int bits_y,
                                   const PreprocessRules& rules = {});

}  // namespace dafact
