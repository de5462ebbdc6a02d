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

#include "dafact/preprocess.hpp"

#include <algorithm>
#include <sstream>

namespace dafact {

namespace {

Poly pconst(std::int64_t k) {
  Poly p;
  if (k != 0) p[Mask{0}] = k;
  return p;
}

Poly pvar(int v) {
  Poly p;
  p[Mask{1} << v] = 1;
  return p;
}

Poly pscale(const Poly& a, std::int64_t k) {
  Poly r;
  if (k == 0) return r;
  for (const auto& [m, c] : a) r[m] = c * k;
  return r;
}

void padd_into(Poly& a, const Poly& b, std::int64_t s) {
  for (const auto& [m, c] : b) {
    auto it = a.find(m);
    const std::int64_t nc = (it == a.end() ? 0 : it->second) + c * s;
    if (nc == 0) {
      if (it != a.end()) a.erase(it);
    } else if (it == a.end()) {
      a.emplace(m, nc);
    } else {
      it->second = nc;
    }
  }
}

Poly pmul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [m1, c1] : a)
    for (const auto& [m2, c2] : b) r[m1 | m2] += c1 * c2;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

// Union-find with parity: value(v) = value(parent) ^ parity; roots may carry
// a fixed 0/1 constant.
class ParityUF {
 public:
  explicit ParityUF(int n) : parent_(n), parity_(n, 0), const_(n, -1) {
    for (int v = 0; v < n; ++v) parent_[v] = v;
  }

  std::pair<int, int> find(int v) {
    if (parent_[v] == v) return {v, parity_[v]};
    auto [r, p] = find(parent_[v]);
    parent_[v] = r;
    parity_[v] = parity_[v] ^ p;
    return {r, parity_[v]};
  }

  ResolvedVar value(int v) {
    auto [r, p] = find(v);
    if (const_[r] >= 0) return {true, const_[r] ^ p, -1, 0};
    return {false, 0, r, p};
  }

  struct UnionResult {
    bool ok = false;
    int gone_root = -1;  // -1 when the classes were already merged
    int keep_root = -1;
  };

  // Asserts value(gone) = value(keep) ^ parity; keep's root stays the root.
  UnionResult union_pref(int keep, int gone, int parity) {
    auto [rk, pk] = find(keep);
    auto [rg, pg] = find(gone);
    if (rk == rg) return {(pk ^ pg) == parity, -1, rk};
    const int rel = pg ^ pk ^ parity;  // value(rg) = value(rk) ^ rel
    parent_[rg] = rk;
    parity_[rg] = rel;
    if (const_[rg] >= 0) {
      const int cv = const_[rg];
      const_[rg] = -1;
      if (const_[rk] >= 0) {
        if (const_[rk] != (cv ^ rel)) return {false, rg, rk};
      } else {
        const_[rk] = cv ^ rel;
      }
    }
    return {true, rg, rk};
  }

  bool fix(int v, int val) {
    auto [r, p] = find(v);
    const int want = val ^ p;
    if (const_[r] >= 0) return const_[r] == want;
    const_[r] = want;
    return true;
  }

 private:
  std::vector<int> parent_, parity_;
  std::vector<int> const_;  // -1 = unconstrained root
};

Poly literal_poly(const ResolvedVar& val) {
  if (val.is_const) return pconst(val.bit);
  if (val.parity == 0) return pvar(val.root);
  Poly p = pconst(1);
  padd_into(p, pvar(val.root), -1);
  return p;
}

// Rewrites one monomial through the alias state, dropping any expansion term
// that contains a known zero product.
Poly mono_rewrite(Mask m, ParityUF& uf, const std::set<Mask>& zero_products) {
  Poly poly = pconst(1);
  for (Mask rest = m; rest != 0; rest &= rest - 1) {
    const int v = mask_lowest_bit(rest);
    const ResolvedVar val = uf.value(v);
    if (val.is_const) {
      if (val.bit == 0) return {};
      continue;
    }
    poly = pmul(poly, literal_poly(val));
  }
  Poly out;
  for (const auto& [mm, cc] : poly) {
    bool killed = false;
    for (const Mask& zp : zero_products)
      if ((zp & mm) == zp) {
        killed = true;
        break;
      }
    if (!killed) out[mm] = cc;
  }
  return out;
}

Poly normalize(const Poly& p, ParityUF& uf, const std::set<Mask>& zero_products) {
  Poly out;
  for (const auto& [m, c] : p) padd_into(out, mono_rewrite(m, uf, zero_products), c);
  return out;
}

// Attainable range treating monomials as independent 0/1 quantities.
std::pair<std::int64_t, std::int64_t> indep_range(const Poly& p) {
  std::int64_t lo = 0, hi = 0;
  for (const auto& [m, c] : p) {
    if (m == 0) {
      lo += c;
      hi += c;
    } else if (c > 0) {
      hi += c;
    } else {
      lo += c;
    }
  }
  return {lo, hi};
}

// Canonical first monomial for sign normalization: the constant if present,
// otherwise the lexicographically least variable sequence (not graded).
bool sign_anchor_less(Mask a, Mask b) {
  const bool na = a != 0, nb = b != 0;
  if (na != nb) return !na;
  return lex_index_less(a, b);
}

}  // namespace

ReducedSystem preprocess_system(const TableSystem& sys, const PreprocessRules& rules) {
  const int nvars = static_cast<int>(sys.vars.size());
  ParityUF uf(nvars);
  std::set<Mask> zero_products;
  std::vector<std::pair<int, Mask>> tags;  // (class literal, product monomial)
  std::set<std::pair<int, Mask>> emitted;
  std::vector<Poly> cons = sys.constraints;
  std::vector<SubstEntry> subst_log;

  const bool sym_instance = (sys.bits_x == sys.bits_y);

  const auto log_fix = [&](int v, int val) {
    if (!uf.fix(v, val)) throw Infeasible("contradictory fix");
    subst_log.push_back({v, pconst(val)});
  };

  const auto log_union = [&](int keep, int gone, int parity) {
    const auto res = uf.union_pref(keep, gone, parity);
    if (!res.ok) throw Infeasible("contradictory union");
    if (res.gone_root >= 0) subst_log.push_back({res.gone_root, literal_poly(uf.value(res.gone_root))});
  };

  const auto r1 = [&] {
    std::vector<Poly> newcons;
    std::set<Poly> seen;
    for (const Poly& p : cons) {
      Poly q = normalize(p, uf, zero_products);
      if (q.empty()) continue;
      if (q.size() == 1 && q.begin()->first == 0) throw Infeasible("nonzero constant");
      Mask anchor = q.begin()->first;
      for (const auto& [m, c] : q)
        if (sign_anchor_less(m, anchor)) anchor = m;
      if (q.at(anchor) < 0) q = pscale(q, -1);
      if (seen.insert(q).second) newcons.push_back(std::move(q));
    }
    cons = std::move(newcons);
  };

  // Range analysis forces single-variable monomials only; product monomials
  // are left to the pattern rules.
  const auto r2 = [&] {
    bool changed = false;
    const std::vector<Poly> snapshot = cons;
    for (const Poly& p : snapshot) {
      const auto [lo, hi] = indep_range(p);
      if (lo > 0 || hi < 0) throw Infeasible("range excludes 0");
      for (const auto& [m, c] : p) {
        if (mask_popcount(m) != 1) continue;
        const std::int64_t lo0 = lo - std::min<std::int64_t>(c, 0);
        const std::int64_t hi0 = hi - std::max<std::int64_t>(c, 0);
        const std::int64_t lo1 = lo0 + c, hi1 = hi0 + c;
        int force = -1;
        if (lo0 > 0 || hi0 < 0) force = 1;
        else if (lo1 > 0 || hi1 < 0) force = 0;
        if (force < 0) continue;
        changed = true;
        log_fix(mask_lowest_bit(m), force);
      }
      if (changed) return true;
    }
    return false;
  };

  const auto is_xvar = [&](int v) { return sys.vars[v].kind == 0; };

  enum class PatternResult { kNone, kChanged, kConsume };

  const auto try_patterns = [&](const Poly& q) {
    for (int sign = 0; sign < 2; ++sign) {
      const Poly p = sign == 0 ? q : pscale(q, -1);
      std::int64_t constant = 0;
      if (const auto it = p.find(Mask{0}); it != p.end()) constant = it->second;
      std::vector<std::pair<Mask, std::int64_t>> monos;
      for (const auto& [m, c] : p)
        if (m != 0) monos.emplace_back(m, c);
      std::sort(monos.begin(), monos.end(),
                [](const auto& a, const auto& b) { return graded_mono_less(a.first, b.first); });

      // pair: u + v - 1 = 0, single variables
      if (constant == -1 && monos.size() == 2 &&
          std::all_of(monos.begin(), monos.end(),
                      [](const auto& mc) { return mc.second == 1 && mask_popcount(mc.first) == 1; })) {
        const int u = mask_lowest_bit(monos[0].first);
        const int v = mask_lowest_bit(monos[1].first);
        const bool new_fact = zero_products.insert(monos[0].first | monos[1].first).second;
        const bool cross = is_xvar(u) != is_xvar(v);
        const bool same_index = cross && sys.vars[u].i == sys.vars[v].i;
        const bool blocked = rules.symmetric_gate && sym_instance && cross && same_index;
        if (rules.pair_subst && !blocked) {
          if (cross) {
            const int xv = is_xvar(u) ? u : v;
            const int yv = xv == u ? v : u;
            log_union(yv, xv, 1);  // eliminate the x bit, keep the partner
          } else {
            log_union(std::min(u, v), std::max(u, v), 1);  // eliminate the later variable
          }
          return PatternResult::kConsume;
        }
        return new_fact ? PatternResult::kChanged : PatternResult::kNone;  // kept
      }
      // 1 + m - 2*m' = 0  =>  m = 1, m' = 1
      if (constant == 1 && monos.size() == 2) {
        const std::int64_t cmin = std::min(monos[0].second, monos[1].second);
        const std::int64_t cmax = std::max(monos[0].second, monos[1].second);
        if (cmin == -2 && cmax == 1) {
          const Mask all = monos[0].first | monos[1].first;
          for (Mask rest = all; rest != 0; rest &= rest - 1) log_fix(mask_lowest_bit(rest), 1);
          return PatternResult::kConsume;
        }
      }
      // m1 + m2 - 2*m3 = 0  =>  m1 = m2 = m3
      if (constant == 0 && monos.size() == 3) {
        std::vector<std::int64_t> cs{monos[0].second, monos[1].second, monos[2].second};
        std::sort(cs.begin(), cs.end());
        if (cs == std::vector<std::int64_t>{-2, 1, 1}) {
          std::vector<Mask> group;
          for (const auto& [m, c] : monos)
            if (c == 1) group.push_back(m);
          for (const auto& [m, c] : monos)
            if (c == -2) group.push_back(m);
          std::vector<int> singles;
          std::vector<Mask> prods;
          for (const Mask& m : group) {
            if (mask_popcount(m) == 1) singles.push_back(mask_lowest_bit(m));
            else prods.push_back(m);
          }
          if (singles.empty()) break;  // all products: keep the constraint
          const int rep = *std::min_element(singles.begin(), singles.end());
          for (const int v : singles)
            if (v != rep) log_union(rep, v, 0);
          for (const Mask& pr : prods) tags.emplace_back(rep, pr);
          return PatternResult::kConsume;
        }
      }
      // u - v = 0, single variables
      if (constant == 0 && monos.size() == 2 && mask_popcount(monos[0].first) == 1 &&
          mask_popcount(monos[1].first) == 1) {
        const std::int64_t c1 = monos[0].second, c2 = monos[1].second;
        if ((c1 == 1 && c2 == -1) || (c1 == -1 && c2 == 1)) {
          const int u = mask_lowest_bit(monos[0].first);
          const int v = mask_lowest_bit(monos[1].first);
          log_union(std::min(u, v), std::max(u, v), 0);
          return PatternResult::kConsume;
        }
      }
      // m - 1 = 0  =>  every variable in m is 1
      if (constant == -1 && monos.size() == 1 && monos[0].second == 1) {
        for (Mask rest = monos[0].first; rest != 0; rest &= rest - 1)
          log_fix(mask_lowest_bit(rest), 1);
        return PatternResult::kConsume;
      }
    }
    return PatternResult::kNone;
  };

  const auto patterns = [&] {
    bool changed = false;
    const std::vector<Poly> snapshot = cons;
    for (const Poly& p : snapshot) {
      const PatternResult r = try_patterns(p);
      if (r == PatternResult::kConsume) {
        cons.erase(std::find(cons.begin(), cons.end(), p));
        return true;
      }
      if (r == PatternResult::kChanged) changed = true;
    }
    return changed;
  };

  const auto emit_tags = [&] {
    bool changed = false;
    const auto snapshot = tags;
    for (const auto& [v, pr] : snapshot) {
      if (!emitted.insert({v, pr}).second) continue;
      Poly eq;
      eq[pr] = 1;
      padd_into(eq, literal_poly(uf.value(v)), -1);
      eq = normalize(eq, uf, zero_products);
      if (!eq.empty()) {
        cons.push_back(std::move(eq));
        changed = true;
      }
    }
    return changed;
  };

  // Phase 1: fixpoint.
  while (true) {
    r1();
    if (r2()) continue;
    if (patterns()) continue;
    if (emit_tags()) continue;
    break;
  }

  // Phase 2: carry resolution on zero-constant +-1 linear constraints; only
  // R1 normalization afterwards.
  if (rules.phase2) {
    bool progressed = true;
    while (progressed) {
      progressed = false;
      const std::vector<Poly> snapshot = cons;
      for (const Poly& p : snapshot) {
        if (p.empty() || p.count(Mask{0})) continue;
        bool linear = true;
        for (const auto& [m, c] : p)
          if (mask_popcount(m) != 1 || (c != 1 && c != -1)) {
            linear = false;
            break;
          }
        if (!linear) continue;
        int tgt = -1;
        for (const auto& [m, c] : p) {
          const int v = mask_lowest_bit(m);
          if (sys.vars[v].kind == 2 && v > tgt) tgt = v;
        }
        if (tgt < 0) continue;
        const Mask tgt_mask = Mask{1} << tgt;
        const std::int64_t ctt = p.at(tgt_mask);
        Poly rest = p;
        rest.erase(tgt_mask);
        const Poly expr = pscale(rest, ctt == 1 ? -1 : 1);
        subst_log.push_back({tgt, expr});
        cons.erase(std::find(cons.begin(), cons.end(), p));
        for (Poly& q : cons) {
          Poly out;
          for (const auto& [m, c] : q) {
            if (m & tgt_mask) {
              Poly base;
              base[m & ~tgt_mask] = c;
              padd_into(out, pmul(base, expr), 1);
            } else {
              padd_into(out, Poly{{m, c}}, 1);
            }
          }
          q = std::move(out);
        }
        for (Poly& q : cons) q = normalize(q, uf, zero_products);
        std::erase_if(cons, [](const Poly& q) { return q.empty(); });
        for (const Poly& q : cons)
          if (q.size() == 1 && q.begin()->first == 0)
            throw Infeasible("nonzero constant after carry resolution");
        progressed = true;
        break;
      }
    }
  }

  ReducedSystem out;
  out.table = sys;
  out.constraints = cons;
  Mask all{};
  for (const Poly& p : cons)
    for (const auto& [m, c] : p) all |= m;
  for (int v = 0; v < nvars; ++v)
    if ((all >> v) & 1) out.survivors.push_back(v);
  out.subst_log = std::move(subst_log);
  out.resolved.resize(nvars);
  for (int v = 0; v < nvars; ++v) out.resolved[v] = uf.value(v);
  out.zero_products = std::move(zero_products);
  return out;
}

ReducedSystem reduce_factorization(long long N, int bits_x, int bits_y,
                                   const PreprocessRules& rules) {
  return preprocess_system(build_table_equations(N, bits_x, bits_y), rules);
}

Mask ReducedSystem::survivor_mask(std::uint64_t bits) const {
  Mask m{};
  for (std::size_t k = 0; k < survivors.size(); ++k)
    if ((bits >> k) & 1) m |= Mask{1} << survivors[k];
  return m;
}

bool ReducedSystem::satisfies(std::uint64_t bits) const {
  const Mask m = survivor_mask(bits);
  for (const Poly& p : constraints)
    if (poly_eval(p, m) != 0) return false;
  return true;
}

std::vector<std::uint64_t> ReducedSystem::solutions() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << survivors.size()); ++bits)
    if (satisfies(bits)) out.push_back(bits);
  return out;
}

BinaryPolynomial ReducedSystem::cost() const { return cost_polynomial(constraints, survivors); }

std::optional<std::pair<long long, long long>> ReducedSystem::decode(std::uint64_t bits) const {
  const int nvars = static_cast<int>(table.vars.size());
  std::vector<int> full(nvars, -1);
  for (std::size_t k = 0; k < survivors.size(); ++k) full[survivors[k]] = (bits >> k) & 1;
  for (auto it = subst_log.rbegin(); it != subst_log.rend(); ++it) {
    if (full[it->var] >= 0) continue;
    std::int64_t val = 0;
    for (const auto& [m, c] : it->expr) {
      std::int64_t t = c;
      for (Mask rest = m; rest != 0; rest &= rest - 1) {
        const int w = mask_lowest_bit(rest);
        if (full[w] < 0) return std::nullopt;
        t *= full[w];
      }
      val += t;
    }
    if (val != 0 && val != 1) return std::nullopt;
    full[it->var] = static_cast<int>(val);
  }
  for (int v = 0; v < nvars; ++v) {
    if (full[v] >= 0) continue;
    const ResolvedVar& rv = resolved[v];
    if (rv.is_const) {
      full[v] = rv.bit;
    } else if (full[rv.root] >= 0) {
      full[v] = full[rv.root] ^ rv.parity;
    } else {
      return std::nullopt;
    }
  }
  long long x = 1 + (table.bits_x > 1 ? (1LL << (table.bits_x - 1)) : 0);
  for (int i = 1; i < table.bits_x - 1; ++i) {
    const int idx = table.var_index({0, i, 0});
    if (idx < 0 || full[idx] < 0) return std::nullopt;
    x += static_cast<long long>(full[idx]) << i;
  }
  long long y = 1 + (table.bits_y > 1 ? (1LL << (table.bits_y - 1)) : 0);
  for (int j = 1; j < table.bits_y - 1; ++j) {
    const int idx = table.var_index({1, j, 0});
    if (idx < 0 || full[idx] < 0) return std::nullopt;
    y += static_cast<long long>(full[idx]) << j;
  }
  return std::make_pair(x, y);
}

std::string ReducedSystem::render() const {
  std::ostringstream os;
  for (const Poly& p : constraints) os << table.render_poly(p) << " = 0\n";
  return os.str();
}

}  // namespace dafact
