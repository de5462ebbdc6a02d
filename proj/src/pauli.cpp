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

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dafact {

int PauliString::weight() const {
  return std::popcount(x | z);
}

bool PauliString::commutes_with(const PauliString& o) const {
  // Patterns commute iff the symplectic form <a,b> = |ax&bz| + |az&bx| is even.
  return ((std::popcount(x & o.z) + std::popcount(z & o.x)) & 1) == 0;
}

int PauliString::product_phase_exp(const PauliString& a, const PauliString& b) {
  // i^{|ax&az|} X^ax Z^az . i^{|bx&bz|} X^bx Z^bz
  //   = i^{|ax&az|+|bx&bz|} (-1)^{|az&bx|} X^{ax^bx} Z^{az^bz}
  // and the canonical product pattern carries i^{|cx&cz|}.
  const std::uint64_t cx = a.x ^ b.x;
  const std::uint64_t cz = a.z ^ b.z;
  int e = std::popcount(a.x & a.z) + std::popcount(b.x & b.z) -
          std::popcount(cx & cz) + 2 * std::popcount(a.z & b.x);
  return ((e % 4) + 4) % 4;
}

std::string PauliString::to_string(int n_sites) const {
  if (identity()) return "I";
  std::ostringstream os;
  bool first = true;
  for (int k = 1; k <= n_sites; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << (k - 1);
    const bool bx = (x & bit) != 0, bz = (z & bit) != 0;
    if (!bx && !bz) continue;
    if (!first) os << ' ';
    first = false;
    os << (bx && bz ? 'Y' : bx ? 'X' : 'Z') << k;
  }
  return os.str();
}

PauliSum::PauliSum(std::vector<PauliTerm> terms) : terms_(std::move(terms)) {
  normalize();
}

PauliSum PauliSum::identity(double coeff) {
  PauliSum s;
  s.add_term(PauliString{}, coeff);
  return s;
}

void PauliSum::add_term(PauliString p, double coeff) {
  terms_.push_back({p, coeff});
  normalize();
}

void PauliSum::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const PauliTerm& a, const PauliTerm& b) { return a.p < b.p; });
  std::vector<PauliTerm> out;
  out.reserve(terms_.size());
  for (const PauliTerm& t : terms_) {
    if (!out.empty() && out.back().p == t.p) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const PauliTerm& t) { return std::abs(t.coeff) < kCoeffTol; });
  terms_ = std::move(out);
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  terms_.reserve(terms_.size() + other.terms_.size());
  for (const PauliTerm& t : other.terms_) terms_.push_back({t.p, -t.coeff});
  normalize();
  return *this;
}

PauliSum& PauliSum::operator*=(double s) {
  for (PauliTerm& t : terms_) t.coeff *= s;
  normalize();
  return *this;
}

double PauliSum::coeff_of(const PauliString& p) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), p,
      [](const PauliTerm& t, const PauliString& q) { return t.p < q; });
  if (it != terms_.end() && it->p == p) return it->coeff;
  return 0.0;
}

int PauliSum::max_site() const {
  std::uint64_t all = 0;
  for (const PauliTerm& t : terms_) all |= t.p.x | t.p.z;
  return all == 0 ? 0 : std::bit_width(all);
}

std::string PauliSum::to_string(int n_sites) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const PauliTerm& t : terms_) {
    if (!first) os << " ";
    os << (t.coeff < 0 ? "- " : first ? "" : "+ ");
    os.precision(12);
    os << std::abs(t.coeff);
    if (!t.p.identity()) os << ' ' << t.p.to_string(n_sites);
    first = false;
  }
  return os.str();
}

PauliSum commutator_i(const PauliSum& a, const PauliSum& b) {
  // For Hermitian patterns, anticommuting pairs satisfy Pa Pb = i^e Pc with e
  // odd, so each pair contributes i[ca Pa, cb Pb] = 2 ca cb i^{e+1} Pc with a
  // real sign i^{e+1} = -1 (e=1) or +1 (e=3). Commuting pairs cancel.
  std::vector<PauliTerm> out;
  out.reserve(a.size() * b.size() / 2 + 1);
  for (const PauliTerm& ta : a.terms()) {
    for (const PauliTerm& tb : b.terms()) {
      if (ta.p.commutes_with(tb.p)) continue;
      const int e = PauliString::product_phase_exp(ta.p, tb.p);
      const double sign = (e == 3) ? 1.0 : -1.0;
      out.push_back({PauliString{ta.p.x ^ tb.p.x, ta.p.z ^ tb.p.z},
                     2.0 * sign * ta.coeff * tb.coeff});
    }
  }
  return PauliSum(std::move(out));
}

double hs_inner(const PauliSum& a, const PauliSum& b) {
  double acc = 0.0;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->p < ib->p) {
      ++ia;
    } else if (ib->p < ia->p) {
      ++ib;
    } else {
      acc += ia->coeff * ib->coeff;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

}  // namespace dafact
