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

#include "dafact/cd.hpp"

#include <bit>
#include <cctype>
#include <cmath>

#include <Eigen/Dense>

#include "dafact/schedule.hpp"

namespace dafact {

namespace {

constexpr int kNcSiteCap = 12;

// Least-squares solve dropping singular values below 1e-12 of the largest;
// singular systems yield the smallest-norm pseudo-solution.
Eigen::VectorXd lstsq(const Eigen::MatrixXd& m, const Eigen::VectorXd& rhs) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-12);
  return svd.solve(rhs);
}

}  // namespace

CdSpec CdSpec::parse(const std::string& text) {
  if (text == "none") return {CdKind::None, 1};
  if (text == "local") return {CdKind::Local, 1};
  if (text == "pool") return {CdKind::Pool, 1};
  if (text.size() > 2 && text.compare(0, 2, "nc") == 0) {
    int l = 0;
    for (std::size_t i = 2; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InvalidInput("cd variant: malformed nc order in '" + text + "'");
      l = l * 10 + (text[i] - '0');
      if (l > 99) throw InvalidInput("cd variant: nc order out of range");
    }
    if (l < 1) throw InvalidInput("cd variant: nc order must be >= 1");
    return {CdKind::NestedCommutator, l};
  }
  throw InvalidInput("cd variant: expected none|local|nc<l>|pool, got '" + text + "'");
}

std::string CdSpec::to_string() const {
  switch (kind) {
    case CdKind::None: return "none";
    case CdKind::Local: return "local";
    case CdKind::Pool: return "pool";
    case CdKind::NestedCommutator: return "nc" + std::to_string(order);
  }
  return "none";
}

double action(const AnnealingProblem& p, const PauliSum& a, double lambda) {
  const PauliSum g = p.dlambda_h() + commutator_i(a, p.h_adiabatic(lambda));
  return hs_inner(g, g);
}

std::vector<double> local_cd_coefficients(const AnnealingProblem& p, double lambda) {
  std::vector<double> alpha(static_cast<std::size_t>(p.n), 0.0);
  for (int j = 1; j <= p.n; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << (j - 1);
    const double hz = p.field(j);
    double s2 = 0.0, s3 = 0.0, s4 = 0.0;
    for (const auto& [mask, c] : p.zc) {
      if (!(mask & bit)) continue;
      switch (std::popcount(mask)) {
        case 2: s2 += c * c; break;
        case 3: s3 += c * c; break;
        case 4: s4 += c * c; break;
        default: break;
      }
    }
    const double R = 2.0 * ((1.0 - lambda) * (1.0 - lambda) * p.hx * p.hx +
                            lambda * lambda * (hz * hz + 2.0 * s2 + 3.0 * s3 + 4.0 * s4));
    alpha[j - 1] = R < 1e-12 ? 0.0 : -p.hx * hz / R;
  }
  return alpha;
}

PauliSum local_gauge_potential(const AnnealingProblem& p, double lambda) {
  const auto alpha = local_cd_coefficients(p, lambda);
  PauliSum a;
  for (int j = 1; j <= p.n; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << (j - 1);
    a.add_term({bit, bit}, alpha[j - 1]);
  }
  a.normalize();
  return a;
}

double tied_surrogate_action(const AnnealingProblem& p, const std::vector<double>& alphas,
                             double lambda) {
  if (static_cast<int>(alphas.size()) != p.n)
    throw InvalidInput("tied_surrogate_action: coefficient count != n");
  const double lam_hx = (1.0 - lambda) * p.hx;
  double S = 0.0;
  for (int j = 1; j <= p.n; ++j) {
    const double hz = p.field(j);
    const double a = alphas[j - 1];
    const double tx = -p.hx - 2.0 * a * lambda * hz;
    const double tz = hz + 2.0 * a * lam_hx;
    S += tx * tx + tz * tz;
  }
  for (const auto& [mask, c] : p.zc) {
    const int k = std::popcount(mask);
    if (k < 2) continue;
    const double w = k == 2 ? 8.0 : (k == 3 ? 12.0 : 16.0);
    double sumsq = 0.0;
    for (int j = 1; j <= p.n; ++j)
      if (mask & (std::uint64_t{1} << (j - 1))) sumsq += alphas[j - 1] * alphas[j - 1];
    S += w * (lambda * c) * (lambda * c) * sumsq + c * c;
  }
  return S;
}

std::vector<double> probe_quadratic_minimum(
    const std::function<double(const std::vector<double>&)>& fun, int m, double eps) {
  const double S0 = fun(std::vector<double>(m, 0.0));
  Eigen::VectorXd g(m);
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(m, m);
  const auto at = [&](int i, double vi, int j, double vj) {
    std::vector<double> v(m, 0.0);
    v[i] = vi;
    if (j >= 0) v[j] = vj;
    return fun(v);
  };
  for (int i = 0; i < m; ++i) {
    const double fp = at(i, eps, -1, 0.0);
    const double fm = at(i, -eps, -1, 0.0);
    g(i) = (fp - fm) / (2.0 * eps);
    H(i, i) = (fp + fm - 2.0 * S0) / (eps * eps);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const double fij = at(i, eps, j, eps);
      const double fi = at(i, eps, -1, 0.0);
      const double fj = at(j, eps, -1, 0.0);
      H(i, j) = H(j, i) = (fij - fi - fj + S0) / (eps * eps);
    }
  const Eigen::VectorXd c = lstsq(H, -g);
  return {c.data(), c.data() + m};
}

std::pair<std::vector<double>, PauliSum> minimize_over_family(
    const AnnealingProblem& p, const std::vector<PauliSum>& basis, double lambda) {
  const int m = static_cast<int>(basis.size());
  if (m == 0) return {{}, PauliSum{}};
  const PauliSum H = p.h_adiabatic(lambda);
  const PauliSum dh = p.dlambda_h();
  std::vector<PauliSum> E;
  E.reserve(basis.size());
  for (const PauliSum& B : basis) E.push_back(commutator_i(B, H));
  Eigen::MatrixXd M(m, m);
  Eigen::VectorXd b(m);
  for (int a = 0; a < m; ++a) {
    b(a) = hs_inner(dh, E[a]);
    for (int c = a; c < m; ++c) M(a, c) = M(c, a) = hs_inner(E[a], E[c]);
  }
  const Eigen::VectorXd c = lstsq(M, -b);
  PauliSum A;
  for (int a = 0; a < m; ++a) A += c(a) * basis[a];
  A.normalize();
  return {{c.data(), c.data() + m}, A};
}

std::vector<PauliSum> nc_basis(const AnnealingProblem& p, double lambda, int l) {
  if (l < 1) throw InvalidInput("nc_basis: order must be >= 1");
  if (p.n > kNcSiteCap) throw CapExceeded("nc_basis: site count above commutator cap");
  const PauliSum H = p.h_adiabatic(lambda);
  std::vector<PauliSum> basis;
  basis.push_back(commutator_i(p.dlambda_h(), H));  // i[dH, H]
  for (int k = 1; k < l; ++k)
    // B_{k+1} = [H, [H, B_k]]  (= -i[H, i[H, B_k]], keeping coefficients real)
    basis.push_back(-1.0 * commutator_i(H, commutator_i(H, basis.back())));
  return basis;
}

NcPotential nc_gauge_potential(const AnnealingProblem& p, int l, double lambda) {
  auto [coeffs, op] = minimize_over_family(p, nc_basis(p, lambda, l), lambda);
  return {std::move(coeffs), std::move(op)};
}

std::array<PauliSum, 3> pool_channels(const AnnealingProblem& p) {
  PauliSum y, zy, xy;
  for (const auto& [mask, c] : p.zc) {
    const int k = std::popcount(mask);
    if (k == 1) {
      y.add_term({mask, mask}, c);
    } else if (k == 2) {
      const std::uint64_t lo = mask & (~mask + 1);
      const std::uint64_t hi = mask ^ lo;
      zy.add_term({hi, mask}, c);  // Z_lo Y_hi
      zy.add_term({lo, mask}, c);  // Y_lo Z_hi
      xy.add_term({mask, hi}, c);  // X_lo Y_hi
      xy.add_term({mask, lo}, c);  // Y_lo X_hi
    }
  }
  y.normalize();
  zy.normalize();
  xy.normalize();
  return {std::move(y), std::move(zy), std::move(xy)};
}

PoolPotential pool_gauge_potential(const AnnealingProblem& p, double lambda) {
  const auto ch = pool_channels(p);
  auto [coeffs, op] = minimize_over_family(p, {ch[0], ch[1], ch[2]}, lambda);
  PoolPotential out;
  for (int k = 0; k < 3; ++k) {
    out.coeffs[k] = coeffs[k];
    out.active[k] = hs_norm2(ch[k]) > 1e-24;
  }
  out.op = std::move(op);
  return out;
}

PauliSum cd_gauge_potential(const AnnealingProblem& p, const CdSpec& cd, double lambda) {
  switch (cd.kind) {
    case CdKind::None: return PauliSum{};
    case CdKind::Local: return local_gauge_potential(p, lambda);
    case CdKind::NestedCommutator: return nc_gauge_potential(p, cd.order, lambda).op;
    case CdKind::Pool: return pool_gauge_potential(p, lambda).op;
  }
  return PauliSum{};
}

PauliSum total_hamiltonian(const AnnealingProblem& p, const CdSpec& cd, double t, double T) {
  const SchedulePoint s = schedule_eval(t, T);
  PauliSum H = p.h_adiabatic(s.lambda);
  if (cd.kind != CdKind::None && s.lambda_dot != 0.0)
    H += s.lambda_dot * cd_gauge_potential(p, cd, s.lambda);
  H.normalize();
  return H;
}

}  // namespace dafact
