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

// Acceptance suite: one end-to-end check per shipped guarantee, each with a
// pinned tolerance and a wall-time budget. Prints a single [PASS]/[FAIL] line
// per criterion; the exit code is the number of failures.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dafact/annealing.hpp"
#include "dafact/cd.hpp"
#include "dafact/circuits.hpp"
#include "dafact/encoding.hpp"
#include "dafact/exact_evolve.hpp"
#include "dafact/preprocess.hpp"
#include "dafact/statevector.hpp"
#include "dafact/trotter.hpp"
#include "dense_oracle.hpp"

namespace {

using namespace dafact;
using dafact::testing::dense;
using dafact::testing::hs_inner_dense;
using dafact::testing::Mat;

struct Report {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& msg) {
    if (cond) return;
    ok = false;
    detail += "      " + msg + "\n";
  }
};

AnnealingProblem table_problem(long long N, int bx, int by, double hx) {
  const auto red = reduce_factorization(N, bx, by);
  return make_problem(red.cost().to_ising(), red.n_qubits(), hx);
}

std::uint64_t argmax_state(const StateVector& s) {
  const auto p = probabilities(s);
  std::uint64_t best = 0;
  for (std::uint64_t b = 1; b < p.size(); ++b)
    if (p[b] > p[best]) best = b;
  return best;
}

std::uint64_t argmax_counts(const std::map<std::uint64_t, long long>& counts) {
  std::uint64_t best = 0;
  long long most = -1;
  for (const auto& [label, c] : counts)
    if (c > most) {
      most = c;
      best = label;
    }
  return best;
}

// Random diagonal problems shaped like the reduced instances: a field on most
// sites, a few higher-weight couplings on top.
AnnealingProblem random_problem(std::mt19937_64& rng, int n_min, int n_max) {
  std::uniform_int_distribution<int> nd(n_min, n_max);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int n = nd(rng);
  AnnealingProblem p;
  p.n = n;
  p.hx = uni(rng) < 0.5 ? -1.0 : gauss(rng);
  if (p.hx == 0.0) p.hx = -1.0;
  for (int j = 1; j <= n; ++j)
    if (uni(rng) < 0.9) p.zc[std::uint64_t{1} << (j - 1)] = gauss(rng);
  std::uniform_int_distribution<int> site(0, n - 1);
  const auto random_mask = [&](int k) {
    std::uint64_t m = 0;
    while (std::popcount(m) < k) m |= std::uint64_t{1} << site(rng);
    return m;
  };
  for (int trial = 0; trial < 3; ++trial) {
    if (uni(rng) < 0.8) p.zc[random_mask(2)] += gauss(rng);
    if (n >= 3 && uni(rng) < 0.5) p.zc[random_mask(3)] += gauss(rng);
    if (n >= 4 && uni(rng) < 0.3) p.zc[random_mask(4)] += gauss(rng);
  }
  return p;
}

// ---------------------------------------------------------------------------
// 1. The 6-qubit direct Hamiltonian for 217 = 7 x 31 with known factor
// lengths (3, 5) matches the printed 43-term operator integer for integer.
void c01_direct_golden_217(Report& r) {
  // Site k of the printed operator is bit k-1 of the mask.
  static constexpr std::pair<std::uint64_t, long long> kGolden[] = {
      {15, 16},     {23, 32},     {39, 64},    {7, -128},    {27, 64},
      {43, 128},    {11, -256},   {51, 256},   {19, -512},   {35, -1024},
      {3, 1364},    {13, -32},    {21, -64},   {37, -128},   {5, -178},
      {25, -128},   {41, -256},   {9, -356},   {49, -512},   {17, -712},
      {33, -1424},  {1, 4216},    {14, -64},   {22, -128},   {38, -256},
      {6, -356},    {26, -256},   {42, -512},  {10, -712},   {50, -1024},
      {18, -1424},  {34, -2848},  {2, 8432},   {12, 84},     {20, 168},
      {36, 336},    {4, 1064},    {24, 336},   {40, 672},    {8, 2128},
      {48, 1344},   {16, 4256},   {32, 8512},
  };
  const auto inst = make_instance_known_lengths(217, 3, 5);
  const IsingForm H = build_direct_hamiltonian(inst);
  r.expect(H.constant == 26474.0, "constant != 26474");
  r.expect(H.zc.size() == 43, "expected exactly 43 interaction terms");
  for (const auto& [mask, want] : kGolden) {
    const auto it = H.zc.find(mask);
    if (it == H.zc.end()) {
      r.expect(false, "missing term for mask " + std::to_string(mask));
      continue;
    }
    r.expect(it->second == static_cast<double>(want),
             "coefficient mismatch at mask " + std::to_string(mask));
  }
  const auto [e0, labels] = exact_ground_states(inst);
  r.expect(e0 == 0.0 && labels.size() == 1 && ket_label(labels[0], 6) == "111111",
           "ground state is not |111111>");
}

// ---------------------------------------------------------------------------
// 2. The table pipeline reduces 2479 = 67 x 37 to a 4-qubit diagonal that
// matches the printed 11-coefficient operator under a variable relabeling
// (and, with this rule set, with the identical global constant); the ground
// label reads |0100>.
void c02_table_golden_2479(Report& r) {
  static constexpr std::pair<std::uint64_t, double> kPrinted[] = {
      {0b0001, -2.5}, {0b0010, -1.5}, {0b0100, 0.75}, {0b1000, -0.5},
      {0b0011, 0.25}, {0b0101, -1.5}, {0b1001, -1.0}, {0b0110, 0.5},
      {0b1010, 1.5},  {0b1100, 0.5},  {0b0111, 0.75},
  };
  const auto red = reduce_factorization(2479, 7, 6);
  r.expect(red.n_qubits() == 4, "expected 4 surviving variables");
  if (red.n_qubits() != 4) return;
  const IsingForm H = red.cost().to_ising();
  r.expect(H.zc.size() == 11, "expected exactly 11 interaction terms");
  r.expect(H.constant == 5.75, "constant != 5.75");

  bool matched = false;
  std::vector<int> sigma = {0, 1, 2, 3};
  do {
    bool all = true;
    for (const auto& [mask, want] : kPrinted) {
      std::uint64_t ours = 0;
      for (int b = 0; b < 4; ++b)
        if (mask & (std::uint64_t{1} << b)) ours |= std::uint64_t{1} << sigma[b];
      const auto it = H.zc.find(ours);
      if (it == H.zc.end() || std::abs(it->second - want) > 1e-12) {
        all = false;
        break;
      }
    }
    matched = all;
  } while (!matched && std::next_permutation(sigma.begin(), sigma.end()));
  r.expect(matched, "no relabeling reproduces the printed coefficients");

  const auto [e0, labels] = exact_ground_states(H, 4);
  r.expect(std::abs(e0) < 1e-12 && labels.size() == 1 && ket_label(labels[0], 4) == "0100",
           "ground label is not |0100>");
}

// ---------------------------------------------------------------------------
// 3. The first-order coefficient alpha_1(lambda) on the reduced 2479 problem
// has the form c1 / [hx^2 (1-lambda)^2 + c2 lambda^2]; the constants fitted
// at lambda in {0.1, 0.5, 0.9} match 0.0830 and 5.0112 within 1e-3.
void c03_coefficient_fit(Report& r) {
  const AnnealingProblem p = table_problem(2479, 7, 6, -1.0);
  Eigen::Matrix<double, 3, 2> X;
  Eigen::Vector3d y;
  int row = 0;
  for (double lam : {0.1, 0.5, 0.9}) {
    const auto nc = nc_gauge_potential(p, 1, lam);
    X(row, 0) = (1 - lam) * (1 - lam);
    X(row, 1) = lam * lam;
    y(row) = 1.0 / std::abs(nc.coeffs[0]);
    ++row;
  }
  const Eigen::Vector2d sol = X.colPivHouseholderQr().solve(y);
  const double c1 = 1.0 / sol(0);
  const double c2 = sol(1) * c1;
  r.expect((X * sol - y).cwiseAbs().maxCoeff() < 1e-6 * y.maxCoeff(),
           "1/|alpha_1| is not linear in ((1-lambda)^2, lambda^2)");
  r.expect(std::abs(c1 - 0.0830) < 1e-3, "c1 = " + std::to_string(c1) + " != 0.0830");
  r.expect(std::abs(c2 - 5.0112) < 1e-3, "c2 = " + std::to_string(c2) + " != 5.0112");
}

// ---------------------------------------------------------------------------
// 4. Three Trotter steps on the reduced 2479 problem (T = 0.3, dt = 0.1):
// every nested-commutator order 1..3 puts the argmax on the factorization
// label |0100>, and 10000-shot histograms keep that argmax across seeds.
void c04_three_step_argmax(Report& r) {
  const AnnealingProblem p = table_problem(2479, 7, 6, -1.0);
  const TrotterPlan plan{0.3, 0.1};
  r.expect(step_count(plan) == 3, "plan is not three steps");
  for (int l = 1; l <= 3; ++l) {
    const CdSpec cd{CdKind::NestedCommutator, l};
    const StateVector s = trotter_evolve(p, cd, plan);
    r.expect(ket_label(argmax_state(s), 4) == "0100",
             "nc" + std::to_string(l) + ": state argmax is not |0100>");
    for (std::uint64_t seed : {0, 1, 2}) {
      const auto counts = sample_counts(s, 10000, seed);
      r.expect(ket_label(argmax_counts(counts), 4) == "0100",
               "nc" + std::to_string(l) + ": histogram argmax moved at seed " +
                   std::to_string(seed));
    }
  }
}

// ---------------------------------------------------------------------------
// 5. Two Trotter steps on the reduced 235 problem (T = 0.02, dt = 0.01) with
// the first-order CD term put the argmax on the factorization label |0101>.
void c05_two_step_argmax(Report& r) {
  const AnnealingProblem p = table_problem(235, 3, 6, -1.0);
  const TrotterPlan plan{0.02, 0.01};
  r.expect(step_count(plan) == 2, "plan is not two steps");
  const StateVector s = trotter_evolve(p, CdSpec::parse("nc1"), plan);
  r.expect(ket_label(argmax_state(s), 4) == "0101", "argmax is not |0101>");
}

// ---------------------------------------------------------------------------
// 6. The reduced 35 problem at T = 0.005, dt = 0.001, hx = -2 reaches
// fidelity >= 0.98 with (|01> + |10>)/sqrt(2) under CD driving; the bare
// evolution at the same parameters stays strictly below it.
void c06_bell_fidelity(Report& r) {
  const AnnealingProblem p = table_problem(35, 3, 3, -2.0);
  r.expect(p.n == 2, "expected 2 surviving variables");
  const TrotterPlan plan{0.005, 0.001};
  const StateVector target = uniform_superposition(2, {0b01, 0b10});
  const double f_cd = fidelity(trotter_evolve(p, CdSpec::parse("nc1"), plan), target);
  const double f_bare = fidelity(trotter_evolve(p, CdSpec::parse("none"), plan), target);
  r.expect(f_cd >= 0.98, "CD fidelity " + std::to_string(f_cd) + " < 0.98");
  r.expect(f_bare < f_cd, "bare fidelity is not strictly lower");
}

// ---------------------------------------------------------------------------
// 7. Factoring 21 with local CD reaches success probability > 0.9 at some T
// in (0, 1] while the bare evolution at the same T stays below it
// (continuous-time oracle at n = 3).
void c07_local_cd_threshold(Report& r) {
  const auto inst = make_instance_known_lengths(21, 2, 3);
  const AnnealingProblem p = make_problem(inst, -1.0);
  const std::vector<std::uint64_t> ground = {0b111};
  bool found = false;
  for (double T : {0.2, 0.6, 1.0}) {
    const double with_cd =
        success_probability(exact_evolve(p, CdSpec::parse("local"), T), ground);
    const double bare =
        success_probability(exact_evolve(p, CdSpec::parse("none"), T), ground);
    if (with_cd > 0.9 && bare < with_cd) found = true;
  }
  r.expect(found, "no T in (0, 1] with local-CD success > 0.9 and bare below it");
}

// ---------------------------------------------------------------------------
// 8. On the reduced 35 problem with the first-order CD term, the distance to
// the continuous-time oracle shrinks first order in dt: the fitted slope of
// log error against log dt over dt = T/8 .. T/128 lies in 1.0 +- 0.2.
void c08_first_order_convergence(Report& r) {
  const AnnealingProblem p = table_problem(35, 3, 3, -1.0);
  const double T = 0.2;
  const StateVector ref = exact_evolve(p, CdSpec::parse("nc1"), T, 1e-10, 1e-12);
  std::vector<double> lg_dt, lg_err;
  for (int k = 3; k <= 7; ++k) {
    const double dt = T / (1 << k);
    const StateVector s = trotter_evolve(p, CdSpec::parse("nc1"), {T, dt});
    double err2 = 0.0;
    for (std::size_t i = 0; i < s.amp.size(); ++i) err2 += std::norm(s.amp[i] - ref.amp[i]);
    lg_dt.push_back(std::log(dt));
    lg_err.push_back(std::log(std::sqrt(err2)));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int m = static_cast<int>(lg_dt.size());
  for (int i = 0; i < m; ++i) {
    sx += lg_dt[i];
    sy += lg_err[i];
    sxx += lg_dt[i] * lg_dt[i];
    sxy += lg_dt[i] * lg_err[i];
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  r.expect(slope > 0.8 && slope < 1.2,
           "fitted slope " + std::to_string(slope) + " outside 1.0 +- 0.2");
}

// ---------------------------------------------------------------------------
// 9. Variational optimality on 50 random problems of up to 4 qubits: for the
// local closed form, the probed minimizer of its tied objective agrees to
// 1e-10 and +-1e-3 coefficient perturbations never reduce that objective;
// for nc(1..3) and the pool, +-1e-3 perturbations never reduce the action.
void c09_variational_optimality(Report& r) {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> ld(0.05, 0.95);
  std::uniform_int_distribution<int> coin(0, 1);
  double worst_closed = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const AnnealingProblem p = random_problem(rng, 2, 4);
    const double lam = ld(rng);

    const auto closed = local_cd_coefficients(p, lam);
    const auto tied = [&](const std::vector<double>& v) {
      return tied_surrogate_action(p, v, lam);
    };
    const auto probed = probe_quadratic_minimum(tied, p.n);
    for (int j = 0; j < p.n; ++j)
      worst_closed = std::max(worst_closed, std::abs(probed[j] - closed[j]));
    const double tied_star = tied(closed);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<double> v = closed;
      for (double& x : v) x += coin(rng) ? 1e-3 : -1e-3;
      r.expect(tied(v) >= tied_star - 1e-10, "local: perturbation reduced the objective");
    }

    for (int l = 1; l <= 3; ++l) {
      const auto basis = nc_basis(p, lam, l);
      const auto [coeffs, opt] = minimize_over_family(p, basis, lam);
      const double s_star = action(p, opt, lam);
      for (int rep = 0; rep < 5; ++rep) {
        PauliSum perturbed;
        for (std::size_t m = 0; m < basis.size(); ++m)
          perturbed += (coeffs[m] + (coin(rng) ? 1e-3 : -1e-3)) * basis[m];
        r.expect(action(p, perturbed, lam) >= s_star - 1e-9,
                 "nc" + std::to_string(l) + ": perturbation reduced the action");
      }
    }

    const auto pool = pool_gauge_potential(p, lam);
    const auto channels = pool_channels(p);
    const double s_pool = action(p, pool.op, lam);
    for (int rep = 0; rep < 5; ++rep) {
      PauliSum perturbed;
      for (int c = 0; c < 3; ++c)
        if (pool.active[c])
          perturbed += (pool.coeffs[c] + (coin(rng) ? 1e-3 : -1e-3)) * channels[c];
      r.expect(action(p, perturbed, lam) >= s_pool - 1e-9,
               "pool: perturbation reduced the action");
    }
  }
  r.expect(worst_closed < 1e-10,
           "closed form differs from probed minimum by " + std::to_string(worst_closed));
}

// ---------------------------------------------------------------------------
// 10. Oracle equivalence: the bitmask Pauli algebra, the statevector
// exponential kernels, and compiled circuits all agree with independently
// built dense matrices (and with each other) within 1e-9.
void c10_oracle_equivalence(Report& r) {
  std::mt19937_64 rng(4321);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  // Products, commutators, inner products against dense matrices, n <= 4.
  double worst_algebra = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> nd(1, 4);
    const int n = nd(rng);
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
    const PauliString a{mask(rng), mask(rng)};
    const PauliString b{mask(rng), mask(rng)};
    const int e = PauliString::product_phase_exp(a, b);
    const PauliString ab{a.x ^ b.x, a.z ^ b.z};
    const Mat lhs = dense(a, n) * dense(b, n);
    const Mat rhs = std::pow(std::complex<double>(0, 1), e) * dense(ab, n);
    worst_algebra = std::max(worst_algebra, (lhs - rhs).cwiseAbs().maxCoeff());

    PauliSum A, B;
    std::uniform_int_distribution<int> terms(1, 5);
    for (int t = terms(rng); t > 0; --t) A.add_term({mask(rng), mask(rng)}, gauss(rng));
    for (int t = terms(rng); t > 0; --t) B.add_term({mask(rng), mask(rng)}, gauss(rng));
    const Mat dA = dense(A, n), dB = dense(B, n);
    const Mat comm = std::complex<double>(0, 1) * (dA * dB - dB * dA);
    worst_algebra = std::max(
        worst_algebra, (dense(commutator_i(A, B), n) - comm).cwiseAbs().maxCoeff());
    worst_algebra =
        std::max(worst_algebra, std::abs(hs_inner(A, B) - hs_inner_dense(dA, dB)));
  }
  r.expect(worst_algebra < 1e-9,
           "algebra vs dense worst deviation " + std::to_string(worst_algebra));

  // Exponential kernels against the dense matrix exponential, n <= 3.
  double worst_exp = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> nd(1, 3);
    const int n = nd(rng);
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
    const PauliString pstr{mask(rng), mask(rng)};
    const double theta = 2.0 * uni(rng) - 1.0;
    StateVector s;
    s.n = n;
    s.amp.resize(std::size_t{1} << n);
    Eigen::VectorXcd v(1 << n);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      s.amp[static_cast<std::size_t>(i)] = {gauss(rng), gauss(rng)};
      v(i) = s.amp[static_cast<std::size_t>(i)];
    }
    apply_pauli_exponential(s, theta, pstr);
    const Mat u = (std::complex<double>(0, -theta) * dense(pstr, n)).exp();
    const Eigen::VectorXcd want = u * v;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      worst_exp =
          std::max(worst_exp, std::abs(s.amp[static_cast<std::size_t>(i)] - want(i)));
  }
  r.expect(worst_exp < 1e-9, "exponential vs dense worst deviation " + std::to_string(worst_exp));

  // Compiled circuits against the evolution kernels, n <= 8.
  const char* variants[] = {"none", "local", "nc1", "nc2", "pool"};
  double worst_circuit = 0.0;
  for (int trial = 0; trial < 15; ++trial) {
    const AnnealingProblem p = random_problem(rng, 2, 8);
    const CdSpec cd = CdSpec::parse(variants[trial % 5]);
    const TrotterPlan plan{0.02, 0.01};
    const StateVector via_kernels = trotter_evolve(p, cd, plan);
    const StateVector via_circuit = simulate(compile_plan(p, cd, plan));
    worst_circuit = std::max(worst_circuit, 1.0 - fidelity(via_circuit, via_kernels));
  }
  r.expect(worst_circuit < 1e-9,
           "circuit vs statevector worst infidelity " + std::to_string(worst_circuit));
}

// ---------------------------------------------------------------------------
// 11. For every odd semiprime N < 2000 with known factor bit lengths (both
// register orientations), the reduced system's brute-force solutions decode
// to valid factorizations; the canonical instances 35, 235, 2479 keep
// exactly 2, 4, 4 surviving variables.
void c11_preprocessing_regression(Report& r) {
  std::vector<bool> is_prime(2000, true);
  is_prime[0] = is_prime[1] = false;
  for (int i = 2; i < 2000; ++i)
    if (is_prime[i])
      for (int j = 2 * i; j < 2000; j += i) is_prime[j] = false;

  const auto bit_length = [](long long v) {
    return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(v)));
  };

  int instances = 0;
  for (long long N = 9; N < 2000; N += 2) {
    long long p = 0;
    for (long long d = 3; d * d <= N; d += 2)
      if (N % d == 0) {
        p = d;
        break;
      }
    if (p == 0) continue;  // prime
    const long long q = N / p;
    if (q >= 2000 || !is_prime[static_cast<std::size_t>(q)] || q % 2 == 0) continue;

    std::vector<std::pair<int, int>> orientations = {{bit_length(p), bit_length(q)}};
    if (bit_length(p) != bit_length(q))
      orientations.push_back({bit_length(q), bit_length(p)});
    for (const auto& [bx, by] : orientations) {
      const auto red = reduce_factorization(N, bx, by);
      const auto sols = red.solutions();
      if (sols.empty()) {
        r.expect(false, "no solutions for " + std::to_string(N) + " at (" +
                            std::to_string(bx) + ", " + std::to_string(by) + ")");
        continue;
      }
      for (std::uint64_t sol : sols) {
        const auto factors = red.decode(sol);
        const bool valid = factors && factors->first > 1 && factors->second > 1 &&
                           factors->first * factors->second == N;
        if (!valid)
          r.expect(false, "invalid decode for " + std::to_string(N) + " at (" +
                              std::to_string(bx) + ", " + std::to_string(by) + ")");
      }
      ++instances;
    }
  }
  r.expect(instances > 500, "unexpectedly few semiprime instances: " +
                                std::to_string(instances));

  r.expect(reduce_factorization(35, 3, 3).n_qubits() == 2, "35 must keep 2 variables");
  r.expect(reduce_factorization(235, 3, 6).n_qubits() == 4, "235 must keep 4 variables");
  r.expect(reduce_factorization(2479, 7, 6).n_qubits() == 4, "2479 must keep 4 variables");
}

struct Criterion {
  const char* name;
  double budget_s;
  void (*fn)(Report&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"direct Hamiltonian golden (217)", 1.0, c01_direct_golden_217},
      {"table Hamiltonian golden (2479)", 1.0, c02_table_golden_2479},
      {"first-order coefficient fit constants", 5.0, c03_coefficient_fit},
      {"three-step argmax + histograms (2479)", 10.0, c04_three_step_argmax},
      {"two-step argmax (235)", 5.0, c05_two_step_argmax},
      {"Bell-pair fidelity bound (35)", 5.0, c06_bell_fidelity},
      {"local-CD success threshold (21)", 30.0, c07_local_cd_threshold},
      {"first-order Trotter convergence (35)", 30.0, c08_first_order_convergence},
      {"variational optimality suite", 60.0, c09_variational_optimality},
      {"oracle equivalence suite", 60.0, c10_oracle_equivalence},
      {"semiprime preprocessing regression", 120.0, c11_preprocessing_regression},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Report rep;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.fn(rep);
    } catch (const std::exception& e) {
      rep.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.budget_s) rep.expect(false, "over the wall-time budget");
    const bool pass = rep.ok;
    std::printf("[%s] %2d %-42s %7.3fs (budget %gs)\n", pass ? "PASS" : "FAIL", index,
                c.name, secs, c.budget_s);
    if (!pass) {
      std::fputs(rep.detail.c_str(), stdout);
      ++failures;
    }
  }
  std::printf("%d/11 criteria passed\n", 11 - failures);
  return failures;
}
