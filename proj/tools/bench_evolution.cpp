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

// Times the parallel statevector kernels against the serial reference on the
// same random operation sequence and checks that the amplitudes agree bitwise.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "dafact/statevector.hpp"

namespace {

using namespace dafact;

struct Op {
  bool phase = false;           // phase table rather than a Pauli exponential
  double angle = 0.0;           // rotation angle or phase-table scale
  PauliString p;                // used when !phase
  std::vector<double> energy;   // used when phase
};

std::vector<Op> random_ops(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-1.0, 1.0);
  std::uniform_int_distribution<std::uint64_t> mask(1, (1ull << n) - 1);
  std::uniform_int_distribution<int> kind(0, 3);
  std::vector<Op> ops;
  ops.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Op op;
    if (kind(rng) == 0) {
      op.phase = true;
      op.angle = angle(rng);
      op.energy.resize(1ull << n);
      for (double& e : op.energy) e = angle(rng);
    } else {
      op.angle = angle(rng);
      op.p = PauliString{mask(rng), mask(rng)};
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

template <typename PhaseFn, typename PauliFn>
double run_once(StateVector& s, const std::vector<Op>& ops, PhaseFn phase, PauliFn pauli) {
  const auto start = std::chrono::steady_clock::now();
  for (const Op& op : ops) {
    if (op.phase)
      phase(s, op.energy, op.angle);
    else
      pauli(s, op.angle, op.p);
  }
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark: parallel vs serial statevector kernels"};
  int n = 20;
  int ops_count = 40;
  int reps = 3;
  std::uint64_t seed = 0;
  app.add_option("--n", n, "Number of qubits")->check(CLI::Range(1, 24));
  app.add_option("--ops", ops_count, "Operations per repetition")->check(CLI::PositiveNumber);
  app.add_option("--reps", reps, "Repetitions (best time is reported)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Operation sequence seed");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Op> ops = random_ops(n, ops_count, seed);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("qubits: %d, amplitudes: %llu, ops: %d, reps: %d\n", n,
              static_cast<unsigned long long>(1ull << n), ops_count, reps);

  double best_par = 1e300;
  double best_ser = 1e300;
  StateVector parallel_state;
  StateVector serial_state;
  for (int r = 0; r < reps; ++r) {
    parallel_state = plus_state(n);
    serial_state = plus_state(n);
    const double tp = run_once(parallel_state, ops,
                               [](StateVector& s, const std::vector<double>& e, double sc) {
                                 apply_phase_table(s, e, sc);
                               },
                               [](StateVector& s, double th, const PauliString& p) {
                                 apply_pauli_exponential(s, th, p);
                               });
    const double ts = run_once(serial_state, ops,
                               [](StateVector& s, const std::vector<double>& e, double sc) {
                                 serial::apply_phase_table(s, e, sc);
                               },
                               [](StateVector& s, double th, const PauliString& p) {
                                 serial::apply_pauli_exponential(s, th, p);
                               });
    std::printf("rep %d: parallel %.2f ms, serial %.2f ms\n", r, tp, ts);
    if (tp < best_par) best_par = tp;
    if (ts < best_ser) best_ser = ts;
  }

  // The parallel kernels partition index space without reordering arithmetic,
  // so the two paths must agree bit for bit, not merely to rounding.
  for (std::size_t i = 0; i < parallel_state.amp.size(); ++i) {
    if (parallel_state.amp[i] != serial_state.amp[i]) {
      std::printf("MISMATCH at amplitude %zu\n", i);
      return 1;
    }
  }
  std::printf("best: parallel %.2f ms, serial %.2f ms, speedup %.2fx\n", best_par, best_ser,
              best_ser / best_par);
  std::printf("amplitudes identical: yes\n");
  return 0;
}
