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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dafact/circuits.hpp"
#include "dafact/preprocess.hpp"

namespace dafact {

enum class EncodingKind { Direct, Table };

std::string to_string(EncodingKind e);
EncodingKind parse_encoding(const std::string& s);  // throws InvalidInput

// One experiment, fully described. Serializes to a flat "key = value" text
// block; parse(serialize(c)) == c for every reachable value.
struct ExperimentConfig {
  long long N = 0;
  EncodingKind encoding = EncodingKind::Direct;
  int bits_x = 0;  // 0 = derive both lengths (see prepare_instance)
  int bits_y = 0;
  CdSpec cd{CdKind::None, 1};
  double hx = -1.0;
  double T = 0.0;
  double dt = 0.0;
  long long shots = 8192;
  std::uint64_t seed = 0;
  bool hardware_mode = false;
  SamplingRule sampling = SamplingRule::Midpoint;
  bool exact = false;            // adaptive integration instead of splitting
  std::vector<double> sweep_T;   // nonempty selects sweep mode
  int workers = 0;               // sweep concurrency; 0 = runtime default

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

std::string serialize(const ExperimentConfig& cfg);
// Accepts the serialize() format plus blank lines and '#' comments; unknown
// keys are errors. Later lines override earlier ones.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

// Named parameter sets for the bundled studies; see preset_names().
ExperimentConfig preset_config(const std::string& name);
bool preset_is_sweep(const std::string& name);
const std::vector<std::string>& preset_names();

// A configured instance taken through encoding (and, for table mode, the
// constraint reduction) to an annealing problem plus its exact ground data.
struct PreparedInstance {
  ExperimentConfig config;  // derived bit lengths filled in
  AnnealingProblem problem;
  double ground_energy = 0.0;
  std::vector<std::uint64_t> ground_labels;
  std::optional<FactorizationInstance> direct;
  std::optional<ReducedSystem> reduced;

  // Factor candidates behind a basis label; nullopt when the label violates
  // constraints folded away by the reduction (never for direct encoding).
  std::optional<std::pair<long long, long long>> decode(std::uint64_t label) const;
  std::string render_equations() const;   // reduced system; empty for direct
  std::string render_hamiltonian() const;
};

// Builds the problem. When both bit lengths are 0 they are derived: direct
// encoding uses the a-priori register bounds; table encoding factors N by
// trial division, gives the larger factor to x, and retries with the factors
// swapped if that orientation fully collapses while the swap does not.
// Throws InvalidInput (bad N, one length given without the other),
// Infeasible, or CapExceeded.
PreparedInstance prepare_instance(const ExperimentConfig& cfg);

// Runs the configured evolution and returns the result document: config echo,
// ground data with decoded factors, success probability, fidelity with the
// uniform ground superposition, the full probability table, the seeded shot
// histogram, and (for the digitized path) step and gate counts. Identical
// config -> byte-identical dump. A fully determined instance (no surviving
// qubits) short-circuits to success 1 with no dynamics.
nlohmann::ordered_json run_experiment(const PreparedInstance& inst);

// Success probability against evolution time, configured variant vs. none:
// "T,success_with_cd,success_without_cd" rows sorted by T. Points run
// concurrently (config.workers threads when > 0); output is order-independent.
std::string run_sweep(const PreparedInstance& inst);

// Per-step schedule samples and solved CD coefficients as CSV
// (t,lambda,lambda_dot,c1..ck); column count follows the variant family.
std::string dump_cd_profile(const PreparedInstance& inst);

}  // namespace dafact
