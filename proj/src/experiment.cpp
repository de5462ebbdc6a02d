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

#include "dafact/experiment.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dafact/exact_evolve.hpp"
#include "dafact/schedule.hpp"

namespace dafact {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

long long parse_ll(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long long out = 0;
  try {
    out = std::stoll(v, &pos);
  } catch (const std::exception&) {
    throw InvalidInput("config: bad integer for " + key + ": " + v);
  }
  if (pos != v.size()) throw InvalidInput("config: bad integer for " + key + ": " + v);
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double out = 0;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw InvalidInput("config: bad number for " + key + ": " + v);
  }
  if (pos != v.size()) throw InvalidInput("config: bad number for " + key + ": " + v);
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw InvalidInput("config: bad boolean for " + key + ": " + v);
}

int bit_length(long long v) {
  int n = 0;
  while (v > 0) {
    ++n;
    v >>= 1;
  }
  return n;
}

// The digitized plan described by a config.
TrotterPlan plan_of(const ExperimentConfig& cfg, double T) {
  return {T, cfg.dt, cfg.sampling, cfg.hardware_mode};
}

StateVector evolve(const PreparedInstance& inst, const CdSpec& cd, double T) {
  if (inst.config.exact) return exact_evolve(inst.problem, cd, T);
  return trotter_evolve(inst.problem, cd, plan_of(inst.config, T));
}

nlohmann::ordered_json config_json(const ExperimentConfig& cfg) {
  nlohmann::ordered_json j;
  j["n"] = cfg.N;
  j["encoding"] = to_string(cfg.encoding);
  j["bits_x"] = cfg.bits_x;
  j["bits_y"] = cfg.bits_y;
  j["cd"] = cfg.cd.to_string();
  j["hx"] = cfg.hx;
  j["T"] = cfg.T;
  j["dt"] = cfg.dt;
  j["shots"] = cfg.shots;
  j["seed"] = cfg.seed;
  j["hardware_mode"] = cfg.hardware_mode;
  j["sampling"] = cfg.sampling == SamplingRule::Midpoint ? "midpoint" : "endpoint";
  j["exact"] = cfg.exact;
  j["sweep_T"] = cfg.sweep_T;
  j["workers"] = cfg.workers;
  return j;
}

nlohmann::ordered_json factors_json(const PreparedInstance& inst, std::uint64_t label) {
  const auto f = inst.decode(label);
  if (!f) return nullptr;
  return nlohmann::ordered_json::array({f->first, f->second});
}

}  // namespace

std::string to_string(EncodingKind e) {
  return e == EncodingKind::Direct ? "direct" : "table";
}

EncodingKind parse_encoding(const std::string& s) {
  if (s == "direct") return EncodingKind::Direct;
  if (s == "table") return EncodingKind::Table;
  throw InvalidInput("unknown encoding: " + s);
}

std::string serialize(const ExperimentConfig& cfg) {
  std::string out;
  out += "n = " + std::to_string(cfg.N) + "\n";
  out += "encoding = " + to_string(cfg.encoding) + "\n";
  out += "bits_x = " + std::to_string(cfg.bits_x) + "\n";
  out += "bits_y = " + std::to_string(cfg.bits_y) + "\n";
  out += "cd = " + cfg.cd.to_string() + "\n";
  out += "hx = " + fmt_double(cfg.hx) + "\n";
  out += "T = " + fmt_double(cfg.T) + "\n";
  out += "dt = " + fmt_double(cfg.dt) + "\n";
  out += "shots = " + std::to_string(cfg.shots) + "\n";
  out += "seed = " + std::to_string(cfg.seed) + "\n";
  out += std::string("hardware_mode = ") + (cfg.hardware_mode ? "true" : "false") + "\n";
  out += std::string("sampling = ") +
         (cfg.sampling == SamplingRule::Midpoint ? "midpoint" : "endpoint") + "\n";
  out += std::string("exact = ") + (cfg.exact ? "true" : "false") + "\n";
  if (!cfg.sweep_T.empty()) {
    out += "sweep_T =";
    for (double t : cfg.sweep_T) out += " " + fmt_double(t);
    out += "\n";
  }
  out += "workers = " + std::to_string(cfg.workers) + "\n";
  return out;
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) throw InvalidInput("config: expected key = value: " + stripped);
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key == "n") {
      cfg.N = parse_ll(key, value);
    } else if (key == "encoding") {
      cfg.encoding = parse_encoding(value);
    } else if (key == "bits_x") {
      cfg.bits_x = static_cast<int>(parse_ll(key, value));
    } else if (key == "bits_y") {
      cfg.bits_y = static_cast<int>(parse_ll(key, value));
    } else if (key == "cd") {
      cfg.cd = CdSpec::parse(value);
    } else if (key == "hx") {
      cfg.hx = parse_double(key, value);
    } else if (key == "T") {
      cfg.T = parse_double(key, value);
    } else if (key == "dt") {
      cfg.dt = parse_double(key, value);
    } else if (key == "shots") {
      cfg.shots = parse_ll(key, value);
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_ll(key, value));
    } else if (key == "hardware_mode") {
      cfg.hardware_mode = parse_bool(key, value);
    } else if (key == "sampling") {
      if (value == "midpoint")
        cfg.sampling = SamplingRule::Midpoint;
      else if (value == "endpoint")
        cfg.sampling = SamplingRule::Endpoint;
      else
        throw InvalidInput("config: bad sampling rule: " + value);
    } else if (key == "exact") {
      cfg.exact = parse_bool(key, value);
    } else if (key == "sweep_T") {
      cfg.sweep_T.clear();
      std::istringstream vs(value);
      std::string tok;
      while (vs >> tok) cfg.sweep_T.push_back(parse_double(key, tok));
    } else if (key == "workers") {
      cfg.workers = static_cast<int>(parse_ll(key, value));
    } else {
      throw InvalidInput("config: unknown key: " + key);
    }
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig1a", "fig2",  "fig3",
                                                 "fig4a", "fig4b", "figS2"};
  return names;
}

ExperimentConfig preset_config(const std::string& name) {
  ExperimentConfig cfg;
  if (name == "fig1a") {
    // Direct 21, single-site ansatz, continuous-time success sweep.
    cfg.N = 21;
    cfg.encoding = EncodingKind::Direct;
    cfg.bits_x = 2;
    cfg.bits_y = 3;
    cfg.cd = CdSpec::parse("local");
    cfg.exact = true;
    for (int k = 1; k <= 10; ++k) cfg.sweep_T.push_back(0.1 * k);
  } else if (name == "fig2") {
    // Reduced 2479, first nested-commutator order, digitized sweep.
    cfg.N = 2479;
    cfg.encoding = EncodingKind::Table;
    cfg.bits_x = 7;
    cfg.bits_y = 6;
    cfg.cd = CdSpec::parse("nc1");
    cfg.dt = 0.1;
    for (int k = 1; k <= 10; ++k) cfg.sweep_T.push_back(0.1 * k);
  } else if (name == "fig3") {
    cfg.N = 217;
    cfg.encoding = EncodingKind::Direct;
    cfg.bits_x = 3;
    cfg.bits_y = 5;
    cfg.cd = CdSpec::parse("nc1");
    cfg.T = 0.01;
    cfg.dt = 0.001;
  } else if (name == "fig4a") {
    cfg.N = 35;
    cfg.encoding = EncodingKind::Table;
    cfg.bits_x = 3;
    cfg.bits_y = 3;
    cfg.cd = CdSpec::parse("nc1");
    cfg.hx = -2.0;
    cfg.T = 0.005;
    cfg.dt = 0.001;
  } else if (name == "fig4b") {
    cfg.N = 235;
    cfg.encoding = EncodingKind::Table;
    cfg.bits_x = 3;
    cfg.bits_y = 6;
    cfg.cd = CdSpec::parse("nc1");
    cfg.T = 0.02;
    cfg.dt = 0.01;
  } else if (name == "figS2") {
    cfg.N = 2479;
    cfg.encoding = EncodingKind::Table;
    cfg.bits_x = 7;
    cfg.bits_y = 6;
    cfg.cd = CdSpec::parse("nc1");
    cfg.T = 0.3;
    cfg.dt = 0.1;
    cfg.shots = 10000;
  } else {
    throw InvalidInput("unknown preset: " + name);
  }
  return cfg;
}

bool preset_is_sweep(const std::string& name) {
  return !preset_config(name).sweep_T.empty();
}

std::optional<std::pair<long long, long long>> PreparedInstance::decode(
    std::uint64_t label) const {
  if (direct) return direct->decode(label);
  return reduced->decode(label);
}

std::string PreparedInstance::render_equations() const {
  return reduced ? reduced->render() : "";
}

std::string PreparedInstance::render_hamiltonian() const {
  return render_ising(IsingForm{problem.zc, problem.constant}, problem.n);
}

PreparedInstance prepare_instance(const ExperimentConfig& cfg) {
  if ((cfg.bits_x == 0) != (cfg.bits_y == 0))
    throw InvalidInput("give both bit lengths or neither");
  PreparedInstance out;
  out.config = cfg;

  if (cfg.encoding == EncodingKind::Direct) {
    const FactorizationInstance inst =
        cfg.bits_x > 0 ? make_instance_known_lengths(cfg.N, cfg.bits_x, cfg.bits_y)
                       : make_instance_formula_bound(cfg.N);
    out.config.bits_x = inst.bits_x;
    out.config.bits_y = inst.bits_y;
    out.problem = make_problem(inst, cfg.hx);
    const auto [e0, labels] = exact_ground_states(inst);
    out.ground_energy = e0;
    out.ground_labels = labels;
    out.direct = inst;
    return out;
  }

  int bx = cfg.bits_x, by = cfg.bits_y;
  ReducedSystem red;
  if (bx > 0) {
    red = reduce_factorization(cfg.N, bx, by);
  } else {
    // Derive lengths by trial division, larger factor to x.
    long long p = 0;
    for (long long d = 3; d * d <= cfg.N; d += 2)
      if (cfg.N % d == 0) {
        p = d;
        break;
      }
    if (cfg.N < 9 || cfg.N % 2 == 0 || p == 0)
      throw InvalidInput("cannot derive bit lengths: give bits_x and bits_y");
    const long long q = cfg.N / p;
    bx = bit_length(std::max(p, q));
    by = bit_length(std::min(p, q));
    red = reduce_factorization(cfg.N, bx, by);
    if (red.n_qubits() == 0) {
      // A collapsed system is already solved; prefer an orientation that
      // leaves dynamics to simulate when one exists.
      const ReducedSystem swapped = reduce_factorization(cfg.N, by, bx);
      if (swapped.n_qubits() > 0) {
        std::swap(bx, by);
        red = swapped;
      }
    }
  }
  out.config.bits_x = bx;
  out.config.bits_y = by;
  out.problem = make_problem(red.cost().to_ising(), red.n_qubits(), cfg.hx);
  const auto [e0, labels] =
      exact_ground_states(IsingForm{out.problem.zc, out.problem.constant}, out.problem.n);
  out.ground_energy = e0;
  out.ground_labels = labels;
  out.reduced = std::move(red);
  return out;
}

nlohmann::ordered_json run_experiment(const PreparedInstance& inst) {
  const ExperimentConfig& cfg = inst.config;
  if (cfg.shots < 0) throw InvalidInput("shots must be nonnegative");
  if (cfg.exact && cfg.hardware_mode)
    throw InvalidInput("the hardware filter applies to the digitized path only");
  const int n = inst.problem.n;

  nlohmann::ordered_json j;
  j["config"] = config_json(cfg);
  j["n_qubits"] = n;
  if (!cfg.exact) j["steps"] = step_count(plan_of(cfg, cfg.T));

  nlohmann::ordered_json ground;
  ground["energy"] = inst.ground_energy;
  ground["labels"] = nlohmann::ordered_json::array();
  ground["factors"] = nlohmann::ordered_json::array();
  for (std::uint64_t g : inst.ground_labels) {
    ground["labels"].push_back(ket_label(g, n));
    ground["factors"].push_back(factors_json(inst, g));
  }
  j["ground"] = ground;

  if (n == 0) {
    // Preprocessing solved the instance outright; there is nothing to evolve.
    j["success_probability"] = 1.0;
    j["fidelity"] = 1.0;
    j["argmax"] = {{"label", ""}, {"probability", 1.0}, {"factors", factors_json(inst, 0)}};
    j["probabilities"] = nlohmann::ordered_json::object();
    j["histogram"] = nlohmann::ordered_json::object();
    return j;
  }

  const StateVector psi = evolve(inst, cfg.cd, cfg.T);
  const std::vector<double> pr = probabilities(psi);
  j["success_probability"] = success_probability(psi, inst.ground_labels);
  j["fidelity"] = fidelity(psi, uniform_superposition(n, inst.ground_labels));

  std::uint64_t best = 0;
  for (std::uint64_t b = 1; b < pr.size(); ++b)
    if (pr[b] > pr[best]) best = b;
  j["argmax"] = {{"label", ket_label(best, n)},
                 {"probability", pr[best]},
                 {"factors", factors_json(inst, best)}};

  nlohmann::ordered_json table = nlohmann::ordered_json::object();
  for (std::uint64_t b = 0; b < pr.size(); ++b) table[ket_label(b, n)] = pr[b];
  j["probabilities"] = table;

  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [label, count] : sample_counts(psi, cfg.shots, cfg.seed))
    hist[ket_label(label, n)] = count;
  j["histogram"] = hist;

  if (!cfg.exact) {
    const GateCounts counts = gate_counts(compile_plan(inst.problem, cfg.cd, plan_of(cfg, cfg.T)));
    nlohmann::ordered_json gc;
    gc["total"] = counts.total;
    gc["by_kind"] = counts.by_kind;
    gc["by_component"] = counts.by_component;
    j["gate_counts"] = gc;
  }
  return j;
}

std::string run_sweep(const PreparedInstance& inst) {
  if (inst.config.sweep_T.empty()) throw InvalidInput("sweep requires a nonempty T list");
  std::vector<double> Ts = inst.config.sweep_T;
  std::sort(Ts.begin(), Ts.end());
  const int m = static_cast<int>(Ts.size());
  std::vector<double> with_cd(m), without_cd(m);

#ifdef _OPENMP
  const int nt = inst.config.workers > 0 ? inst.config.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
  for (int i = 0; i < m; ++i) {
    if (inst.problem.n == 0) {
      with_cd[i] = without_cd[i] = 1.0;
      continue;
    }
    with_cd[i] =
        success_probability(evolve(inst, inst.config.cd, Ts[i]), inst.ground_labels);
    without_cd[i] =
        success_probability(evolve(inst, CdSpec{CdKind::None, 1}, Ts[i]), inst.ground_labels);
  }

  std::string out = "T,success_with_cd,success_without_cd\n";
  char buf[120];
  for (int i = 0; i < m; ++i) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", Ts[i], with_cd[i], without_cd[i]);
    out += buf;
  }
  return out;
}

std::string dump_cd_profile(const PreparedInstance& inst) {
  const ExperimentConfig& cfg = inst.config;
  const TrotterPlan plan = plan_of(cfg, cfg.T);
  const int M = step_count(plan);
  int k = 0;
  switch (cfg.cd.kind) {
    case CdKind::None: k = 0; break;
    case CdKind::Local: k = inst.problem.n; break;
    case CdKind::NestedCommutator: k = cfg.cd.order; break;
    case CdKind::Pool: k = 3; break;
  }

  std::string out = "t,lambda,lambda_dot";
  for (int i = 1; i <= k; ++i) out += ",c" + std::to_string(i);
  out += "\n";
  char buf[96];
  for (int j = 1; j <= M; ++j) {
    const double t = plan.rule == SamplingRule::Midpoint ? (j - 0.5) * plan.dt : j * plan.dt;
    const SchedulePoint s = schedule_eval(t, plan.T);
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g", t, s.lambda, s.lambda_dot);
    out += buf;
    std::vector<double> coeffs;
    switch (cfg.cd.kind) {
      case CdKind::None: break;
      case CdKind::Local: coeffs = local_cd_coefficients(inst.problem, s.lambda); break;
      case CdKind::NestedCommutator:
        coeffs = nc_gauge_potential(inst.problem, cfg.cd.order, s.lambda).coeffs;
        break;
      case CdKind::Pool: {
        const auto pool = pool_gauge_potential(inst.problem, s.lambda);
        coeffs.assign(pool.coeffs.begin(), pool.coeffs.end());
        break;
      }
    }
    for (double c : coeffs) {
      std::snprintf(buf, sizeof buf, ",%.12g", c);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace dafact
