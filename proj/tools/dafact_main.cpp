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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dafact/experiment.hpp"

namespace {

using namespace dafact;

// Option state shared by the subcommands; option handles are kept so that
// explicit flags can override config-file and preset values field by field.
struct CliState {
  long long N = 0;
  std::string encoding = "direct";
  int bits_x = 0;
  int bits_y = 0;
  std::string cd = "none";
  int l = 0;
  double hx = -1.0;
  double T = 0.0;
  double dt = 0.0;
  long long shots = 8192;
  std::uint64_t seed = 0;
  bool hardware_mode = false;
  std::string sampling = "midpoint";
  bool exact = false;
  std::vector<double> sweep;
  int workers = 0;
  std::string preset;
  std::string config_path;
  std::string out;
  std::string emit_qasm_path;
  std::string dump_hamiltonian_path;
  std::string dump_equations_path;
  std::string dump_cd_path;

  CLI::Option* o_n = nullptr;
  CLI::Option* o_encoding = nullptr;
  CLI::Option* o_bits_x = nullptr;
  CLI::Option* o_bits_y = nullptr;
  CLI::Option* o_cd = nullptr;
  CLI::Option* o_l = nullptr;
  CLI::Option* o_hx = nullptr;
  CLI::Option* o_T = nullptr;
  CLI::Option* o_dt = nullptr;
  CLI::Option* o_shots = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_hardware = nullptr;
  CLI::Option* o_sampling = nullptr;
  CLI::Option* o_exact = nullptr;
  CLI::Option* o_sweep = nullptr;
  CLI::Option* o_workers = nullptr;
};

void add_common_options(CLI::App* cmd, CliState& s) {
  s.o_n = cmd->add_option("--n", s.N, "Number to factor");
  s.o_encoding = cmd->add_option("--encoding", s.encoding, "Encoding: direct | table");
  s.o_bits_x = cmd->add_option("--bits-x", s.bits_x, "Bit length of factor x (0 = derive)");
  s.o_bits_y = cmd->add_option("--bits-y", s.bits_y, "Bit length of factor y (0 = derive)");
  s.o_cd = cmd->add_option("--cd", s.cd, "CD variant: none | local | nc<l> | pool");
  s.o_l = cmd->add_option("--l", s.l, "Nested-commutator order (with --cd nc)");
  s.o_hx = cmd->add_option("--hx", s.hx, "Transverse field strength");
  s.o_T = cmd->add_option("--T", s.T, "Total evolution time");
  s.o_dt = cmd->add_option("--dt", s.dt, "Step size (must divide T)");
  s.o_shots = cmd->add_option("--shots", s.shots, "Measurement shots for the histogram");
  s.o_seed = cmd->add_option("--seed", s.seed, "Sampling seed");
  s.o_hardware = cmd->add_flag("--hardware-mode", s.hardware_mode,
                               "Keep only single-site Y terms of the CD drive");
  s.o_sampling = cmd->add_option("--sampling", s.sampling,
                                 "Schedule sampling within a step: midpoint | endpoint");
  s.o_exact = cmd->add_flag("--exact", s.exact, "Adaptive integration instead of the splitting");
  s.o_workers = cmd->add_option("--workers", s.workers, "Sweep concurrency (0 = default)");
  cmd->add_option("--preset", s.preset, "Named parameter set: " + [] {
    std::string names;
    for (const std::string& n : preset_names()) names += (names.empty() ? "" : " | ") + n;
    return names;
  }());
  cmd->add_option("--config", s.config_path, "Config file (key = value lines)");
  cmd->add_option("--out", s.out, "Output path (stdout when omitted)");
  cmd->add_option("--emit-qasm", s.emit_qasm_path, "Write the compiled circuit as OpenQASM 2.0");
  cmd->add_option("--dump-hamiltonian", s.dump_hamiltonian_path,
                  "Write the final Hamiltonian, one term per line");
  cmd->add_option("--dump-equations", s.dump_equations_path,
                  "Write the reduced equation system (table encoding)");
  cmd->add_option("--dump-cd", s.dump_cd_path, "Write the per-step CD coefficients as CSV");
}

ExperimentConfig build_config(const CliState& s) {
  ExperimentConfig cfg;
  if (!s.config_path.empty()) cfg = load_config_file(s.config_path);
  if (!s.preset.empty()) cfg = preset_config(s.preset);

  if (s.o_n->count()) cfg.N = s.N;
  if (s.o_encoding->count()) cfg.encoding = parse_encoding(s.encoding);
  if (s.o_bits_x->count()) cfg.bits_x = s.bits_x;
  if (s.o_bits_y->count()) cfg.bits_y = s.bits_y;
  if (s.o_cd->count()) {
    std::string text = s.cd;
    if (text == "nc" && s.o_l->count()) text += std::to_string(s.l);
    cfg.cd = CdSpec::parse(text);
  }
  if (s.o_l->count()) {
    if (cfg.cd.kind != CdKind::NestedCommutator)
      throw InvalidInput("--l applies to the nested-commutator family (--cd nc<l>)");
    if (s.l < 1) throw InvalidInput("--l must be positive");
    cfg.cd.order = s.l;
  }
  if (s.o_hx->count()) cfg.hx = s.hx;
  if (s.o_T->count()) cfg.T = s.T;
  if (s.o_dt->count()) cfg.dt = s.dt;
  if (s.o_shots->count()) cfg.shots = s.shots;
  if (s.o_seed->count()) cfg.seed = s.seed;
  if (s.o_hardware->count()) cfg.hardware_mode = s.hardware_mode;
  if (s.o_sampling->count()) {
    if (s.sampling == "midpoint")
      cfg.sampling = SamplingRule::Midpoint;
    else if (s.sampling == "endpoint")
      cfg.sampling = SamplingRule::Endpoint;
    else
      throw InvalidInput("--sampling must be midpoint or endpoint");
  }
  if (s.o_exact->count()) cfg.exact = s.exact;
  if (s.o_sweep && s.o_sweep->count()) cfg.sweep_T = s.sweep;
  if (s.o_workers->count()) cfg.workers = s.workers;
  return cfg;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open output file: " + path);
  out << text;
}

void handle_dumps(const CliState& s, const PreparedInstance& inst) {
  if (!s.emit_qasm_path.empty()) {
    if (inst.config.exact)
      throw InvalidInput("--emit-qasm needs the digitized path (drop --exact)");
    const Circuit c = compile_plan(inst.problem, inst.config.cd,
                                   {inst.config.T, inst.config.dt, inst.config.sampling,
                                    inst.config.hardware_mode});
    write_output(s.emit_qasm_path, emit_qasm(c));
  }
  if (!s.dump_hamiltonian_path.empty())
    write_output(s.dump_hamiltonian_path, inst.render_hamiltonian());
  if (!s.dump_equations_path.empty()) {
    if (!inst.reduced)
      throw InvalidInput("--dump-equations needs the table encoding");
    write_output(s.dump_equations_path, inst.render_equations());
  }
  if (!s.dump_cd_path.empty()) write_output(s.dump_cd_path, dump_cd_profile(inst));
}

std::string encode_summary(const PreparedInstance& inst) {
  std::string out;
  out += "N = " + std::to_string(inst.config.N) + ", encoding = " +
         to_string(inst.config.encoding) + ", bits = (" +
         std::to_string(inst.config.bits_x) + ", " + std::to_string(inst.config.bits_y) +
         ")\n";
  out += "qubits: " + std::to_string(inst.problem.n) + "\n";
  out += "ground labels:";
  for (std::uint64_t g : inst.ground_labels) {
    out += " " + ket_label(g, inst.problem.n);
    if (const auto f = inst.decode(g))
      out += " (" + std::to_string(f->first) + " x " + std::to_string(f->second) + ")";
  }
  out += "\n";
  const std::string eq = inst.render_equations();
  if (!eq.empty()) out += "reduced equations:\n" + eq;
  out += "final Hamiltonian:\n" + inst.render_hamiltonian();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factoring by digitized adiabatic evolution with counterdiabatic driving"};
  app.require_subcommand(1);

  CliState run_state, sweep_state, encode_state;
  CLI::App* run_cmd = app.add_subcommand("run", "Run one evolution and write the result JSON");
  add_common_options(run_cmd, run_state);
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Success probability against evolution time (CSV)");
  add_common_options(sweep_cmd, sweep_state);
  sweep_state.o_sweep =
      sweep_cmd->add_option("--sweep", sweep_state.sweep, "Evolution times to sample");
  CLI::App* encode_cmd =
      app.add_subcommand("encode", "Encode and reduce an instance without running dynamics");
  add_common_options(encode_cmd, encode_state);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run_cmd->parsed()) {
      const PreparedInstance inst = prepare_instance(build_config(run_state));
      const nlohmann::ordered_json result = run_experiment(inst);
      handle_dumps(run_state, inst);
      write_output(run_state.out, result.dump(2) + "\n");
    } else if (sweep_cmd->parsed()) {
      const PreparedInstance inst = prepare_instance(build_config(sweep_state));
      const std::string csv = run_sweep(inst);
      handle_dumps(sweep_state, inst);
      write_output(sweep_state.out, csv);
    } else if (encode_cmd->parsed()) {
      const PreparedInstance inst = prepare_instance(build_config(encode_state));
      handle_dumps(encode_state, inst);
      write_output(encode_state.out, encode_summary(inst));
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Infeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
