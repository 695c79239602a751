// SPDX-License-Identifier: MIT
//
// bslsim command line: build | run | verify | sweep.
// Machine-readable output (JSON/CSV) on stdout, human summaries on stderr.
// Exit codes: 0 success, 2 input error, 3 dimension error, 4 verification
// failure.

#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"

#include "bslsim/io.hpp"
#include "bslsim/verify.hpp"

using namespace bslsim;
using nlohmann::json;

namespace {

int cmd_build(const std::string& spec_file, const std::string& out_file,
              const std::string& dot_file) {
  LatticeSpec spec = lattice_spec_from_json(read_file(spec_file));
  // Stage-by-stage edge-coefficient summary (read in the converted frame).
  {
    LatticeState st = build_epr_layer(spec);
    const char* names[4] = {"a:epr", "b:beamsplit", "c:delay", "d:beamsplit"};
    for (int stage = 0; stage < 4; ++stage) {
      if (stage == 1) apply_polarization_rotation(st);
      if (stage == 2) apply_delay_relabel(st);
      if (stage == 3) apply_final_bs(st);
      GraphState conv = converted_view(st);
      std::set<long long> coeffs;
      int n = conv.num_modes();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          double mag = std::abs(conv.Z(i, j));
          if (mag > 1e-9) coeffs.insert(std::llround(mag / spec.t() * 1e6));
        }
      std::cerr << "stage " << names[stage] << ": C = {";
      bool first = true;
      for (long long c : coeffs) {
        std::cerr << (first ? "" : ", ") << c / 1e6;
        first = false;
      }
      std::cerr << "} * tanh2r\n";
    }
  }
  LatticeState lat = build_bsl(spec);
  write_file(out_file, lattice_state_to_json(lat));
  if (!dot_file.empty()) write_file(dot_file, dot_export(lat));
  std::cerr << "built " << lat.num_modes() << "-mode lattice ("
            << spec.num_freq_pairs << " rows x " << spec.num_time_bins
            << " bins, r=" << spec.r << ") -> " << out_file << "\n";
  std::cout << json{{"modes", lat.num_modes()}, {"out", out_file}}.dump()
            << "\n";
  return 0;
}

int cmd_run(const std::string& state_file, const std::string& program_file,
            std::optional<uint64_t> seed, bool forced_zero,
            const std::string& transcript_file, const std::string& final_file) {
  LatticeState lat = lattice_state_from_json(read_file(state_file));
  Program program = program_from_json(read_file(program_file));
  AngleSchedule schedule = compile_program(program, lat.spec);
  RunOptions opts;
  opts.forced_zero = forced_zero;
  opts.seed = seed;
  if (!forced_zero && !seed)
    throw InvalidArgumentError("run: sampling requires --seed");
  RunResult res = run_program(lat.spec, schedule, {}, opts);
  write_file(transcript_file, transcript_to_jsonl(res.transcript));
  write_file(final_file, graph_state_to_json(res.final_state));
  json out{{"output_wires", res.output_wires},
           {"accumulated_displacement",
            std::vector<double>(res.accumulated_displacement.data(),
                                res.accumulated_displacement.data() +
                                    res.accumulated_displacement.size())},
           {"transcript", transcript_file},
           {"final_state", final_file}};
  if (res.wire_feedforward)
    out["wire_feedforward"] = std::vector<double>(
        res.wire_feedforward->data(),
        res.wire_feedforward->data() + res.wire_feedforward->size());
  std::cout << out.dump() << "\n";
  std::cerr << "ran " << schedule.steps.size() << " steps, "
            << res.transcript.size() << " measurements\n";
  return 0;
}

int cmd_verify(const std::string& suite, std::optional<double> r,
               std::optional<double> tol) {
  std::vector<CheckResult> checks = run_suite(suite, r, tol);
  bool all = true;
  json arr = json::array();
  for (const CheckResult& c : checks) {
    all = all && c.pass;
    arr.push_back(json{{"name", c.name},
                       {"residual", c.residual},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass}});
    std::cerr << (c.pass ? "  ok   " : "  FAIL ") << c.name
              << "  (residual " << c.residual << ", tol " << c.tolerance
              << ")\n";
  }
  std::cout << json{{"suite", suite}, {"checks", arr}, {"pass", all}}.dump()
            << "\n";
  return all ? 0 : 4;
}

int cmd_sweep(const std::string& param, const std::vector<double>& values,
              const std::string& program_file, const std::string& out_csv,
              double r_fixed) {
  if (values.empty()) throw InvalidArgumentError("sweep: empty value range");
  if (param != "r" && param != "phi")
    throw InvalidArgumentError("sweep: param must be r or phi");
  Program program = program_from_json(read_file(program_file));
  std::string csv = "param,value,residual,nullifier_variance\n";
  for (double v : values) {
    LatticeSpec spec{6, 4, param == "r" ? v : r_fixed, "even"};
    Program p = program;
    if (param == "phi") {
      bool found = false;
      for (auto& st : p.steps)
        if (st.type == "cz") { st.params["phi"] = v; st.params.erase("g"); found = true; }
      if (!found)
        throw InvalidArgumentError("sweep: phi sweep needs a cz step");
    }
    LogicalChannel ch = extract_logical_channel(spec, compile_program(p, spec));
    LatticeState lat = build_bsl(spec);
    double nv =
        nullifier_variances(lat.state, ideal_bsl_adjacency(spec)).maxCoeff();
    char line[160];
    std::snprintf(line, sizeof line, "%s,%.17g,%.17g,%.17g\n", param.c_str(), v,
                  ch.residual, nv);
    csv += line;
    std::cerr << param << "=" << v << " residual=" << ch.residual
              << " nullifier=" << nv << "\n";
  }
  write_file(out_csv, csv);
  std::cout << json{{"points", values.size()}, {"out", out_csv}}.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bilayer-square-lattice MBQC simulator"};
  app.require_subcommand(1);

  std::string spec_file, out_file, dot_file;
  auto* build = app.add_subcommand("build", "build a lattice from a spec file");
  build->add_option("spec", spec_file, "LatticeSpec JSON file")->required();
  build->add_option("out", out_file, "output state JSON file")->required();
  build->add_option("--export-dot", dot_file, "also write a DOT graph");

  std::string state_file, program_file;
  std::string transcript_file = "transcript.jsonl";
  std::string final_file = "final_state.json";
  uint64_t seed_val = 0;
  bool forced_zero = false;
  auto* run = app.add_subcommand("run", "run a program on a built lattice");
  run->add_option("state", state_file, "built lattice JSON file")->required();
  run->add_option("program", program_file, "program JSON file")->required();
  auto* seed_opt = run->add_option("--seed", seed_val, "RNG seed");
  run->add_flag("--forced-zero", forced_zero, "force all outcomes to zero");
  run->add_option("--transcript", transcript_file, "transcript output path");
  run->add_option("--final-state", final_file, "final state output path");

  std::string suite;
  double r_val = 0.0, tol_val = 0.0;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required();
  auto* r_opt = verify->add_option("--r", r_val, "squeezing override");
  auto* tol_opt = verify->add_option("--tolerance", tol_val, "tolerance override");

  std::string param, sweep_program, sweep_csv;
  std::vector<double> values;
  double sweep_r = 5.0;
  auto* sweep = app.add_subcommand("sweep", "sweep a parameter to CSV");
  sweep->add_option("param", param, "r or phi")->required();
  sweep->add_option("program", sweep_program, "program JSON file")->required();
  sweep->add_option("out", sweep_csv, "output CSV path")->required();
  sweep->add_option("--values", values, "parameter values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--r", sweep_r, "fixed r for phi sweeps");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(spec_file, out_file, dot_file);
    if (run->parsed())
      return cmd_run(state_file, program_file,
                     seed_opt->count() ? std::optional<uint64_t>(seed_val)
                                       : std::nullopt,
                     forced_zero, transcript_file, final_file);
    if (verify->parsed())
      return cmd_verify(suite,
                        r_opt->count() ? std::optional<double>(r_val)
                                       : std::nullopt,
                        tol_opt->count() ? std::optional<double>(tol_val)
                                         : std::nullopt);
    if (sweep->parsed())
      return cmd_sweep(param, values, sweep_program, sweep_csv, sweep_r);
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return 3;
  } catch (const SimError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
