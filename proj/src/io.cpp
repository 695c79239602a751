// SPDX-License-Identifier: MIT

#include "bslsim/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bslsim {

using nlohmann::json;

namespace {

json graph_state_json(const GraphState& state) {
  int n = state.num_modes();
  std::vector<double> zre, zim, mean;
  zre.reserve(n * n);
  zim.reserve(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      zre.push_back(state.Z(i, j).real());
      zim.push_back(state.Z(i, j).imag());
    }
  }
  for (int i = 0; i < 2 * n; ++i) mean.push_back(state.mean(i));
  return json{{"n", n}, {"z_re", zre}, {"z_im", zim}, {"mean", mean}};
}

GraphState graph_state_parse(const json& j) {
  int n = j.at("n").get<int>();
  auto zre = j.at("z_re").get<std::vector<double>>();
  auto zim = j.at("z_im").get<std::vector<double>>();
  auto mean = j.at("mean").get<std::vector<double>>();
  if (static_cast<int>(zre.size()) != n * n ||
      static_cast<int>(zim.size()) != n * n ||
      static_cast<int>(mean.size()) != 2 * n)
    throw DimensionError("graph state JSON: array lengths inconsistent with n");
  GraphState st;
  st.Z = CMat(n, n);
  st.mean = Vec(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j2 = 0; j2 < n; ++j2)
      st.Z(i, j2) = cdouble(zre[i * n + j2], zim[i * n + j2]);
  for (int i = 0; i < 2 * n; ++i) st.mean(i) = mean[i];
  return st;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidArgumentError("malformed JSON input");
  return j;
}

// Runs a parse body, converting library type/lookup errors into input errors.
template <typename F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw InvalidArgumentError(std::string(what) + ": " + e.what());
  }
}

json spec_json(const LatticeSpec& spec) {
  return json{{"freq_pairs", spec.num_freq_pairs},
              {"time_bins", spec.num_time_bins},
              {"r", spec.r},
              {"parity", spec.parity}};
}

LatticeSpec spec_parse(const json& j) {
  LatticeSpec spec;
  spec.num_freq_pairs = j.at("freq_pairs").get<int>();
  spec.num_time_bins = j.at("time_bins").get<int>();
  spec.r = j.at("r").get<double>();
  spec.parity = j.value("parity", "even");
  spec.check();
  return spec;
}

}  // namespace

std::string graph_state_to_json(const GraphState& state) {
  return graph_state_json(state).dump();
}

GraphState graph_state_from_json(const std::string& text) {
  return guarded("graph state JSON",
                 [&] { return graph_state_parse(parse_text(text)); });
}

std::string lattice_state_to_json(const LatticeState& lat) {
  json j = graph_state_json(lat.state);
  j["lattice"] = spec_json(lat.spec);
  return j.dump();
}

LatticeState lattice_state_from_json(const std::string& text) {
  return guarded("lattice state JSON", [&] {
  json j = parse_text(text);
  if (!j.contains("lattice"))
    throw InvalidArgumentError("lattice state JSON: missing \"lattice\" key");
  LatticeState lat;
  lat.spec = spec_parse(j.at("lattice"));
  lat.state = graph_state_parse(j);
  lat.labels = final_labels(lat.spec);
  if (static_cast<int>(lat.labels.size()) != lat.num_modes())
    throw DimensionError("lattice state JSON: mode count does not match spec");
  return lat;
  });
}

std::string lattice_spec_to_json(const LatticeSpec& spec) {
  return spec_json(spec).dump();
}

LatticeSpec lattice_spec_from_json(const std::string& text) {
  return guarded("lattice spec JSON",
                 [&] { return spec_parse(parse_text(text)); });
}

std::string gate_spec_to_json(const GateSpec& spec) {
  return json{{"kind", spec.kind}, {"modes", spec.modes}, {"params", spec.params}}
      .dump();
}

GateSpec gate_spec_from_json(const std::string& text) {
  return guarded("gate spec JSON", [&] {
  json j = parse_text(text);
  GateSpec g;
  g.kind = j.at("kind").get<std::string>();
  g.modes = j.at("modes").get<std::vector<int>>();
  if (j.contains("params"))
    g.params = j.at("params").get<std::map<std::string, double>>();
  return g;
  });
}

Program program_from_json(const std::string& text) {
  return guarded("program JSON", [&] {
  json j = parse_text(text);
  Program p;
  p.wires = j.at("wires").get<int>();
  for (const json& js : j.value("steps", json::array())) {
    Program::Step st;
    st.type = js.at("type").get<std::string>();
    const json& w = js.at("wire");
    if (w.is_array())
      st.wire = w.get<std::vector<int>>();
    else
      st.wire = {w.get<int>()};
    if (js.contains("params"))
      st.params = js.at("params").get<std::map<std::string, double>>();
    p.steps.push_back(std::move(st));
  }
  return p;
  });
}

std::string program_to_json(const Program& program) {
  json steps = json::array();
  for (const Program::Step& st : program.steps) {
    json js{{"type", st.type}, {"params", st.params}};
    if (st.wire.size() == 1)
      js["wire"] = st.wire[0];
    else
      js["wire"] = st.wire;
    steps.push_back(std::move(js));
  }
  return json{{"wires", program.wires}, {"steps", steps}}.dump();
}

std::string transcript_to_jsonl(const std::vector<MeasurementRecord>& records) {
  std::ostringstream os;
  for (const MeasurementRecord& r : records) {
    json j{{"mode", r.mode},
           {"theta", r.theta},
           {"outcome", r.outcome},
           {"forced", r.forced}};
    if (r.seed) j["seed"] = *r.seed;
    os << j.dump() << "\n";
  }
  return os.str();
}

std::vector<MeasurementRecord> transcript_from_jsonl(const std::string& text) {
  return guarded("transcript JSONL", [&] {
  std::vector<MeasurementRecord> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = parse_text(line);
    MeasurementRecord r;
    r.mode = j.at("mode").get<std::string>();
    r.theta = j.at("theta").get<double>();
    r.outcome = j.at("outcome").get<double>();
    r.forced = j.at("forced").get<bool>();
    if (j.contains("seed")) r.seed = j.at("seed").get<uint64_t>();
    out.push_back(std::move(r));
  }
  return out;
  });
}

std::string channel_report_to_json(const LogicalChannel& ch) {
  int dim = static_cast<int>(ch.S.rows());
  std::vector<double> s, noise, d;
  for (int i = 0; i < dim; ++i) {
    d.push_back(ch.d(i));
    for (int j = 0; j < dim; ++j) {
      s.push_back(ch.S(i, j));
      noise.push_back(ch.noise_excess(i, j));
    }
  }
  return json{{"k", dim / 2},
              {"S", s},
              {"d", d},
              {"noise_excess", noise},
              {"noise_excess_max", ch.noise_excess.cwiseAbs().maxCoeff()},
              {"residual", ch.residual}}
      .dump();
}

std::string dot_export(const LatticeState& lat, double threshold) {
  std::ostringstream os;
  os << "graph bsl {\n";
  int n = lat.num_modes();
  for (int i = 0; i < n; ++i) os << "  \"" << lat.labels[i].str() << "\";\n";
  os.precision(17);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(lat.state.Z(i, j)) < threshold) continue;
      os << "  \"" << lat.labels[i].str() << "\" -- \"" << lat.labels[j].str()
         << "\" [weight=" << lat.state.Z(i, j).real() << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SimError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SimError("cannot write file: " + path);
  out << content;
}

}  // namespace bslsim
