// SPDX-License-Identifier: MIT
//
// Serialization: GraphState / LatticeSpec / GateSpec / Program JSON,
// measurement transcripts (JSON lines), channel reports, DOT graph export.

#pragma once

#include <string>

#include "bslsim/gates.hpp"
#include "bslsim/lattice.hpp"
#include "bslsim/measure.hpp"
#include "bslsim/protocol.hpp"

namespace bslsim {

// {"n": int, "z_re": [...], "z_im": [...], "mean": [...]}, row-major,
// bit-faithful round trip at double precision.
std::string graph_state_to_json(const GraphState& state);
GraphState graph_state_from_json(const std::string& text);

// GraphState JSON with an embedded "lattice" key (the LatticeSpec) so a built
// lattice can be reloaded with its labels reattached via final_labels().
std::string lattice_state_to_json(const LatticeState& lat);
LatticeState lattice_state_from_json(const std::string& text);

// {"freq_pairs": int, "time_bins": int, "r": float, "parity": "odd"|"even"}
std::string lattice_spec_to_json(const LatticeSpec& spec);
LatticeSpec lattice_spec_from_json(const std::string& text);

// {"kind": string, "modes": [ints], "params": {name: number}}
std::string gate_spec_to_json(const GateSpec& spec);
GateSpec gate_spec_from_json(const std::string& text);

// {"wires": int, "steps": [{"type": ..., "wire": int or [int,int],
//  "params": {...}}]}
Program program_from_json(const std::string& text);
std::string program_to_json(const Program& program);

// One record per line: {"mode","theta","outcome","forced","seed"?}
std::string transcript_to_jsonl(const std::vector<MeasurementRecord>& records);
std::vector<MeasurementRecord> transcript_from_jsonl(const std::string& text);

// {"S": row-major 4k^2 array, "k", "d", "noise_excess", "residual", ...}
std::string channel_report_to_json(const LogicalChannel& ch);

// Undirected DOT graph: node ids "t{bin}:m{index}:{Y|Z}", edge attribute
// weight = Re Z_ij; edges below `threshold` in magnitude are omitted.
std::string dot_export(const LatticeState& lat, double threshold = 1e-9);

std::string read_file(const std::string& path);     // throws SimError
void write_file(const std::string& path, const std::string& content);

}  // namespace bslsim
