// SPDX-License-Identifier: MIT
//
// Bilayer-square-lattice construction.
//
// The optical pipeline: (a) a layer of two-mode-squeezed pairs between
// adjacent macronode rows (m, m+1), polarizations (Y, Z); (b) a balanced
// beamsplitter inside every macronode; (c) a one-time-bin delay of every
// odd-row Z mode (pure relabeling, with padding at the stream boundaries);
// (d) a second beamsplitter at every odd macronode; (e) pi/2 phase delays on
// one frequency parity, converting the H-graph-form state into the cluster
// state.  Stages (a)-(d) are "H-frame" states; `converted_view` applies the
// stage-(e) rotation so edge weights can be read in the cluster frame.
//
// build_bsl() produces the final state directly in the converted frame: the
// pi/2 delays commute with the beamsplitter stages, so the build reduces to
// closed-form cluster pairs (loops i sech2r, edge tanh2r) followed by
// orthogonal beamsplitters only.  This path is exact at any squeezing, while
// the literal staged route loses precision at large r; the two are checked
// against each other at moderate r.

#pragma once

#include <compare>
#include <optional>

#include "bslsim/gaussian.hpp"

namespace bslsim {

enum class Pol : int { Y = 0, Z = 1 };

struct LatticeSpec {
  int num_freq_pairs = 2;   // macronode rows per time bin (M)
  int num_time_bins = 2;    // T
  double r = 1.0;           // squeezing parameter
  std::string parity = "even";  // frequency parity receiving the pi/2 delays

  void check() const;
  double t() const { return std::tanh(2.0 * r); }
  double eps() const { return 1.0 / std::cosh(2.0 * r); }
  int conv_parity() const { return parity == "odd" ? 1 : 0; }
};

struct ModeLabel {
  int time_bin = 0;
  int m = 0;
  Pol pol = Pol::Y;

  auto operator<=>(const ModeLabel&) const = default;
  std::string str() const;  // "t{bin}:m{m}:{Y|Z}"
};

// Alternating-sign relabeling of the frequency index.
int node_index(int n_freq);

struct LatticeState {
  GraphState state;
  std::vector<ModeLabel> labels;  // storage position -> label, kept sorted
  LatticeSpec spec;

  int num_modes() const { return state.num_modes(); }
  // -1 when the label is absent (never existed or already measured).
  int index_of(const ModeLabel& lab) const;
  int require(const ModeLabel& lab) const;  // throws on absence
  void erase_mode(int index);               // drop label after a measurement
};

// Pipeline stages.  Pre-delay pad labels: time_bin -1 (Z pads that delay into
// bin 0) and time_bin T (Y partners of the modes delayed out of range).
LatticeState build_epr_layer(const LatticeSpec& spec);
void apply_polarization_rotation(LatticeState& lat);
void apply_delay_relabel(LatticeState& lat);
void apply_final_bs(LatticeState& lat);
void apply_parity_phase_delays(LatticeState& lat);

LatticeState build_bsl(const LatticeSpec& spec);         // direct, stable
LatticeState build_bsl_staged(const LatticeSpec& spec);  // literal pipeline
// Torus-wrapped variant (frequency ring, cyclic time): no pads; used for the
// self-inverse and nullifier-equality checks.
LatticeState build_bsl_torus(const LatticeSpec& spec);

// Stage-(e) rotation applied to a copy; lets tests read H-frame intermediate
// stages in the cluster frame (on the stage-(d) state it completes the build).
GraphState converted_view(const LatticeState& lat);

// Infinite-squeezing adjacency (entries 0, +-2^{-3/2}) with the simulated
// pipeline's sign assignment: extracted from a reference build and rounded.
Mat ideal_bsl_adjacency(const LatticeSpec& spec, bool torus = false);

// Expected graph after q-measuring every Y mode: the square lattice on the
// surviving Z modes.  Returns (label pair -> signed coefficient of tanh2r).
struct SquareEdge {
  ModeLabel a, b;
  double weight;  // in units of tanh2r
};
std::vector<SquareEdge> square_lattice_edges(const LatticeSpec& spec);

// Sorted label set of the finished lattice (post-delay), pads included.
std::vector<ModeLabel> final_labels(const LatticeSpec& spec);

// Variances of the nullifiers p - A q for a given ideal adjacency A.
Vec nullifier_variances(const GraphState& state, const Mat& A);

}  // namespace bslsim
