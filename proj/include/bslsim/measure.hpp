// SPDX-License-Identifier: MIT
//
// Exact homodyne measurement on Gaussian pure states.
//
// Measuring p(theta) = sin(theta) q + cos(theta) p on mode m with outcome s
// updates the graph by the closed-form rank-1 rule (the composition "rotate
// p(theta) onto q, then restrict the wavefunction", evaluated analytically):
//
//   D  = Z_mm cos(theta) + sin(theta)
//   Z' = Z_AA - (cos(theta)/D) Z_Am Z_mA
//   c' = c_A - Z_Am (c_m cos(theta) - s) / D,    c = pbar - Z qbar
//
// theta = pi/2 (a q measurement) reduces to plain row/column deletion.  This
// path stays exact in the highly squeezed regime; the covariance-level
// Schur-complement update is kept as an independent cross-validation oracle.

#pragma once

#include <map>
#include <optional>
#include <random>

#include "bslsim/gaussian.hpp"
#include "bslsim/lattice.hpp"

namespace bslsim {

struct MeasurementRecord {
  std::string mode;  // label string, or "#k" for a flat index
  double theta = 0.0;
  double outcome = 0.0;
  bool forced = true;
  std::optional<uint64_t> seed;
};

struct MeasureResult {
  double outcome = 0.0;
  GraphState state;           // one fewer mode
  std::vector<int> index_map; // old mode index -> new index, -1 for measured
};

// Marginal (mean, variance) of p(theta) on one mode.
std::pair<double, double> homodyne_marginal(const GraphState& state, int mode,
                                            double theta);

MeasureResult measure_homodyne(const GraphState& state, int mode, double theta,
                               std::optional<double> forced_outcome,
                               std::mt19937_64* rng = nullptr);

MeasureResult measure_q(const GraphState& state, int mode,
                        std::optional<double> forced_outcome,
                        std::mt19937_64* rng = nullptr);

// Covariance-route oracle (Schur-complement conditioning); forced outcome only.
GraphState measure_homodyne_cov(const GraphState& state, int mode, double theta,
                                double outcome);

// --- macronode-level operations on the lattice ------------------------------

struct MacronodeOutcome {
  double out_Z = 0.0;  // outcome of the Z-polarized physical mode
  double out_Y = 0.0;
};

// Homodynes the two physical modes of macronode (time_bin, m): Z mode at
// theta_Z, Y mode at theta_Y.  Removes both modes and their labels.
MacronodeOutcome measure_macronode(
    LatticeState& lat, int time_bin, int m, double theta_Z, double theta_Y,
    std::optional<std::pair<double, double>> forced_zy = std::make_pair(0.0, 0.0),
    std::mt19937_64* rng = nullptr,
    std::vector<MeasurementRecord>* transcript = nullptr);

// Sum/difference post-processing matching the logical (beamsplitter) basis:
// returns (sum, difference)/sqrt2 of (out_Z, out_Y).
std::pair<double, double> macronode_sum_diff(const MacronodeOutcome& o);

// Rotate a macronode into its logical basis in place (inverse beamsplitter on
// [Z, Y]); afterwards the Y slot carries the through-going logical mode.
void decompose_macronode(LatticeState& lat, int time_bin, int m);

// Measure the listed control macronodes with forced zero outcomes.
// assignment: (time_bin, row) -> (theta_Z, theta_Y).  Angles with singular
// cotangent are rejected.
void premeasure_controls(
    LatticeState& lat,
    const std::map<std::pair<int, int>, std::pair<double, double>>& assignment);

// Premeasurement edge/loop weights from a control assignment, infinite-squeezing
// limit: f_i = (cot thZ - cot thY)/4 and c_i = cot thZ + cot thY.
double premeasure_f(double theta_Z, double theta_Y);
double premeasure_c(double theta_Z, double theta_Y);

}  // namespace bslsim
