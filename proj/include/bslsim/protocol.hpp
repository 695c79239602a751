// SPDX-License-Identifier: MIT
//
// Measurement-based computation on the BSL.
//
// Conventions (fixed by finite-squeezing exact-match tests):
//  * Odd lattice rows are wire macronodes (they carry the delayed modes),
//    even rows are controls.  A frequency-origin shift maps this onto the
//    even-wire labeling convention.
//  * Control rows alternate sign vertically; a wire transmits only when its
//    two adjacent control rows carry opposite signs.  The per-step logical
//    channel on a wire w is
//        N(r) V(-s pi/4, s pi/4) N(r) V(th_wZ, th_wY),
//    with s the sign of the control row *below* the wire (row w-1).
//  * Physically, the wire's Z mode is measured at th_wZ and its Y mode at
//    th_wY + pi; control modes are measured at their stated angles directly.
//  * A two-mode step on wires (a, b) = (lower, upper) uses the five-macronode
//    window (b+1, b, a+1, a, a-1), mapped to the 10-angle vector in that
//    order; the logical gate acts on (upper, lower) and equals
//        B [V(s pi/4, th3Z) (x) V(th3Y, s pi/4)] B
//          [V(th2Z, th2Y) (x) V(th4Z, th4Y)]
//    up to displacement and per-mode noise.

#pragma once

#include <array>
#include <optional>
#include <random>

#include "bslsim/gates.hpp"
#include "bslsim/lattice.hpp"
#include "bslsim/measure.hpp"

namespace bslsim {

struct StepPlan {
  // wire row -> (theta_Z, theta_Y), logical wire angles
  std::map<int, std::pair<double, double>> wire_angles;
  // control row -> (theta_Z, theta_Y), physical angles (pass-throughs use
  // (s pi/4, s pi/4); a CZ center control carries the tunable angle pair)
  std::map<int, std::pair<double, double>> control_angles;
  // control row -> +-1 for pass-through rows (bookkeeping for channel math)
  std::map<int, int> control_signs;
  std::vector<std::pair<int, int>> cz_pairs;  // (lower, upper) wire rows
};

struct AngleSchedule {
  std::vector<int> encoded_wires;  // lattice rows, stored descending
  std::vector<int> readout_wires;  // wires consumed by a projective readout
  std::vector<StepPlan> steps;
  // leftover local rotations per wire at the end of the program (CZ byproduct
  // factors not yet absorbed into a following step)
  std::map<int, Mat> residual_rotations;
};

struct Program {
  int wires = 1;
  struct Step {
    std::string type;  // single | cz | readout | identity
    std::vector<int> wire;
    std::map<std::string, double> params;
  };
  std::vector<Step> steps;
};

struct LogicalChannel {
  Mat S;             // 2k x 2k, logical modes ordered by descending wire row
  Vec d;             // displacement of the zero-input run
  Mat noise_excess;  // Sigma_out - S Sigma_in S^T
  double residual;   // symplectic defect of S
};

struct RunOptions {
  bool forced_zero = true;
  bool controls_forced_zero = false;  // sample wires, force controls to zero
  std::mt19937_64* rng = nullptr;
  std::optional<uint64_t> seed;  // recorded in the transcript
};

struct RunResult {
  std::vector<MeasurementRecord> transcript;
  GraphState final_state;
  std::vector<int> output_modes;   // logical output slots, descending wire row
  std::vector<int> output_wires;   // matching wire rows
  Vec accumulated_displacement;    // exact (paired forced-zero run)
  std::optional<Vec> wire_feedforward;  // analytic per-wire accumulation
  Vec output_mean;                 // mean of the decoded output block
};

// Replace macronode (time_bin, m) content by `input` on the through-going
// logical slot with a squeezed ancilla on the other; requires zero means in
// the neighborhood (fresh lattice).
void encode_input(LatticeState& lat, int time_bin, int m, const GraphState& input);

// Single measurement step on wire w at bin `time_bin`; measures the wire
// macronode and both adjacent control macronodes.  control_row_signs must
// assign opposite signs to rows w-1 and w+1.
std::vector<MeasurementRecord> wire_step(
    LatticeState& lat, int time_bin, int w, double theta_wZ, double theta_wY,
    const std::map<int, int>& control_row_signs,
    std::optional<double> forced = 0.0, std::mt19937_64* rng = nullptr);

// Two-mode step on wires (lower, upper) = (a, a+2); `angles` lists
// (theta_Z, theta_Y) for window macronodes (b+1, b, a+1, a, a-1).
std::vector<MeasurementRecord> two_mode_step(
    LatticeState& lat, int time_bin, std::pair<int, int> wires,
    const std::array<double, 10>& angles, std::optional<double> forced = 0.0,
    std::mt19937_64* rng = nullptr);

// 10-angle measurement vector for a tunable CZ, row_sign = +-1:
// (s pi/4, s pi/4, -s pi/8, 3 s pi/8, s pi/4 + phi, s pi/4 - phi,
//  -s pi/8, 3 s pi/8, s pi/4, s pi/4).
std::array<double, 10> cz_angles(double phi, int row_sign);

// Ideal logical gate of a CZ step on (upper, lower):
// [R(-3 s pi/4) (x) R(s pi/4)] CZ(2 cot phi).
Mat cz_target(double phi, int row_sign);

// Two-V decomposition of a single-mode step pair:
// S(-s2) V(c,d) S(-s1) V(a,b) = target; numerical solve, residual < 1e-8,
// deterministic tie-break by smallest total |tan theta_-|.
struct VDecomposition {
  std::array<double, 4> angles;  // a, b, c, d
  double residual;
};
VDecomposition solve_two_v(const Mat& target, int s1, int s2);

AngleSchedule compile_program(const Program& program, const LatticeSpec& spec);

// Executes a schedule on a fresh lattice; `inputs` maps wire rows to
// single-mode input states (vacuum if absent).
RunResult run_program(const LatticeSpec& spec, const AngleSchedule& schedule,
                      const std::map<int, GraphState>& inputs,
                      const RunOptions& opts);

LogicalChannel extract_logical_channel(const LatticeSpec& spec,
                                       const AngleSchedule& schedule);

// Default vertical sign pattern: +1 for control rows divisible by 4, else -1.
int default_row_sign(int control_row);

}  // namespace bslsim
