// SPDX-License-Identifier: MIT
//
// Verification suites: each suite evaluates a family of identities or
// convergence properties and reports one CheckResult per check.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bslsim/lattice.hpp"

namespace bslsim {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Suites: graph-calculus, bsl-weights, v-gate, cz, edge-weights-9-11,
// appendix-c, appendix-d, noise.  `r` and `tol` override suite defaults where
// meaningful.  Unknown suite -> InvalidArgumentError.
std::vector<CheckResult> run_suite(const std::string& name,
                                   std::optional<double> r = std::nullopt,
                                   std::optional<double> tol = std::nullopt);

std::vector<std::string> suite_names();

// --- oracles shared with the tests -----------------------------------------

// Two-mode cluster pair: Z = i sech2r I + tanh2r sigma_x.
GraphState cluster_pair(double r);

// One elementary dual-rail teleportation of `mode`: append a cluster pair,
// beamsplit the input onto its first half, homodyne the two inputs at
// (theta_j, theta_k) with outcomes (mj, mk).  The teleported mode keeps its
// position; the channel equals N(r) D(alpha_16) V(theta_j, theta_k).
GraphState elementary_teleport(const GraphState& state, int mode, double r,
                               double theta_j, double theta_k, double mj,
                               double mk);

// Mean-response symplectic of a two-mode lattice step (window on wire rows
// 1 and 3 of a 6-row lattice), logical order (upper, lower) = (3, 1).
Mat lattice_two_mode_S(const LatticeSpec& spec,
                       const std::array<double, 10>& angles,
                       GraphState* zero_output = nullptr);

// Same channel from the literal dual-rail picture: two consecutive
// elementary teleports per carrier with a beamsplitter between the carriers
// after each round.
Mat dual_rail_two_mode_S(double r, const std::array<double, 10>& angles,
                         GraphState* zero_output = nullptr);

}  // namespace bslsim
