// SPDX-License-Identifier: MIT
//
// Symplectic gate library: phase rotation R, squeezer S, 50:50 beamsplitter B,
// controlled-Z, two-mode squeezer, the composite V-gate
// V(tj,tk) = R(t+) S(tan t-) R(t+), the outcome displacement D(alpha), and the
// finite-squeezing noise map N(r) = exp(-eps q^2/2) exp(-eps p^2/(2 t^2)) S(1/t)
// with t = tanh 2r, eps = sech 2r.

#pragma once

#include <map>
#include <string>

#include "bslsim/gaussian.hpp"

namespace bslsim {

struct GateSpec {
  std::string kind;  // rotation | squeeze | beamsplitter | cz | displacement | v_gate
  std::vector<int> modes;
  std::map<std::string, double> params;
};

// Single mode, acts on (q,p) as [[cos, -sin],[sin, cos]].
Symplectic rotation_symplectic(double theta);

// q -> s q, p -> p / s, valid for all real s != 0 (s < 0 folds in the pi
// rotation of the optical definition).
Symplectic squeeze_symplectic(double s);

// Canonical two-mode 50:50 beamsplitter, first listed mode i, second j:
//   q_i -> (q_i - q_j)/sqrt2,  q_j -> (q_i + q_j)/sqrt2   (same for p).
// Mode assignment is supplied through the `modes` list of apply_gaussian.
Symplectic beamsplitter_symplectic();
Symplectic beamsplitter_symplectic_inverse();

// q's unchanged, p_i += g q_j, p_j += g q_i.
Symplectic cz_symplectic(double g);

// Two-mode squeezer: q1 -> ch q1 + sh q2, p1 -> ch p1 - sh p2 (and 1<->2).
Symplectic tms_symplectic(double r);

// Throws DegenerateAngleError when |sin(tj - tk)| < 1e-9.
Symplectic v_gate_symplectic(double theta_j, double theta_k);

// alpha = (-i e^{i tk} mj - i e^{i tj} mk) / sin(tj - tk).
cdouble displacement_from_outcomes(double mj, double mk, double theta_j,
                                   double theta_k);

// D(alpha) = exp(alpha a^dag - alpha^* a), a = (q + ip)/sqrt2:
// mean shift (sqrt2 Re alpha, sqrt2 Im alpha).
Vec displacement_mean_shift(cdouble alpha);

// Multiply the wavefunction by exp(-kappa q_m^2 / 2): Z_mm += i kappa.
GraphState multiply_gaussian_q(const GraphState& state, int mode, double kappa);

// Convolve the wavefunction in q_m with a Gaussian kernel of its p-quadrature
// counterpart exp(-kappa p_m^2 / 2):
//   Z -> Z - (Z e_m e_m^T Z) / (Z_mm + i/kappa),  rank-1 on the carrier c too.
GraphState convolve_gaussian_p(const GraphState& state, int mode, double kappa);

// N(r) applied to one mode; r > 0.
GraphState apply_noise_map(const GraphState& state, int mode, double r);

// V(tj,tk), then D(alpha(mj,mk,tj,tk)), then N(r).
GraphState noisy_v_map(const GraphState& state, int mode, double r, double mj,
                       double mk, double theta_j, double theta_k);

// Build a gate from its JSON-level description (embedded into n modes for
// multi-mode kinds; "displacement" has no symplectic and throws).
Symplectic gate_from_spec(const GateSpec& spec);

}  // namespace bslsim
