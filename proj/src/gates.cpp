// SPDX-License-Identifier: MIT

#include "bslsim/gates.hpp"

#include <cmath>

namespace bslsim {

namespace {

Mat rot2(double theta) {
  Mat R(2, 2);
  R << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return R;
}

}  // namespace

Symplectic rotation_symplectic(double theta) {
  if (!std::isfinite(theta))
    throw InvalidArgumentError("rotation_symplectic: non-finite angle");
  return Symplectic{rot2(theta)};
}

Symplectic squeeze_symplectic(double s) {
  if (s == 0.0 || !std::isfinite(s))
    throw InvalidArgumentError("squeeze_symplectic: s must be real nonzero");
  Mat S = Mat::Zero(2, 2);
  S(0, 0) = s;
  S(1, 1) = 1.0 / s;
  return Symplectic{S};
}

Symplectic beamsplitter_symplectic() {
  Mat S = Mat::Zero(4, 4);
  S.topLeftCorner(2, 2) = rot2(M_PI / 4.0);
  S.bottomRightCorner(2, 2) = rot2(M_PI / 4.0);
  return Symplectic{S};
}

Symplectic beamsplitter_symplectic_inverse() {
  Mat S = Mat::Zero(4, 4);
  S.topLeftCorner(2, 2) = rot2(-M_PI / 4.0);
  S.bottomRightCorner(2, 2) = rot2(-M_PI / 4.0);
  return Symplectic{S};
}

Symplectic cz_symplectic(double g) {
  if (!std::isfinite(g)) throw InvalidArgumentError("cz_symplectic: g not finite");
  Mat S = Mat::Identity(4, 4);
  S(2, 1) = g;
  S(3, 0) = g;
  return Symplectic{S};
}

Symplectic tms_symplectic(double r) {
  double ch = std::cosh(r), sh = std::sinh(r);
  Mat S = Mat::Zero(4, 4);
  S(0, 0) = ch; S(0, 1) = sh;
  S(1, 0) = sh; S(1, 1) = ch;
  S(2, 2) = ch; S(2, 3) = -sh;
  S(3, 2) = -sh; S(3, 3) = ch;
  return Symplectic{S};
}

Symplectic v_gate_symplectic(double theta_j, double theta_k) {
  if (std::abs(std::sin(theta_j - theta_k)) < 1e-9)
    throw DegenerateAngleError(
        "v_gate_symplectic: angles degenerate mod pi (projective limit)");
  double tp = 0.5 * (theta_j + theta_k);
  double tm = 0.5 * (theta_j - theta_k);
  Mat S = rot2(tp) * squeeze_symplectic(std::tan(tm)).S * rot2(tp);
  return Symplectic{S};
}

cdouble displacement_from_outcomes(double mj, double mk, double theta_j,
                                   double theta_k) {
  double s = std::sin(theta_j - theta_k);
  if (std::abs(s) < 1e-9)
    throw DegenerateAngleError("displacement_from_outcomes: degenerate angles");
  cdouble i(0.0, 1.0);
  return (-i * std::exp(i * theta_k) * mj - i * std::exp(i * theta_j) * mk) / s;
}

Vec displacement_mean_shift(cdouble alpha) {
  Vec d(2);
  d << std::sqrt(2.0) * alpha.real(), std::sqrt(2.0) * alpha.imag();
  return d;
}

GraphState multiply_gaussian_q(const GraphState& state, int mode, double kappa) {
  // exp(i/2 q^T Z q + i c.q) * exp(-kappa q_m^2/2): Z_mm gains i kappa while
  // the linear coefficient c is untouched, so the mean must be recomputed.
  CVec c = mean_to_c(state);
  GraphState out;
  out.Z = state.Z;
  out.Z(mode, mode) += cdouble(0.0, kappa);
  out.mean = c_to_mean(out.Z, c);
  return out;
}

GraphState convolve_gaussian_p(const GraphState& state, int mode, double kappa) {
  // Gaussian convolution in q_m; rank-1 graph update with denominator
  // Z_mm + i/kappa (derived by completing the square in the convolution
  // integral and checked against numerical quadrature of the wavefunction).
  CVec c = mean_to_c(state);
  cdouble d = state.Z(mode, mode) + cdouble(0.0, 1.0 / kappa);
  CVec zm = state.Z.col(mode);
  GraphState out;
  out.Z = state.Z - (zm * zm.transpose()) / d;
  symmetrize(out.Z);
  CVec cp = c - zm * (c(mode) / d);
  out.mean = c_to_mean(out.Z, cp);
  return out;
}

GraphState apply_noise_map(const GraphState& state, int mode, double r) {
  if (!(r > 0.0)) throw InvalidArgumentError("apply_noise_map: r must be > 0");
  double t = std::tanh(2.0 * r);
  double eps = 1.0 / std::cosh(2.0 * r);
  GraphState out = apply_gaussian(state, squeeze_symplectic(1.0 / t), {mode});
  out = convolve_gaussian_p(out, mode, eps / (t * t));
  out = multiply_gaussian_q(out, mode, eps);
  return out;
}

GraphState noisy_v_map(const GraphState& state, int mode, double r, double mj,
                       double mk, double theta_j, double theta_k) {
  GraphState out =
      apply_gaussian(state, v_gate_symplectic(theta_j, theta_k), {mode});
  Vec shift = displacement_mean_shift(
      displacement_from_outcomes(mj, mk, theta_j, theta_k));
  int n = out.num_modes();
  out.mean(mode) += shift(0);
  out.mean(n + mode) += shift(1);
  return apply_noise_map(out, mode, r);
}

Symplectic gate_from_spec(const GateSpec& spec) {
  auto param = [&](const std::string& name) {
    auto it = spec.params.find(name);
    if (it == spec.params.end())
      throw InvalidArgumentError("gate_from_spec: missing param " + name);
    return it->second;
  };
  if (spec.kind == "rotation") return rotation_symplectic(param("theta"));
  if (spec.kind == "squeeze") return squeeze_symplectic(param("s"));
  if (spec.kind == "beamsplitter") return beamsplitter_symplectic();
  if (spec.kind == "cz") return cz_symplectic(param("g"));
  if (spec.kind == "v_gate")
    return v_gate_symplectic(param("theta_j"), param("theta_k"));
  if (spec.kind == "tms") return tms_symplectic(param("r"));
  throw InvalidArgumentError("gate_from_spec: unknown kind " + spec.kind);
}

}  // namespace bslsim
