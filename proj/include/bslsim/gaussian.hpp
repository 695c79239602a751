// SPDX-License-Identifier: MIT
//
// Gaussian pure states as complex-weighted graphs.
//
// An N-mode Gaussian pure state is represented (up to global phase) by a
// complex symmetric matrix Z = V + iU with U positive definite, via the
// position wavefunction psi(q) ~ exp[(i/2) q^T Z q], plus a real phase-space
// mean vector ordered (q_1..q_N, p_1..p_N).  A Gaussian unitary with
// symplectic Heisenberg action S = [[A,B],[C,D]] maps
//
//     Z  ->  (C + D Z)(A + B Z)^{-1},     mean -> S mean.
//
// Displacements are carried in `mean`; internally several routines use the
// complex carrier c = pbar - Z qbar, which evolves linearly under the graph
// rule and stays well conditioned in near-singular squeezing regimes where
// qbar/pbar themselves are poorly determined.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bslsim {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using cdouble = std::complex<double>;

// Condition-number guard for matrix solves that have a physical singular
// limit (projective measurements, impure covariances).
inline constexpr double kConditionLimit = 1e12;

struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IllConditionedError : SimError {
  using SimError::SimError;
};
struct PurityError : SimError {
  using SimError::SimError;
};
struct DimensionError : SimError {
  using SimError::SimError;
};
struct DegenerateAngleError : SimError {
  using SimError::SimError;
};
struct InvalidArgumentError : SimError {
  using SimError::SimError;
};

struct GraphState {
  CMat Z;    // N x N complex symmetric, Im(Z) > 0
  Vec mean;  // 2N, ordered (q_1..q_N, p_1..p_N)

  int num_modes() const { return static_cast<int>(Z.rows()); }
};

struct CovarianceState {
  Mat sigma;  // 2N x 2N real symmetric positive definite
  Vec mean;   // 2N

  int num_modes() const { return static_cast<int>(sigma.rows()) / 2; }
};

// 2k x 2k real symplectic in (q...,p...) block ordering.
struct Symplectic {
  Mat S;

  int num_modes() const { return static_cast<int>(S.rows()) / 2; }
  Mat A() const { int n = num_modes(); return S.topLeftCorner(n, n); }
  Mat B() const { int n = num_modes(); return S.topRightCorner(n, n); }
  Mat C() const { int n = num_modes(); return S.bottomLeftCorner(n, n); }
  Mat D() const { int n = num_modes(); return S.bottomRightCorner(n, n); }
};

Mat omega(int n);
// max |S Omega S^T - Omega|
double symplectic_defect(const Mat& S);
bool is_symplectic(const Mat& S, double tol = 1e-10);

GraphState vacuum_state(int n);

// Empty list iff the state satisfies all GraphState invariants.
std::vector<std::string> validate(const GraphState& state);

CovarianceState to_covariance(const GraphState& state);
GraphState from_covariance(const CovarianceState& cov);

// Embed a k-mode symplectic acting on `modes` into an n-mode identity.
Symplectic embed(const Symplectic& small, const std::vector<int>& modes, int n);

// Exact graph-rule update.  `transform` acts on the listed modes (identity
// elsewhere).  Throws IllConditionedError when (A + B Z) is singular to the
// guard threshold, which signals a projective-measurement-like limit.
GraphState apply_gaussian(const GraphState& state, const Symplectic& transform,
                          const std::vector<int>& modes);

double wigner_at(const GraphState& state, const Vec& x);

GraphState tensor(const GraphState& a, const GraphState& b);

// max(||Z_a - Z_b||_inf, ||mean_a - mean_b||_inf)
double graph_distance(const GraphState& a, const GraphState& b);

// --- displacement-carrier helpers -----------------------------------------
//
// c = pbar - Z qbar.  mean -> c is a matrix-vector product (always stable);
// c -> mean solves U qbar = -Im c, which is backward stable, so the pair may
// be round-tripped freely even when U is nearly singular.

CVec mean_to_c(const GraphState& state);
Vec c_to_mean(const CMat& Z, const CVec& c);

// Mean restricted to a block of modes whose rows to the rest of Z are
// (numerically) zero: solves only on the block, avoiding the global
// ill-conditioning of highly squeezed lattice remainders.
Vec mean_block(const GraphState& state, const std::vector<int>& modes);

void symmetrize(CMat& Z);

}  // namespace bslsim
