// SPDX-License-Identifier: MIT

#include "bslsim/gaussian.hpp"

#include <cmath>

namespace bslsim {

namespace {

double cond_estimate(const CMat& M) {
  Eigen::JacobiSVD<CMat> svd(M);
  double smin = svd.singularValues().minCoeff();
  double smax = svd.singularValues().maxCoeff();
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

double cond_estimate(const Mat& M) {
  Eigen::JacobiSVD<Mat> svd(M);
  double smin = svd.singularValues().minCoeff();
  double smax = svd.singularValues().maxCoeff();
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

}  // namespace

Mat omega(int n) {
  Mat O = Mat::Zero(2 * n, 2 * n);
  O.topRightCorner(n, n) = Mat::Identity(n, n);
  O.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
  return O;
}

double symplectic_defect(const Mat& S) {
  int n = static_cast<int>(S.rows()) / 2;
  Mat O = omega(n);
  return (S * O * S.transpose() - O).cwiseAbs().maxCoeff();
}

bool is_symplectic(const Mat& S, double tol) {
  if (S.rows() != S.cols() || S.rows() % 2 != 0) return false;
  return symplectic_defect(S) < tol;
}

GraphState vacuum_state(int n) {
  if (n < 1) throw InvalidArgumentError("vacuum_state: n must be >= 1");
  GraphState s;
  s.Z = cdouble(0.0, 1.0) * CMat::Identity(n, n);
  s.mean = Vec::Zero(2 * n);
  return s;
}

std::vector<std::string> validate(const GraphState& state) {
  std::vector<std::string> violations;
  int n = state.num_modes();
  if (state.Z.rows() != state.Z.cols()) {
    violations.push_back("Z not square");
    return violations;
  }
  if (state.mean.size() != 2 * n) violations.push_back("mean has wrong length");
  if ((state.Z - state.Z.transpose()).cwiseAbs().maxCoeff() >= 1e-12)
    violations.push_back("Z not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(state.Z.imag());
  if (es.eigenvalues().minCoeff() <= 0.0)
    violations.push_back("U not positive definite");
  if (!state.mean.allFinite()) violations.push_back("mean not finite");
  return violations;
}

CovarianceState to_covariance(const GraphState& state) {
  int n = state.num_modes();
  Mat U = state.Z.imag();
  Mat V = state.Z.real();
  if (cond_estimate(U) > kConditionLimit)
    throw IllConditionedError("to_covariance: U is numerically singular");
  Eigen::LLT<Mat> llt(U);
  Mat Ui = llt.solve(Mat::Identity(n, n));
  CovarianceState cov;
  cov.sigma.resize(2 * n, 2 * n);
  cov.sigma.topLeftCorner(n, n) = 0.5 * Ui;
  cov.sigma.topRightCorner(n, n) = 0.5 * Ui * V;
  cov.sigma.bottomLeftCorner(n, n) = 0.5 * V * Ui;
  cov.sigma.bottomRightCorner(n, n) = 0.5 * (U + V * Ui * V);
  cov.sigma = 0.5 * (cov.sigma + cov.sigma.transpose()).eval();
  cov.mean = state.mean;
  return cov;
}

GraphState from_covariance(const CovarianceState& cov) {
  int n = cov.num_modes();
  // Purity: det(2 Sigma) = 1 for a pure Gaussian state.
  double logdet = 0.0;
  {
    Eigen::PartialPivLU<Mat> lu(2.0 * cov.sigma);
    Mat LU = lu.matrixLU();
    for (int i = 0; i < 2 * n; ++i) logdet += std::log(std::abs(LU(i, i)));
  }
  if (std::abs(logdet) > 1e-6 * 2 * n + 1e-6)
    throw PurityError("from_covariance: covariance is not pure");
  Mat Sqq = cov.sigma.topLeftCorner(n, n);
  Mat Sqp = cov.sigma.topRightCorner(n, n);
  if (cond_estimate(Sqq) > kConditionLimit)
    throw IllConditionedError("from_covariance: q-block singular");
  Eigen::LLT<Mat> llt(Sqq);
  Mat U = 0.5 * llt.solve(Mat::Identity(n, n));
  Mat V = 2.0 * U * Sqp;
  GraphState s;
  s.Z = V.cast<cdouble>() + cdouble(0.0, 1.0) * U.cast<cdouble>();
  symmetrize(s.Z);
  s.mean = cov.mean;
  return s;
}

Symplectic embed(const Symplectic& small, const std::vector<int>& modes, int n) {
  int k = small.num_modes();
  if (static_cast<int>(modes.size()) != k)
    throw DimensionError("embed: mode list does not match transform size");
  Mat S = Mat::Identity(2 * n, 2 * n);
  for (int a = 0; a < k; ++a) {
    int i = modes[a];
    S(i, i) = 0.0;
    S(n + i, n + i) = 0.0;
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      int i = modes[a], j = modes[b];
      S(i, j) = small.S(a, b);
      S(i, n + j) = small.S(a, k + b);
      S(n + i, j) = small.S(k + a, b);
      S(n + i, n + j) = small.S(k + a, k + b);
    }
  }
  return Symplectic{S};
}

GraphState apply_gaussian(const GraphState& state, const Symplectic& transform,
                          const std::vector<int>& modes) {
  int n = state.num_modes();
  int k = transform.num_modes();
  if (static_cast<int>(modes.size()) != k)
    throw DimensionError("apply_gaussian: mode list does not match transform");
  {
    std::vector<int> sorted(modes);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < k; ++i) {
      if (sorted[i] < 0 || sorted[i] >= n)
        throw DimensionError("apply_gaussian: mode index out of range");
      if (i > 0 && sorted[i] == sorted[i - 1])
        throw InvalidArgumentError("apply_gaussian: duplicate mode index");
    }
  }
  if (!is_symplectic(transform.S))
    throw InvalidArgumentError("apply_gaussian: transform is not symplectic");

  Mat a = transform.A(), b = transform.B(), c = transform.C(), d = transform.D();

  // Partitioned graph rule.  With P the touched modes and R the rest, the
  // full update Z' = (C_f + D_f Z)(A_f + B_f Z)^{-1} reduces to
  //   M      = a + b Z_PP                      (k x k)
  //   Z'_PP  = (c + d Z_PP) M^{-1}
  //   Z'_RP  = Z_RP M^{-1}
  //   Z'_PR  = (d - Z'_PP b) Z_PR
  //   Z'_RR  = Z_RR - (Z_RP M^{-1} b) Z_PR
  // which costs O(k N^2) instead of O(N^3).
  CMat Zpp(k, k), Zpr;
  std::vector<int> rest;
  rest.reserve(n - k);
  {
    std::vector<bool> touched(n, false);
    for (int m : modes) touched[m] = true;
    for (int i = 0; i < n; ++i)
      if (!touched[i]) rest.push_back(i);
  }
  int nr = static_cast<int>(rest.size());
  Zpr.resize(k, nr);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) Zpp(i, j) = state.Z(modes[i], modes[j]);
    for (int j = 0; j < nr; ++j) Zpr(i, j) = state.Z(modes[i], rest[j]);
  }

  CMat M = a.cast<cdouble>() + b.cast<cdouble>() * Zpp;
  if (cond_estimate(M) > kConditionLimit)
    throw IllConditionedError(
        "apply_gaussian: (A + B Z) is singular to working precision; "
        "use the measurement module for projective limits");
  Eigen::PartialPivLU<CMat> lu(M);
  // X M = Y  solved as  M^T X^T = Y^T.
  Eigen::PartialPivLU<CMat> luT(CMat(M.transpose()));
  CMat Zpp_new =
      luT.solve(CMat((c.cast<cdouble>() + d.cast<cdouble>() * Zpp).transpose()))
          .transpose();
  bool b_zero = (b.cwiseAbs().maxCoeff() == 0.0);

  CMat Zrp_new;  // nr x k
  if (nr > 0) Zrp_new = luT.solve(CMat(Zpr)).transpose();

  GraphState out;
  out.Z = state.Z;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out.Z(modes[i], modes[j]) = Zpp_new(i, j);
  if (nr > 0) {
    CMat Zpr_new = (d.cast<cdouble>() - Zpp_new * b.cast<cdouble>()) * Zpr;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < nr; ++j) {
        out.Z(modes[i], rest[j]) = Zpr_new(i, j);
        out.Z(rest[j], modes[i]) = Zrp_new(j, i);
      }
    if (!b_zero) {
      CMat corr = (Zrp_new * b.cast<cdouble>()) * Zpr;  // nr x nr
      for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nr; ++j) out.Z(rest[i], rest[j]) -= corr(i, j);
    }
  }
  symmetrize(out.Z);

  out.mean = state.mean;
  Vec qp(2 * k);
  for (int i = 0; i < k; ++i) {
    qp(i) = state.mean(modes[i]);
    qp(k + i) = state.mean(n + modes[i]);
  }
  Vec qp_new = transform.S * qp;
  for (int i = 0; i < k; ++i) {
    out.mean(modes[i]) = qp_new(i);
    out.mean(n + modes[i]) = qp_new(k + i);
  }
  return out;
}

double wigner_at(const GraphState& state, const Vec& x) {
  int n = state.num_modes();
  if (x.size() != 2 * n) throw DimensionError("wigner_at: point has wrong size");
  CovarianceState cov = to_covariance(state);
  Eigen::LLT<Mat> llt(cov.sigma);
  Vec dx = x - cov.mean;
  double quad = dx.dot(llt.solve(dx));
  double logdet = 0.0;
  Mat L = llt.matrixL();
  for (int i = 0; i < 2 * n; ++i) logdet += std::log(L(i, i));
  return std::exp(-0.5 * quad - logdet) * std::pow(2.0 * M_PI, -n);
}

GraphState tensor(const GraphState& a, const GraphState& b) {
  int na = a.num_modes(), nb = b.num_modes();
  GraphState out;
  out.Z = CMat::Zero(na + nb, na + nb);
  out.Z.topLeftCorner(na, na) = a.Z;
  out.Z.bottomRightCorner(nb, nb) = b.Z;
  out.mean.resize(2 * (na + nb));
  out.mean.segment(0, na) = a.mean.segment(0, na);
  out.mean.segment(na, nb) = b.mean.segment(0, nb);
  out.mean.segment(na + nb, na) = a.mean.segment(na, na);
  out.mean.segment(2 * na + nb, nb) = b.mean.segment(nb, nb);
  return out;
}

double graph_distance(const GraphState& a, const GraphState& b) {
  if (a.num_modes() != b.num_modes())
    throw DimensionError("graph_distance: mode counts differ");
  double dz = (a.Z - b.Z).cwiseAbs().maxCoeff();
  double dm = (a.mean - b.mean).cwiseAbs().maxCoeff();
  return std::max(dz, dm);
}

CVec mean_to_c(const GraphState& state) {
  int n = state.num_modes();
  if (state.mean.isZero(0.0)) return CVec::Zero(n);
  Vec qb = state.mean.head(n);
  Vec pb = state.mean.tail(n);
  return pb.cast<cdouble>() - state.Z * qb.cast<cdouble>();
}

Vec c_to_mean(const CMat& Z, const CVec& c) {
  int n = static_cast<int>(Z.rows());
  Vec mean = Vec::Zero(2 * n);
  if (c.isZero(0.0)) return mean;
  Mat U = Z.imag();
  Eigen::PartialPivLU<Mat> lu(U);
  Vec qb = lu.solve(Vec(-c.imag()));
  Vec pb = c.real() + Z.real() * qb;
  mean.head(n) = qb;
  mean.tail(n) = pb;
  return mean;
}

Vec mean_block(const GraphState& state, const std::vector<int>& modes) {
  int k = static_cast<int>(modes.size());
  int n = state.num_modes();
  CVec c = mean_to_c(state);
  CMat Zb(k, k);
  CVec cb(k);
  for (int i = 0; i < k; ++i) {
    cb(i) = c(modes[i]);
    for (int j = 0; j < k; ++j) Zb(i, j) = state.Z(modes[i], modes[j]);
  }
  (void)n;
  Mat Ub = Zb.imag();
  Eigen::PartialPivLU<Mat> lu(Ub);
  Vec qb = lu.solve(Vec(-cb.imag()));
  Vec pb = cb.real() + Zb.real() * qb;
  Vec out(2 * k);
  out.head(k) = qb;
  out.tail(k) = pb;
  return out;
}

void symmetrize(CMat& Z) { Z = 0.5 * (Z + Z.transpose()).eval(); }

}  // namespace bslsim
