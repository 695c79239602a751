// SPDX-License-Identifier: MIT

#include "bslsim/measure.hpp"

#include <cmath>

#include "bslsim/gates.hpp"

namespace bslsim {

std::pair<double, double> homodyne_marginal(const GraphState& state, int mode,
                                            double theta) {
  int n = state.num_modes();
  double sth = std::sin(theta), cth = std::cos(theta);
  double mean = sth * state.mean(mode) + cth * state.mean(n + mode);
  // Needs only three covariance entries; solve one column of U.
  Mat U = state.Z.imag();
  Mat V = state.Z.real();
  Eigen::PartialPivLU<Mat> lu(U);
  Vec em = Vec::Zero(n);
  em(mode) = 1.0;
  Vec u = lu.solve(em);          // U^{-1} e_m
  Vec vm = V.col(mode);
  double sqq = 0.5 * u(mode);
  double sqp = 0.5 * u.dot(vm);
  double spp = 0.5 * (U(mode, mode) + vm.dot(lu.solve(vm)));
  double var = sth * sth * sqq + 2.0 * sth * cth * sqp + cth * cth * spp;
  return {mean, var};
}

MeasureResult measure_homodyne(const GraphState& state, int mode, double theta,
                               std::optional<double> forced_outcome,
                               std::mt19937_64* rng) {
  int n = state.num_modes();
  if (mode < 0 || mode >= n)
    throw DimensionError("measure_homodyne: mode out of range");
  double outcome;
  if (forced_outcome) {
    outcome = *forced_outcome;
  } else {
    if (!rng)
      throw InvalidArgumentError(
          "measure_homodyne: sampling requires a random generator");
    auto [mu, var] = homodyne_marginal(state, mode, theta);
    std::normal_distribution<double> dist(mu, std::sqrt(var));
    outcome = dist(*rng);
  }

  double cth = std::cos(theta), sth = std::sin(theta);
  CVec c = mean_to_c(state);
  cdouble D = state.Z(mode, mode) * cth + sth;

  MeasureResult res;
  res.outcome = outcome;
  res.index_map.assign(n, -1);
  std::vector<int> keep;
  keep.reserve(n - 1);
  for (int i = 0; i < n; ++i) {
    if (i == mode) continue;
    res.index_map[i] = static_cast<int>(keep.size());
    keep.push_back(i);
  }
  int nk = static_cast<int>(keep.size());
  CVec zm(nk);
  for (int i = 0; i < nk; ++i) zm(i) = state.Z(keep[i], mode);
  CMat Zp(nk, nk);
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nk; ++j) Zp(i, j) = state.Z(keep[i], keep[j]);
  if (cth != 0.0) Zp -= (zm * zm.transpose()) * (cth / D);
  symmetrize(Zp);
  CVec cp(nk);
  cdouble shift = (c(mode) * cth - outcome) / D;
  for (int i = 0; i < nk; ++i) cp(i) = c(keep[i]) - zm(i) * shift;
  res.state.Z = Zp;
  res.state.mean = c_to_mean(Zp, cp);
  return res;
}

MeasureResult measure_q(const GraphState& state, int mode,
                        std::optional<double> forced_outcome,
                        std::mt19937_64* rng) {
  return measure_homodyne(state, mode, M_PI / 2.0, forced_outcome, rng);
}

GraphState measure_homodyne_cov(const GraphState& state, int mode, double theta,
                                double outcome) {
  // Rotate p(theta) onto q, then condition (Sigma, mean) on q_mode.
  GraphState rotated =
      apply_gaussian(state, rotation_symplectic(theta - M_PI / 2.0), {mode});
  CovarianceState cov = to_covariance(rotated);
  int n = state.num_modes();
  std::vector<int> keepq;
  for (int i = 0; i < n; ++i)
    if (i != mode) keepq.push_back(i);
  std::vector<int> idxA;
  for (int i : keepq) idxA.push_back(i);
  for (int i : keepq) idxA.push_back(n + i);
  int b = mode;
  int na = static_cast<int>(idxA.size());
  Mat SAA(na, na);
  Vec SAb(na);
  for (int i = 0; i < na; ++i) {
    SAb(i) = cov.sigma(idxA[i], b);
    for (int j = 0; j < na; ++j) SAA(i, j) = cov.sigma(idxA[i], idxA[j]);
  }
  double Sbb = cov.sigma(b, b);
  Mat Sp = SAA - (SAb * SAb.transpose()) / Sbb;
  Vec mup(na);
  for (int i = 0; i < na; ++i)
    mup(i) = cov.mean(idxA[i]) + SAb(i) / Sbb * (outcome - cov.mean(b));
  return from_covariance(CovarianceState{Sp, mup});
}

MacronodeOutcome measure_macronode(
    LatticeState& lat, int time_bin, int m, double theta_Z, double theta_Y,
    std::optional<std::pair<double, double>> forced_zy, std::mt19937_64* rng,
    std::vector<MeasurementRecord>* transcript) {
  MacronodeOutcome out;
  struct Item {
    Pol pol;
    double theta;
    std::optional<double> forced;
  };
  for (const Item& item :
       {Item{Pol::Z, theta_Z,
             forced_zy ? std::optional<double>(forced_zy->first) : std::nullopt},
        Item{Pol::Y, theta_Y,
             forced_zy ? std::optional<double>(forced_zy->second) : std::nullopt}}) {
    ModeLabel lab{time_bin, m, item.pol};
    int idx = lat.require(lab);
    MeasureResult r = measure_homodyne(lat.state, idx, item.theta, item.forced, rng);
    lat.state = std::move(r.state);
    lat.erase_mode(idx);
    (item.pol == Pol::Z ? out.out_Z : out.out_Y) = r.outcome;
    if (transcript)
      transcript->push_back(
          {lab.str(), item.theta, r.outcome, item.forced.has_value(), std::nullopt});
  }
  return out;
}

std::pair<double, double> macronode_sum_diff(const MacronodeOutcome& o) {
  double s = (o.out_Z + o.out_Y) / std::sqrt(2.0);
  double d = (o.out_Z - o.out_Y) / std::sqrt(2.0);
  return {s, d};
}

void decompose_macronode(LatticeState& lat, int time_bin, int m) {
  int iz = lat.require({time_bin, m, Pol::Z});
  int iy = lat.require({time_bin, m, Pol::Y});
  lat.state =
      apply_gaussian(lat.state, beamsplitter_symplectic_inverse(), {iz, iy});
}

double premeasure_f(double theta_Z, double theta_Y) {
  return 0.25 * (1.0 / std::tan(theta_Z) - 1.0 / std::tan(theta_Y));
}

double premeasure_c(double theta_Z, double theta_Y) {
  return 1.0 / std::tan(theta_Z) + 1.0 / std::tan(theta_Y);
}

void premeasure_controls(
    LatticeState& lat,
    const std::map<std::pair<int, int>, std::pair<double, double>>& assignment) {
  for (const auto& [where, angles] : assignment) {
    auto [tz, ty] = angles;
    if (std::abs(std::sin(tz)) < 1e-9 || std::abs(std::sin(ty)) < 1e-9)
      throw DegenerateAngleError("premeasure_controls: cot singular at 0 mod pi");
    measure_macronode(lat, where.first, where.second, tz, ty);
  }
}

}  // namespace bslsim
