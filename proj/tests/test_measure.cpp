// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bslsim/gates.hpp"
#include "bslsim/measure.hpp"

using namespace bslsim;

namespace {

GraphState random_state(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> uang(-M_PI, M_PI);
  std::normal_distribution<double> gauss(0.0, 1.0);
  GraphState st = vacuum_state(n);
  for (int i = 0; i < n; ++i) {
    st = apply_gaussian(st, rotation_symplectic(uang(rng)), {i});
    st = apply_gaussian(st, squeeze_symplectic(std::exp(0.4 * gauss(rng))), {i});
  }
  for (int i = 0; i + 1 < n; ++i)
    st = apply_gaussian(st, beamsplitter_symplectic(), {i, i + 1});
  for (int i = 0; i < 2 * n; ++i) st.mean(i) = gauss(rng);
  return st;
}

}  // namespace

TEST_CASE("marginal matches the covariance matrix") {
  std::mt19937_64 rng(21);
  GraphState st = random_state(rng, 4);
  CovarianceState cov = to_covariance(st);
  for (double theta : {0.1, 0.9, M_PI / 2, 2.7}) {
    for (int m = 0; m < 4; ++m) {
      auto [mu, var] = homodyne_marginal(st, m, theta);
      double s = std::sin(theta), c = std::cos(theta);
      double mu_ref = s * cov.mean(m) + c * cov.mean(4 + m);
      double var_ref = s * s * cov.sigma(m, m) +
                       2 * s * c * cov.sigma(m, 4 + m) +
                       c * c * cov.sigma(4 + m, 4 + m);
      CHECK(mu == doctest::Approx(mu_ref).epsilon(1e-10));
      CHECK(var == doctest::Approx(var_ref).epsilon(1e-10));
    }
  }
}

TEST_CASE("rank-1 graph update matches the covariance conditioning oracle") {
  std::mt19937_64 rng(22);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    GraphState st = random_state(rng, 5);
    double theta = 0.3 + 0.11 * trial;
    double outcome = 0.5 - 0.07 * trial;
    int mode = trial % 5;
    MeasureResult res = measure_homodyne(st, mode, theta, outcome);
    GraphState oracle = measure_homodyne_cov(st, mode, theta, outcome);
    worst = std::max(worst, graph_distance(res.state, oracle));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("q measurement is the theta = pi/2 case") {
  std::mt19937_64 rng(23);
  GraphState st = random_state(rng, 3);
  MeasureResult a = measure_q(st, 1, 0.4);
  MeasureResult b = measure_homodyne(st, 1, M_PI / 2, 0.4);
  CHECK(graph_distance(a.state, b.state) < 1e-14);
  // index map skips the measured mode
  CHECK(a.index_map == std::vector<int>{0, -1, 1});
}

TEST_CASE("forced measurement order does not matter") {
  std::mt19937_64 rng(24);
  GraphState st = random_state(rng, 4);
  // measure mode 0 (theta 0.7, outcome 1.1) and mode 3 (theta 1.9, outcome -.4)
  MeasureResult f1 = measure_homodyne(st, 0, 0.7, 1.1);
  MeasureResult f2 = measure_homodyne(f1.state, f1.index_map[3], 1.9, -0.4);
  MeasureResult g1 = measure_homodyne(st, 3, 1.9, -0.4);
  MeasureResult g2 = measure_homodyne(g1.state, g1.index_map[0], 0.7, 1.1);
  CHECK(graph_distance(f2.state, g2.state) < 1e-10);
}

TEST_CASE("sampled vacuum homodyne statistics") {
  std::mt19937_64 rng(25);
  GraphState v = vacuum_state(1);
  double sum = 0.0, sumsq = 0.0;
  const int N = 100000;
  for (int i = 0; i < N; ++i) {
    MeasureResult r = measure_homodyne(v, 0, 0.6, std::nullopt, &rng);
    sum += r.outcome;
    sumsq += r.outcome * r.outcome;
  }
  double mean = sum / N, var = sumsq / N - mean * mean;
  CHECK(std::abs(mean) < 0.02);
  CHECK(var == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("sampling without a generator throws") {
  GraphState v = vacuum_state(1);
  CHECK_THROWS_AS(measure_homodyne(v, 0, 0.3, std::nullopt, nullptr),
                  InvalidArgumentError);
  CHECK_THROWS_AS(measure_homodyne(v, 2, 0.3, 0.0), DimensionError);
}

TEST_CASE("equal-angle pair equals beamsplit then sum/difference outcomes") {
  std::mt19937_64 rng(26);
  GraphState st = random_state(rng, 3);
  double theta = 0.8, a = 0.9, b = -1.3;
  MeasureResult d1 = measure_homodyne(st, 0, theta, a);
  MeasureResult d2 = measure_homodyne(d1.state, 0, theta, b);

  GraphState bs = apply_gaussian(st, beamsplitter_symplectic_inverse(), {0, 1});
  double s2 = std::sqrt(2.0);
  MeasureResult e1 = measure_homodyne(bs, 0, theta, (a + b) / s2);
  MeasureResult e2 = measure_homodyne(e1.state, 0, theta, (b - a) / s2);
  CHECK(graph_distance(d2.state, e2.state) < 1e-12);
}

TEST_CASE("macronode measurement removes both modes and records a transcript") {
  LatticeSpec spec{4, 2, 1.0, "even"};
  LatticeState lat = build_bsl(spec);
  int before = lat.num_modes();
  std::vector<MeasurementRecord> tr;
  MacronodeOutcome out =
      measure_macronode(lat, 0, 2, 0.5, 1.1, std::make_pair(0.25, -0.75),
                        nullptr, &tr);
  CHECK(lat.num_modes() == before - 2);
  CHECK(lat.index_of({0, 2, Pol::Z}) == -1);
  CHECK(lat.index_of({0, 2, Pol::Y}) == -1);
  CHECK(out.out_Z == 0.25);
  CHECK(out.out_Y == -0.75);
  REQUIRE(tr.size() == 2);
  CHECK(tr[0].mode == "t0:m2:Z");
  CHECK(tr[0].theta == 0.5);
  CHECK(tr[0].forced);
  CHECK(tr[1].mode == "t0:m2:Y");
  CHECK(tr[1].theta == 1.1);
  auto [s, d] = macronode_sum_diff(out);
  CHECK(s == doctest::Approx((0.25 - 0.75) / std::sqrt(2.0)));
  CHECK(d == doctest::Approx((0.25 + 0.75) / std::sqrt(2.0)));
}

TEST_CASE("premeasure weight formulas and angle guard") {
  double tz = 0.7, ty = 1.4;
  CHECK(premeasure_f(tz, ty) ==
        doctest::Approx(0.25 * (1 / std::tan(tz) - 1 / std::tan(ty))));
  CHECK(premeasure_c(tz, ty) ==
        doctest::Approx(1 / std::tan(tz) + 1 / std::tan(ty)));
  LatticeSpec spec{4, 2, 1.0, "even"};
  LatticeState lat = build_bsl(spec);
  std::map<std::pair<int, int>, std::pair<double, double>> bad{
      {{0, 0}, {0.0, 1.0}}};
  CHECK_THROWS_AS(premeasure_controls(lat, bad), DegenerateAngleError);
  std::map<std::pair<int, int>, std::pair<double, double>> good{
      {{0, 0}, {0.6, 1.2}}, {{0, 2}, {0.8, 0.9}}};
  int before = lat.num_modes();
  premeasure_controls(lat, good);
  CHECK(lat.num_modes() == before - 4);
}
