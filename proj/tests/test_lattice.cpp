// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "bslsim/gates.hpp"
#include "bslsim/lattice.hpp"
#include "bslsim/measure.hpp"

using namespace bslsim;

TEST_CASE("node index relabeling") {
  CHECK(node_index(1) == -1);
  CHECK(node_index(2) == 2);
  CHECK(node_index(3) == -3);
  CHECK(node_index(4) == 4);
  CHECK_THROWS_AS(node_index(0), InvalidArgumentError);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS((LatticeSpec{1, 2, 1.0, "even"}.check()), InvalidArgumentError);
  CHECK_THROWS_AS((LatticeSpec{2, 1, 1.0, "even"}.check()), InvalidArgumentError);
  CHECK_THROWS_AS((LatticeSpec{2, 2, 0.0, "even"}.check()), InvalidArgumentError);
  CHECK_THROWS_AS((LatticeSpec{2, 2, 1.0, "both"}.check()), InvalidArgumentError);
  LatticeSpec ok{4, 3, 1.0, "odd"};
  CHECK_NOTHROW(ok.check());
}

TEST_CASE("mode bookkeeping") {
  LatticeSpec spec{6, 3, 1.0, "even"};
  LatticeState lat = build_bsl(spec);
  // 2 M T live modes plus two pads per odd row
  CHECK(lat.num_modes() == 2 * 6 * 3 + 2 * 3);
  CHECK(std::is_sorted(lat.labels.begin(), lat.labels.end()));
  CHECK(lat.labels == final_labels(spec));
  CHECK(lat.index_of({0, 0, Pol::Y}) >= 0);
  CHECK(lat.index_of({7, 0, Pol::Y}) == -1);
  CHECK_THROWS_AS(lat.require({7, 0, Pol::Y}), InvalidArgumentError);
  CHECK(ModeLabel{2, 3, Pol::Z}.str() == "t2:m3:Z");
}

TEST_CASE("stable build equals the staged pipeline at both parities") {
  for (const char* parity : {"even", "odd"}) {
    LatticeSpec spec{4, 3, 1.0, parity};
    LatticeState direct = build_bsl(spec);
    LatticeState staged = build_bsl_staged(spec);
    REQUIRE(direct.labels == staged.labels);
    CHECK(graph_distance(direct.state, staged.state) < 1e-12);
  }
}

TEST_CASE("final graph is tanh2r A + i sech2r I") {
  LatticeSpec spec{6, 4, 1.3, "even"};
  LatticeState lat = build_bsl(spec);
  Mat A = ideal_bsl_adjacency(spec);
  int n = lat.num_modes();
  CMat ideal = spec.t() * A.cast<cdouble>() +
               cdouble(0.0, spec.eps()) * CMat::Identity(n, n);
  CHECK((lat.state.Z - ideal).cwiseAbs().maxCoeff() < 1e-12);
  // adjacency entries are 0 or +-2^{-3/2}
  std::set<long long> vals;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) vals.insert(std::llround(A(i, j) * 1e9));
  double w = std::pow(2.0, -1.5);
  for (long long v : vals)
    CHECK((v == 0 || std::abs(std::abs(v / 1e9) - w) < 1e-8));
}

TEST_CASE("torus adjacency is self-inverse with uniform nullifiers") {
  LatticeSpec spec{6, 4, 1.0, "even"};
  Mat A = ideal_bsl_adjacency(spec, true);
  int n = static_cast<int>(A.rows());
  // (2 sqrt2 w)^2 = 1: A A = I in units where entries are 2^{-3/2}
  CHECK((A * A - Mat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
  LatticeState torus = build_bsl_torus(spec);
  Vec vars = nullifier_variances(torus.state, A);
  // Z = t A + i eps I and A self-inverse give uniform variances
  // ((1-t)^2/eps + eps)/2, approaching eps/2 as r grows.
  double t = spec.t(), eps = spec.eps();
  double expect = 0.5 * ((1 - t) * (1 - t) / eps + eps);
  CHECK((vars.array() - expect).abs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(build_bsl_torus(LatticeSpec{5, 4, 1.0, "even"}),
                  InvalidArgumentError);
}

TEST_CASE("open-lattice nullifier variances decrease with squeezing") {
  LatticeSpec spec{4, 3, 0.5, "even"};
  double prev = 1e9;
  for (double r : {0.5, 1.0, 2.0}) {
    spec.r = r;
    LatticeState lat = build_bsl(spec);
    double v = nullifier_variances(lat.state, ideal_bsl_adjacency(spec)).maxCoeff();
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("q-measuring the Y layer leaves the square lattice") {
  LatticeSpec spec{4, 3, 1.0, "even"};
  LatticeState lat = build_bsl(spec);
  // measure every Y-polarized mode in q (theta = pi/2), forced zero
  for (bool more = true; more;) {
    more = false;
    for (int i = 0; i < lat.num_modes(); ++i) {
      if (lat.labels[i].pol == Pol::Y) {
        MeasureResult res = measure_q(lat.state, i, 0.0);
        lat.state = std::move(res.state);
        lat.erase_mode(i);
        more = true;
        break;
      }
    }
  }
  std::vector<SquareEdge> edges = square_lattice_edges(spec);
  int n = lat.num_modes();
  CMat expect = cdouble(0.0, spec.eps()) * CMat::Identity(n, n);
  for (const SquareEdge& e : edges) {
    int i = lat.require(e.a), j = lat.require(e.b);
    expect(i, j) = expect(j, i) = e.weight * spec.t();
  }
  CHECK((lat.state.Z - expect).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("converted view maps H-frame loops to i sech2r") {
  LatticeSpec spec{4, 2, 0.7, "even"};
  LatticeState lat = build_epr_layer(spec);
  GraphState conv = converted_view(lat);
  double eps = spec.eps();
  for (int i = 0; i < conv.num_modes(); ++i)
    CHECK(std::abs(conv.Z(i, i) - cdouble(0.0, eps)) < 1e-12);
}
