// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bslsim/protocol.hpp"

using namespace bslsim;

namespace {

Mat v2(double tj, double tk) { return v_gate_symplectic(tj, tk).S; }

// Per-step single-wire channel law for sign s: N V(-s pi/4, s pi/4) N V(a, b).
Mat wire_channel(double r, int s, double a, double b) {
  Mat N = squeeze_symplectic(1.0 / std::tanh(2.0 * r)).S;
  return N * v2(-s * M_PI / 4, s * M_PI / 4) * N * v2(a, b);
}

StepPlan manual_plan(double a1, double b1) {
  StepPlan p;
  p.wire_angles[1] = {a1, b1};
  p.wire_angles[3] = {M_PI / 4, -M_PI / 4};  // transmission, s = -1
  p.control_angles[0] = {M_PI / 4, M_PI / 4};
  p.control_signs[0] = 1;
  p.control_angles[2] = {-M_PI / 4, -M_PI / 4};
  p.control_signs[2] = -1;
  return p;
}

}  // namespace

TEST_CASE("default vertical sign pattern") {
  CHECK(default_row_sign(0) == 1);
  CHECK(default_row_sign(2) == -1);
  CHECK(default_row_sign(4) == 1);
  CHECK(default_row_sign(6) == -1);
}

TEST_CASE("cz angle vector and target") {
  double phi = M_PI / 3;
  std::array<double, 10> th = cz_angles(phi, 1);
  CHECK(th[0] == doctest::Approx(M_PI / 4));
  CHECK(th[2] == doctest::Approx(-M_PI / 8));
  CHECK(th[3] == doctest::Approx(3 * M_PI / 8));
  CHECK(th[4] == doctest::Approx(M_PI / 4 + phi));
  CHECK(th[5] == doctest::Approx(M_PI / 4 - phi));
  CHECK(th[8] == doctest::Approx(M_PI / 4));
  CHECK_THROWS_AS(cz_angles(0.0, 1), DegenerateAngleError);
  CHECK_THROWS_AS(cz_angles(M_PI / 2, 1), DegenerateAngleError);
  CHECK_THROWS_AS(cz_angles(0.5, 2), InvalidArgumentError);
  for (int s : {1, -1}) {
    Mat T = cz_target(phi, s);
    CHECK(is_symplectic(T));
    Mat manual = Mat::Zero(4, 4);
    Mat R1 = rotation_symplectic(-s * 3 * M_PI / 4).S;
    Mat R2 = rotation_symplectic(s * M_PI / 4).S;
    manual(0, 0) = R1(0, 0); manual(0, 2) = R1(0, 1);
    manual(2, 0) = R1(1, 0); manual(2, 2) = R1(1, 1);
    manual(1, 1) = R2(0, 0); manual(1, 3) = R2(0, 1);
    manual(3, 1) = R2(1, 0); manual(3, 3) = R2(1, 1);
    manual = manual * cz_symplectic(2.0 / std::tan(phi)).S;
    CHECK((T - manual).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("two-V decomposition solves random SL(2,R) targets") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> uni(-1.2, 1.2);
  for (int trial = 0; trial < 20; ++trial) {
    Mat target = rotation_symplectic(uni(rng)).S *
                 squeeze_symplectic(std::exp(uni(rng))).S *
                 rotation_symplectic(uni(rng)).S;
    VDecomposition dec = solve_two_v(target, -1, -1);
    CHECK(dec.residual < 1e-6);
    // s1 = s2 = -1 makes the interleaved squeezers trivial: plain V o V
    Mat net = v2(dec.angles[2], dec.angles[3]) * v2(dec.angles[0], dec.angles[1]);
    CHECK((net - target).cwiseAbs().maxCoeff() < 1e-6);
  }
  CHECK_THROWS_AS(solve_two_v(2.0 * Mat::Identity(2, 2), 1, 1),
                  InvalidArgumentError);
}

TEST_CASE("wire_step validation and bookkeeping") {
  LatticeSpec spec{4, 2, 1.0, "even"};
  LatticeState lat = build_bsl(spec);
  std::map<int, int> good{{0, 1}, {2, -1}}, bad{{0, 1}, {2, 1}};
  CHECK_THROWS_AS(wire_step(lat, 0, 2, 0.3, 0.9, good), InvalidArgumentError);
  CHECK_THROWS_AS(wire_step(lat, 0, 1, 0.3, 0.9, bad), InvalidArgumentError);
  int before = lat.num_modes();
  std::vector<MeasurementRecord> rec = wire_step(lat, 0, 1, 0.3, 0.9, good);
  CHECK(lat.num_modes() == before - 6);
  CHECK(rec.size() == 6);
  CHECK(rec[0].mode == "t0:m1:Z");
  CHECK(rec[0].theta == doctest::Approx(0.3));
  CHECK(rec[1].theta == doctest::Approx(0.9 + M_PI));  // Y mode offset by pi
}

TEST_CASE("two_mode_step rejects inconsistent outer controls") {
  LatticeSpec spec{6, 2, 1.0, "even"};
  LatticeState lat = build_bsl(spec);
  std::array<double, 10> th = cz_angles(M_PI / 4, 1);
  th[9] += 0.1;
  CHECK_THROWS_AS(two_mode_step(lat, 0, {1, 3}, th), InvalidArgumentError);
  CHECK_THROWS_AS(two_mode_step(lat, 0, {2, 4}, cz_angles(M_PI / 4, 1)),
                  InvalidArgumentError);
}

TEST_CASE("single-wire logical channel matches the V-channel law") {
  LatticeSpec spec{4, 2, 10.0, "even"};
  AngleSchedule sch;
  sch.encoded_wires = {1};
  sch.steps = {manual_plan(0.7, -0.4)};
  LogicalChannel ch = extract_logical_channel(spec, sch);
  Mat expect = wire_channel(spec.r, 1, 0.7, -0.4);
  CHECK((ch.S - expect).cwiseAbs().maxCoeff() < 1e-5);
  CHECK(ch.residual < 1e-5);
  CHECK(ch.d.cwiseAbs().maxCoeff() < 1e-9);  // forced-zero run has zero mean
  CHECK(ch.noise_excess.cwiseAbs().maxCoeff() < 1e-3);
}

TEST_CASE("two chained steps compose the per-step channels") {
  LatticeSpec spec{4, 2, 10.0, "even"};
  AngleSchedule sch;
  sch.encoded_wires = {1};
  sch.steps = {manual_plan(0.7, -0.4), manual_plan(-1.1, 0.3)};
  LogicalChannel ch = extract_logical_channel(spec, sch);
  Mat expect =
      wire_channel(spec.r, 1, -1.1, 0.3) * wire_channel(spec.r, 1, 0.7, -0.4);
  CHECK((ch.S - expect).cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("compile: identity, readout, and validation") {
  LatticeSpec spec{4, 4, 1.0, "even"};
  Program prog;
  prog.wires = 1;
  prog.steps = {{"identity", {0}, {}}, {"readout", {0}, {{"theta", 0.9}}}};
  AngleSchedule sch = compile_program(prog, spec);
  CHECK(sch.encoded_wires == std::vector<int>{1});
  CHECK(sch.readout_wires == std::vector<int>{1});
  REQUIRE(sch.steps.size() == 2);
  CHECK(sch.steps[0].wire_angles.at(1).first == doctest::Approx(-M_PI / 4));
  CHECK(sch.steps[0].wire_angles.at(1).second == doctest::Approx(M_PI / 4));
  CHECK(sch.steps[1].wire_angles.at(1).first == doctest::Approx(0.9));
  CHECK(sch.steps[1].wire_angles.at(1).second == doctest::Approx(0.9));
  CHECK(sch.residual_rotations.empty());

  Program big;
  big.wires = 2;  // needs rows up to 3, so M >= 5
  CHECK_THROWS_AS(compile_program(big, spec), DimensionError);
  Program bad;
  bad.wires = 1;
  bad.steps = {{"warp", {0}, {}}};
  CHECK_THROWS_AS(compile_program(bad, spec), InvalidArgumentError);
  Program twice;
  twice.wires = 1;
  twice.steps = {{"readout", {0}, {}}, {"identity", {0}, {}}};
  CHECK_THROWS_AS(compile_program(twice, spec), InvalidArgumentError);
}

TEST_CASE("compiled single-mode rotation gives the right channel") {
  LatticeSpec spec{4, 3, 10.0, "even"};
  Program prog;
  prog.wires = 1;
  prog.steps = {{"single", {0}, {{"theta", 0.7}}}};
  AngleSchedule sch = compile_program(prog, spec);
  REQUIRE(sch.steps.size() == 2);
  LogicalChannel ch = extract_logical_channel(spec, sch);
  CHECK((ch.S - rotation_symplectic(0.7).S).cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("cz compilation: residual rotations absorbed by later identities") {
  LatticeSpec spec{6, 6, 10.0, "even"};
  Program bare;
  bare.wires = 2;
  bare.steps = {{"cz", {0, 1}, {{"phi", M_PI / 4}}}};
  AngleSchedule raw = compile_program(bare, spec);
  REQUIRE(raw.steps.size() == 1);
  CHECK(raw.steps[0].cz_pairs == std::vector<std::pair<int, int>>{{1, 3}});
  CHECK(raw.steps[0].control_angles.at(2).first ==
        doctest::Approx(M_PI / 4 + M_PI / 4));
  CHECK(raw.residual_rotations.count(1) == 1);
  CHECK(raw.residual_rotations.count(3) == 1);
  LogicalChannel rawch = extract_logical_channel(spec, raw);
  CHECK((rawch.S - cz_target(M_PI / 4, 1)).cwiseAbs().maxCoeff() < 1e-5);

  Program prog = bare;
  prog.steps.push_back({"identity", {0}, {}});
  prog.steps.push_back({"identity", {1}, {}});
  AngleSchedule sch = compile_program(prog, spec);
  CHECK(sch.residual_rotations.empty());
  LogicalChannel ch = extract_logical_channel(spec, sch);
  // rotations cancelled: pure CZ(2 cot phi) on (upper, lower)
  CHECK((ch.S - cz_symplectic(2.0 / std::tan(M_PI / 4)).S).cwiseAbs().maxCoeff() <
        1e-5);
}

TEST_CASE("forced-zero runs have zero displacement") {
  LatticeSpec spec{4, 3, 2.0, "even"};
  Program prog;
  prog.wires = 1;
  prog.steps = {{"identity", {0}, {}}, {"identity", {0}, {}}};
  AngleSchedule sch = compile_program(prog, spec);
  RunOptions opts;
  RunResult res = run_program(spec, sch, {}, opts);
  CHECK(res.accumulated_displacement.cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(res.wire_feedforward.has_value());
  CHECK(res.wire_feedforward->cwiseAbs().maxCoeff() < 1e-12);
  CHECK(res.output_wires == std::vector<int>{1});
  for (const MeasurementRecord& m : res.transcript) CHECK(m.forced);
}

TEST_CASE("seeded sampling is deterministic") {
  LatticeSpec spec{4, 3, 1.0, "even"};
  Program prog;
  prog.wires = 1;
  prog.steps = {{"identity", {0}, {}}};
  AngleSchedule sch = compile_program(prog, spec);
  RunOptions opts;
  opts.forced_zero = false;
  opts.seed = 99;
  RunResult a = run_program(spec, sch, {}, opts);
  RunResult b = run_program(spec, sch, {}, opts);
  REQUIRE(a.transcript.size() == b.transcript.size());
  for (size_t i = 0; i < a.transcript.size(); ++i) {
    CHECK(a.transcript[i].mode == b.transcript[i].mode);
    CHECK(a.transcript[i].outcome == b.transcript[i].outcome);
    CHECK(!a.transcript[i].forced);
    CHECK(a.transcript[i].seed == std::optional<uint64_t>(99));
  }
  CHECK(graph_distance(a.final_state, b.final_state) == 0.0);
}

TEST_CASE("analytic feedforward matches the exact twin-run displacement") {
  LatticeSpec spec{4, 3, 10.0, "even"};
  Program prog;
  prog.wires = 1;
  prog.steps = {{"identity", {0}, {}}, {"identity", {0}, {}}};
  AngleSchedule sch = compile_program(prog, spec);
  RunOptions opts;
  opts.forced_zero = false;
  opts.controls_forced_zero = true;  // only wire outcomes contribute
  opts.seed = 7;
  RunResult res = run_program(spec, sch, {}, opts);
  REQUIRE(res.wire_feedforward.has_value());
  // sampled outcomes grow like sqrt(cosh 2r); compare relative to their scale
  double scale = 1.0 + res.accumulated_displacement.cwiseAbs().maxCoeff();
  CHECK((res.accumulated_displacement - *res.wire_feedforward)
            .cwiseAbs()
            .maxCoeff() /
            scale <
        1e-6);
}
