// SPDX-License-Identifier: MIT

#include "bslsim/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace bslsim {

namespace {

using Mat2 = Eigen::Matrix2d;

Mat2 rot2(double theta) {
  Mat2 m;
  m << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return m;
}

Mat2 sq2(double s) {
  Mat2 m;
  m << s, 0.0, 0.0, 1.0 / s;
  return m;
}

// V(tj, tk) = R(t+) S(tan t-) R(t+), t± = (tj ± tk)/2.
Mat2 v2(double tj, double tk) {
  double tp = 0.5 * (tj + tk), tm = 0.5 * (tj - tk);
  return rot2(tp) * sq2(std::tan(tm)) * rot2(tp);
}

// (q1,q2,p1,p2)-ordered two-mode symplectic from per-mode 2x2 blocks.
Mat two_mode_local(const Mat2& g1, const Mat2& g2) {
  Mat S = Mat::Zero(4, 4);
  S(0, 0) = g1(0, 0); S(0, 2) = g1(0, 1); S(2, 0) = g1(1, 0); S(2, 2) = g1(1, 1);
  S(1, 1) = g2(0, 0); S(1, 3) = g2(0, 1); S(3, 1) = g2(1, 0); S(3, 3) = g2(1, 1);
  return S;
}

bool is_identity2(const Mat2& m, double tol = 1e-12) {
  return (m - Mat2::Identity()).cwiseAbs().maxCoeff() < tol;
}

double wrap_angle(double a) {
  a = std::fmod(a, M_PI);
  if (a > M_PI / 2.0) a -= M_PI;
  if (a < -M_PI / 2.0) a += M_PI;
  return a;
}

// ---------------------------------------------------------------------------
// Two-V numerical decomposition: Nelder-Mead with deterministic multistart.
// ---------------------------------------------------------------------------

struct TwoVObjective {
  Mat2 target;
  int s1, s2;

  Mat2 net(const std::array<double, 4>& x) const {
    return sq2(-static_cast<double>(s2)) * v2(x[2], x[3]) *
           sq2(-static_cast<double>(s1)) * v2(x[0], x[1]);
  }
  double operator()(const std::array<double, 4>& x) const {
    if (std::abs(std::sin(x[0] - x[1])) < 1e-6 ||
        std::abs(std::sin(x[2] - x[3])) < 1e-6)
      return 1e6;
    return (net(x) - target).squaredNorm();
  }
};

std::array<double, 4> nelder_mead(const TwoVObjective& f,
                                  std::array<double, 4> x0, int iters) {
  constexpr int N = 4;
  std::array<std::array<double, 4>, N + 1> simplex;
  std::array<double, N + 1> val;
  simplex[0] = x0;
  for (int i = 0; i < N; ++i) {
    simplex[i + 1] = x0;
    simplex[i + 1][i] += 0.25;
  }
  for (int i = 0; i <= N; ++i) val[i] = f(simplex[i]);
  for (int it = 0; it < iters; ++it) {
    std::array<int, N + 1> order;
    for (int i = 0; i <= N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return val[a] < val[b]; });
    if (val[order[0]] < 1e-26) break;
    int worst = order[N];
    std::array<double, 4> centroid{};
    for (int i = 0; i < N; ++i)
      for (int d = 0; d < 4; ++d) centroid[d] += simplex[order[i]][d] / N;
    auto blend = [&](double t) {
      std::array<double, 4> y;
      for (int d = 0; d < 4; ++d)
        y[d] = centroid[d] + t * (centroid[d] - simplex[worst][d]);
      return y;
    };
    auto refl = blend(1.0);
    double fr = f(refl);
    if (fr < val[order[0]]) {
      auto exp_ = blend(2.0);
      double fe = f(exp_);
      if (fe < fr) { simplex[worst] = exp_; val[worst] = fe; }
      else { simplex[worst] = refl; val[worst] = fr; }
    } else if (fr < val[order[N - 1]]) {
      simplex[worst] = refl; val[worst] = fr;
    } else {
      auto con = blend(fr < val[worst] ? 0.5 : -0.5);
      double fc = f(con);
      if (fc < std::min(fr, val[worst])) {
        simplex[worst] = con; val[worst] = fc;
      } else {
        for (int i = 1; i <= N; ++i) {
          for (int d = 0; d < 4; ++d)
            simplex[order[i]][d] =
                0.5 * (simplex[order[i]][d] + simplex[order[0]][d]);
          val[order[i]] = f(simplex[order[i]]);
        }
      }
    }
  }
  int best = 0;
  for (int i = 1; i <= N; ++i)
    if (val[i] < val[best]) best = i;
  return simplex[best];
}

double squeeze_cost(const std::array<double, 4>& x) {
  return std::abs(std::tan(0.5 * (x[0] - x[1]))) +
         std::abs(std::tan(0.5 * (x[2] - x[3])));
}

}  // namespace

int default_row_sign(int control_row) { return control_row % 4 == 0 ? 1 : -1; }

std::array<double, 10> cz_angles(double phi, int row_sign) {
  if (row_sign != 1 && row_sign != -1)
    throw InvalidArgumentError("cz_angles: row_sign must be +-1");
  if (std::abs(std::sin(phi)) < 1e-9 || std::abs(std::sin(2.0 * phi)) < 1e-9)
    throw DegenerateAngleError("cz_angles: phi degenerate (0 or pi/2 mod pi)");
  double s = row_sign;
  return {s * M_PI / 4, s * M_PI / 4,           // m1 = b+1 (control)
          -s * M_PI / 8, s * 3 * M_PI / 8,      // m2 = b   (upper wire)
          s * M_PI / 4 + phi, s * M_PI / 4 - phi,  // m3 (center control)
          -s * M_PI / 8, s * 3 * M_PI / 8,      // m4 = a   (lower wire)
          s * M_PI / 4, s * M_PI / 4};          // m5 = a-1 (control)
}

Mat cz_target(double phi, int row_sign) {
  double s = row_sign;
  Mat loc = two_mode_local(rot2(-s * 3 * M_PI / 4), rot2(s * M_PI / 4));
  return loc * cz_symplectic(2.0 / std::tan(phi)).S;
}

VDecomposition solve_two_v(const Mat& target, int s1, int s2) {
  if (target.rows() != 2 || target.cols() != 2)
    throw DimensionError("solve_two_v: target must be 2x2");
  if (std::abs(target.determinant() - 1.0) > 1e-9)
    throw InvalidArgumentError("solve_two_v: target must have unit determinant");
  TwoVObjective f{target, s1, s2};
  std::mt19937_64 gen(0xB51u);
  std::uniform_real_distribution<double> uni(-M_PI / 2.0, M_PI / 2.0);
  bool have = false;
  VDecomposition best{};
  double best_cost = 0.0;
  for (int start = 0; start < 80; ++start) {
    std::array<double, 4> x0;
    for (double& v : x0) v = uni(gen);
    auto x = nelder_mead(f, x0, 400);
    x = nelder_mead(f, x, 400);  // restart to escape shrink stagnation
    double res = std::sqrt(f(x));
    if (res >= 1e-8) continue;
    for (double& v : x) v = wrap_angle(v);
    double cost = squeeze_cost(x);
    if (!have || cost < best_cost - 1e-12) {
      have = true;
      best = VDecomposition{x, res};
      best_cost = cost;
    }
  }
  if (!have)
    throw SimError("solve_two_v: no decomposition with residual < 1e-8 found");
  return best;
}

// ---------------------------------------------------------------------------
// Lattice-level steps
// ---------------------------------------------------------------------------

void encode_input(LatticeState& lat, int time_bin, int m,
                  const GraphState& input) {
  if (input.num_modes() != 1)
    throw DimensionError("encode_input: input must be single-mode");
  int iy = lat.require({time_bin, m, Pol::Y});
  int iz = lat.require({time_bin, m, Pol::Z});
  lat.state =
      apply_gaussian(lat.state, beamsplitter_symplectic_inverse(), {iz, iy});
  CVec c = mean_to_c(lat.state);
  cdouble z_in = input.Z(0, 0);
  lat.state.Z(iy, iy) = z_in;  // input rides on the through-going (Y) slot
  lat.state.Z(iz, iz) = cdouble(0.0, lat.spec.eps());
  lat.state.Z(iy, iz) = lat.state.Z(iz, iy) = 0.0;
  c(iy) = input.mean(1) - z_in * input.mean(0);
  c(iz) = 0.0;
  lat.state.mean = c_to_mean(lat.state.Z, c);
  lat.state = apply_gaussian(lat.state, beamsplitter_symplectic(), {iz, iy});
}

std::vector<MeasurementRecord> wire_step(LatticeState& lat, int time_bin, int w,
                                         double theta_wZ, double theta_wY,
                                         const std::map<int, int>& signs,
                                         std::optional<double> forced,
                                         std::mt19937_64* rng) {
  if (w % 2 == 0)
    throw InvalidArgumentError("wire_step: wire rows are odd");
  auto lo = signs.find(w - 1), hi = signs.find(w + 1);
  if (lo == signs.end() || hi == signs.end())
    throw InvalidArgumentError("wire_step: both adjacent control signs required");
  if (lo->second * hi->second != -1)
    throw InvalidArgumentError(
        "wire_step: adjacent control rows must carry opposite signs");
  std::vector<MeasurementRecord> rec;
  auto fz = forced ? std::optional<std::pair<double, double>>({*forced, *forced})
                   : std::nullopt;
  measure_macronode(lat, time_bin, w, theta_wZ, theta_wY + M_PI, fz, rng, &rec);
  for (auto it : {lo, hi}) {
    double a = it->second * M_PI / 4.0;
    measure_macronode(lat, time_bin, it->first, a, a, fz, rng, &rec);
  }
  return rec;
}

std::vector<MeasurementRecord> two_mode_step(LatticeState& lat, int time_bin,
                                             std::pair<int, int> wires,
                                             const std::array<double, 10>& th,
                                             std::optional<double> forced,
                                             std::mt19937_64* rng) {
  auto [a, b] = wires;
  if (b != a + 2 || a % 2 == 0)
    throw InvalidArgumentError("two_mode_step: wires must be odd rows (a, a+2)");
  double tol = 1e-12;
  if (std::abs(th[0] - th[1]) > tol || std::abs(th[8] - th[9]) > tol ||
      std::abs(std::abs(th[0]) - M_PI / 4) > tol ||
      std::abs(th[0] - th[8]) > tol)
    throw InvalidArgumentError(
        "two_mode_step: outer controls must both sit at the same s*pi/4");
  std::vector<MeasurementRecord> rec;
  auto fz = forced ? std::optional<std::pair<double, double>>({*forced, *forced})
                   : std::nullopt;
  // wires (m2 = b, m4 = a): Y mode offset by pi
  measure_macronode(lat, time_bin, b, th[2], th[3] + M_PI, fz, rng, &rec);
  measure_macronode(lat, time_bin, a, th[6], th[7] + M_PI, fz, rng, &rec);
  // controls (m1 = b+1, m3 = a+1, m5 = a-1): raw angles
  measure_macronode(lat, time_bin, b + 1, th[0], th[1], fz, rng, &rec);
  measure_macronode(lat, time_bin, a + 1, th[4], th[5], fz, rng, &rec);
  measure_macronode(lat, time_bin, a - 1, th[8], th[9], fz, rng, &rec);
  return rec;
}

// ---------------------------------------------------------------------------
// Compilation
// ---------------------------------------------------------------------------

namespace {

Mat2 single_target_from_params(const std::map<std::string, double>& p) {
  auto has = [&](const char* k) { return p.count(k) != 0; };
  if (has("m00") || has("m01") || has("m10") || has("m11")) {
    Mat2 m;
    m << p.at("m00"), p.at("m01"), p.at("m10"), p.at("m11");
    if (std::abs(m.determinant() - 1.0) > 1e-9)
      throw InvalidArgumentError("single step: matrix must have unit determinant");
    return m;
  }
  Mat2 m = Mat2::Identity();
  if (has("squeeze")) {
    if (p.at("squeeze") == 0.0)
      throw InvalidArgumentError("single step: squeeze must be nonzero");
    m = sq2(p.at("squeeze")) * m;
  }
  if (has("theta")) m = rot2(p.at("theta")) * m;
  if (is_identity2(m) && !has("theta") && !has("squeeze"))
    throw InvalidArgumentError("single step: no gate parameters given");
  return m;
}

struct Compiler {
  const LatticeSpec& spec;
  AngleSchedule out;
  std::map<int, Mat2> pending;   // wire row -> residual rotation
  std::set<int> readout_done;

  explicit Compiler(const LatticeSpec& s) : spec(s) {}

  StepPlan base_plan() const {
    StepPlan p;
    for (int w = 1; w < spec.num_freq_pairs; w += 2) {
      double s = default_row_sign(w - 1);
      p.wire_angles[w] = {-s * M_PI / 4, s * M_PI / 4};  // transmission
    }
    for (int c = 0; c < spec.num_freq_pairs; c += 2) {
      double s = default_row_sign(c);
      p.control_angles[c] = {s * M_PI / 4, s * M_PI / 4};
      p.control_signs[c] = default_row_sign(c);
    }
    return p;
  }

  void emit_single(int row, const Mat2& target) {
    Mat2 eff = target * pending[row].inverse();
    int s = default_row_sign(row - 1);
    Mat t(2, 2);
    t << eff(0, 0), eff(0, 1), eff(1, 0), eff(1, 1);
    VDecomposition dec = solve_two_v(t, s, s);
    StepPlan p1 = base_plan(), p2 = base_plan();
    p1.wire_angles[row] = {dec.angles[0], dec.angles[1]};
    p2.wire_angles[row] = {dec.angles[2], dec.angles[3]};
    out.steps.push_back(p1);
    out.steps.push_back(p2);
    pending[row] = Mat2::Identity();
  }

  void flush_pending(int row) {
    if (!is_identity2(pending[row])) emit_single(row, Mat2::Identity());
  }
};

}  // namespace

AngleSchedule compile_program(const Program& program, const LatticeSpec& spec) {
  spec.check();
  if (program.wires < 1)
    throw InvalidArgumentError("compile_program: need at least one wire");
  int top_row = 2 * program.wires - 1;
  if (top_row > spec.num_freq_pairs - 2)
    throw DimensionError(
        "compile_program: lattice has too few frequency rows for the program");
  Compiler cc(spec);
  auto row_of = [&](int wire) {
    if (wire < 0 || wire >= program.wires)
      throw InvalidArgumentError("compile_program: wire index out of range");
    return 2 * wire + 1;
  };
  for (int w = 0; w < program.wires; ++w) {
    cc.out.encoded_wires.push_back(row_of(w));
    cc.pending[row_of(w)] = Mat2::Identity();
  }
  std::sort(cc.out.encoded_wires.rbegin(), cc.out.encoded_wires.rend());

  for (const Program::Step& st : program.steps) {
    for (int w : st.wire)
      if (cc.readout_done.count(row_of(w)))
        throw InvalidArgumentError("compile_program: wire already read out");
    if (st.type == "identity") {
      if (st.wire.size() != 1)
        throw InvalidArgumentError("compile_program: identity takes one wire");
      int row = row_of(st.wire[0]);
      if (is_identity2(cc.pending[row]))
        cc.out.steps.push_back(cc.base_plan());
      else
        cc.emit_single(row, Mat2::Identity());
    } else if (st.type == "single") {
      if (st.wire.size() != 1)
        throw InvalidArgumentError("compile_program: single takes one wire");
      cc.emit_single(row_of(st.wire[0]), single_target_from_params(st.params));
    } else if (st.type == "cz") {
      if (st.wire.size() != 2)
        throw InvalidArgumentError("compile_program: cz takes two wires");
      int ra = row_of(st.wire[0]), rb = row_of(st.wire[1]);
      if (ra > rb) std::swap(ra, rb);
      if (rb != ra + 2)
        throw InvalidArgumentError("compile_program: cz wires must be adjacent");
      cc.flush_pending(ra);
      cc.flush_pending(rb);
      double phi;
      if (st.params.count("phi")) {
        phi = st.params.at("phi");
      } else if (st.params.count("g")) {
        phi = std::atan2(2.0, st.params.at("g"));
      } else {
        throw InvalidArgumentError("compile_program: cz needs phi or g");
      }
      int s = default_row_sign(ra - 1);
      std::array<double, 10> th = cz_angles(phi, s);
      StepPlan p = cc.base_plan();
      p.wire_angles[rb] = {th[2], th[3]};
      p.wire_angles[ra] = {th[6], th[7]};
      p.control_angles[ra + 1] = {th[4], th[5]};
      p.control_signs.erase(ra + 1);
      p.cz_pairs.push_back({ra, rb});
      cc.out.steps.push_back(p);
      cc.pending[rb] = rot2(-s * 3 * M_PI / 4.0);
      cc.pending[ra] = rot2(s * M_PI / 4.0);
    } else if (st.type == "readout") {
      if (st.wire.size() != 1)
        throw InvalidArgumentError("compile_program: readout takes one wire");
      int row = row_of(st.wire[0]);
      double theta = st.params.count("theta") ? st.params.at("theta") : M_PI / 2;
      const Mat2& P = cc.pending[row];
      if ((P * P.transpose() - Mat2::Identity()).cwiseAbs().maxCoeff() > 1e-9)
        cc.flush_pending(row);
      double psi = std::atan2(cc.pending[row](1, 0), cc.pending[row](0, 0));
      StepPlan p = cc.base_plan();
      p.wire_angles[row] = {theta - psi, theta - psi};
      cc.out.steps.push_back(p);
      cc.readout_done.insert(row);
      cc.out.readout_wires.push_back(row);
      cc.pending[row] = Mat2::Identity();
    } else {
      throw InvalidArgumentError("compile_program: unknown step type " + st.type);
    }
  }
  for (auto& [row, P] : cc.pending)
    if (!is_identity2(P, 1e-12)) cc.out.residual_rotations[row] = Mat(P);
  return cc.out;
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

namespace {

// Covariance of a mode block of a pure graph state, (q...,p...) ordering.
Mat block_covariance(const GraphState& state, const std::vector<int>& modes) {
  int n = state.num_modes(), k = static_cast<int>(modes.size());
  Mat U = state.Z.imag(), V = state.Z.real();
  Eigen::PartialPivLU<Mat> lu(U);
  Mat E = Mat::Zero(n, k);
  for (int j = 0; j < k; ++j) E(modes[j], j) = 1.0;
  Mat X = lu.solve(E);        // U^{-1} restricted to block columns
  Mat Y = lu.solve(V * E);    // U^{-1} V restricted to block columns
  Mat sig(2 * k, 2 * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      sig(i, j) = 0.5 * X(modes[i], j);
      sig(i, k + j) = 0.5 * Y(modes[i], j);
      sig(k + j, i) = sig(i, k + j);
      sig(k + i, k + j) =
          0.5 * (U(modes[i], modes[j]) + V.row(modes[i]).dot(Y.col(j)));
    }
  }
  return 0.5 * (sig + sig.transpose());
}

struct ExecutionTrace {
  RunResult result;
  // (step, wire row) -> outcome pair, for the analytic feedforward
  std::map<std::pair<int, int>, MacronodeOutcome> wire_outcomes;
  bool has_cz = false;
};

ExecutionTrace execute(const LatticeSpec& spec, const AngleSchedule& schedule,
                       const std::map<int, GraphState>& inputs,
                       const RunOptions& opts) {
  spec.check();
  int nsteps = static_cast<int>(schedule.steps.size());
  if (nsteps > spec.num_time_bins)
    throw DimensionError("run_program: more steps than time bins");
  std::mt19937_64 local_rng(opts.seed.value_or(0));
  std::mt19937_64* rng = opts.rng ? opts.rng : &local_rng;
  if (!opts.forced_zero && !opts.rng && !opts.seed)
    throw InvalidArgumentError("run_program: sampling requires rng or seed");

  LatticeState lat = build_bsl(spec);
  for (int m = 1; m < spec.num_freq_pairs; m += 2) {
    auto it = inputs.find(m);
    encode_input(lat, 0, m, it != inputs.end() ? it->second : vacuum_state(1));
  }

  ExecutionTrace tr;
  auto record = [&](int bin, int row, double thZ_phys, double thY_phys,
                    bool force) {
    auto fz = force ? std::optional<std::pair<double, double>>({0.0, 0.0})
                    : std::nullopt;
    size_t before = tr.result.transcript.size();
    MacronodeOutcome o = measure_macronode(lat, bin, row, thZ_phys, thY_phys,
                                           fz, rng, &tr.result.transcript);
    if (!force && opts.seed)
      for (size_t i = before; i < tr.result.transcript.size(); ++i)
        tr.result.transcript[i].seed = opts.seed;
    return o;
  };

  for (int t = 0; t < nsteps; ++t) {
    const StepPlan& plan = schedule.steps[t];
    tr.has_cz = tr.has_cz || !plan.cz_pairs.empty();
    for (int w = 1; w < spec.num_freq_pairs; w += 2) {
      auto it = plan.wire_angles.find(w);
      if (it == plan.wire_angles.end())
        throw InvalidArgumentError("run_program: step lacks angles for wire row " +
                                   std::to_string(w));
      auto [thZ, thY] = it->second;
      tr.wire_outcomes[{t, w}] =
          record(t, w, thZ, thY + M_PI, opts.forced_zero);
    }
    for (int c = 0; c < spec.num_freq_pairs; c += 2) {
      auto it = plan.control_angles.find(c);
      if (it == plan.control_angles.end())
        throw InvalidArgumentError(
            "run_program: step lacks angles for control row " + std::to_string(c));
      record(t, c, it->second.first, it->second.second,
             opts.forced_zero || opts.controls_forced_zero);
    }
  }

  for (int w : schedule.encoded_wires) {
    if (std::find(schedule.readout_wires.begin(), schedule.readout_wires.end(),
                  w) != schedule.readout_wires.end())
      continue;
    decompose_macronode(lat, nsteps, w);
    tr.result.output_wires.push_back(w);
    tr.result.output_modes.push_back(lat.require({nsteps, w, Pol::Y}));
  }
  tr.result.output_mean = mean_block(lat.state, tr.result.output_modes);
  tr.result.final_state = lat.state;
  return tr;
}

}  // namespace

RunResult run_program(const LatticeSpec& spec, const AngleSchedule& schedule,
                      const std::map<int, GraphState>& inputs,
                      const RunOptions& opts) {
  ExecutionTrace tr = execute(spec, schedule, inputs, opts);
  RunResult res = std::move(tr.result);
  int k = static_cast<int>(res.output_wires.size());
  if (opts.forced_zero) {
    res.accumulated_displacement = Vec::Zero(2 * k);
  } else {
    RunOptions zero = opts;
    zero.forced_zero = true;
    ExecutionTrace twin = execute(spec, schedule, inputs, zero);
    res.accumulated_displacement = res.output_mean - twin.result.output_mean;
  }
  if (!tr.has_cz) {
    // Analytic per-wire accumulation: push each step's outcome displacement
    // through the remaining ideal single-wire channels.
    double t = spec.t();
    Vec ff = Vec::Zero(2 * k);
    for (int wi = 0; wi < k; ++wi) {
      int w = res.output_wires[wi];
      double s = default_row_sign(w - 1);
      Eigen::Vector2d d(0.0, 0.0);
      Mat2 SN = sq2(1.0 / t);
      Mat2 SVc = v2(-s * M_PI / 4, s * M_PI / 4);
      for (int step = 0; step < static_cast<int>(schedule.steps.size()); ++step) {
        auto [thZ, thY] = schedule.steps[step].wire_angles.at(w);
        const MacronodeOutcome& o = tr.wire_outcomes.at({step, w});
        cdouble alpha =
            displacement_from_outcomes(-o.out_Z, -o.out_Y, thZ, thY);
        Vec shift = displacement_mean_shift(alpha);
        d = v2(thZ, thY) * d + Eigen::Vector2d(shift(0), shift(1));
        d = SN * (SVc * (SN * d));
      }
      ff(wi) = d(0);
      ff(k + wi) = d(1);
    }
    res.wire_feedforward = ff;
  }
  return res;
}

LogicalChannel extract_logical_channel(const LatticeSpec& spec,
                                       const AngleSchedule& schedule) {
  RunOptions opts;
  opts.forced_zero = true;
  ExecutionTrace base = execute(spec, schedule, {}, opts);
  int k = static_cast<int>(base.result.output_wires.size());
  LogicalChannel ch;
  ch.d = base.result.output_mean;
  ch.S = Mat::Zero(2 * k, 2 * k);
  for (int wi = 0; wi < k; ++wi) {
    for (int comp = 0; comp < 2; ++comp) {
      GraphState in = vacuum_state(1);
      in.mean(comp) = 1.0;
      std::map<int, GraphState> inputs{{base.result.output_wires[wi], in}};
      ExecutionTrace run = execute(spec, schedule, inputs, opts);
      ch.S.col(comp * k + wi) = run.result.output_mean - ch.d;
    }
  }
  Mat sigma = block_covariance(base.result.final_state,
                               base.result.output_modes);
  ch.noise_excess = sigma - 0.5 * ch.S * ch.S.transpose();
  ch.residual = symplectic_defect(ch.S);
  return ch;
}

}  // namespace bslsim
