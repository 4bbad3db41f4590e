// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Thresholds are fixed here, not tuned at runtime.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "su2holo/connection.hpp"
#include "su2holo/dynamics.hpp"
#include "su2holo/gatedesign.hpp"
#include "su2holo/hamiltonian.hpp"
#include "su2holo/holonomy.hpp"
#include "su2holo/spectrum.hpp"

using namespace su2holo;

namespace {

int g_failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int n, const std::string& name, bool pass,
            const std::string& detail, double elapsed) {
  std::printf("criterion %d (%s): %s — %s (%.2f s)\n", n, name.c_str(),
              pass ? "PASS" : "FAIL", detail.c_str(), elapsed);
  if (!pass) ++g_failures;
}

double max_diff(const Matrix2& a, const Matrix2& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Matrix2 align_phase(const Matrix2& u, const Matrix2& target) {
  const Complex z = (target.adjoint() * u).trace();
  if (std::abs(z) < 1e-14) return u;
  return u * (std::conj(z) / std::abs(z));
}

ControlPath precession_loop(double b, int n, double j = 0.5) {
  ControlPath path;
  path.g = 1.0;
  path.j = j;
  path.segments.push_back(PrecessionSegment{b, 0.0, n});
  return path;
}

double fit_loglog_slope(const std::vector<double>& x,
                        const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void criterion_1_eigenstructure() {
  Timer timer;
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> ug(0.5, 2.0), uj(0.1, 1.0),
      ub(0.1, 4.0), uphi(0.0, 2.0 * M_PI);
  double worst_energy = 0.0, worst_state = 0.0;
  int done = 0;
  while (done < 120) {
    SystemParams p{ug(rng), uj(rng), ub(rng), uphi(rng)};
    if (p.at_forbidden_field(1e-4)) continue;
    ++done;
    const Matrix8 h = build_hamiltonian(p);
    const auto closed = closed_form_eigenvalues(p);
    const auto frame = numeric_eigendecomposition(h);
    for (int i = 0; i < 8; ++i)
      worst_energy = std::max(
          worst_energy, std::abs(frame.energies(i) - closed.sorted[i]));
    const DegenerateStates st = closed_form_degenerate_states(p.b, p.phi, p.g);
    worst_state = std::max(worst_state, (h * st.chi1).norm());
    worst_state = std::max(worst_state, (h * st.chi2).norm());
    worst_state = std::max(worst_state, (h * st.chi3 + p.j * st.chi3).norm());
    worst_state = std::max(worst_state, (h * st.chi4 + p.j * st.chi4).norm());
  }
  const double elapsed = timer.seconds();
  const bool pass =
      worst_energy < 1e-10 && worst_state < 1e-9 && elapsed < 5.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "120 points, max |dE| = %.2e, max residual = %.2e",
                worst_energy, worst_state);
  report(1, "eigenstructure", pass, buf, elapsed);
}

void criterion_2_connection() {
  Timer timer;
  const double bs[] = {0.5, 1.0, 1.5, 2.5, 3.0};
  const double phis[] = {0.0, 0.7, 1.9, 3.4, 5.1};
  double worst = 0.0;
  for (double b : bs)
    for (double phi : phis) {
      const ConnectionOneForm an = analytic_connection(b, phi, 1.0);
      const ConnectionOneForm nu = numeric_connection(b, phi, 1.0, 1e-4);
      worst = std::max(worst, max_diff(an.a_phi, nu.a_phi));
      worst = std::max(worst, max_diff(an.a_b, nu.a_b));
    }

  const ConnectionOneForm ref = analytic_connection(1.3, 0.9, 1.0);
  std::vector<double> deltas = {1e-2, 1e-3, 1e-4}, errs;
  for (double d : deltas) {
    const ConnectionOneForm nu = numeric_connection(1.3, 0.9, 1.0, d);
    errs.push_back(
        std::max(max_diff(ref.a_phi, nu.a_phi), max_diff(ref.a_b, nu.a_b)));
  }
  const double slope = fit_loglog_slope(deltas, errs);
  const double elapsed = timer.seconds();
  const bool pass =
      worst <= 1e-6 && std::abs(slope - 2.0) < 0.1 && elapsed < 5.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "5x5 grid max deviation = %.2e at delta = 1e-4, slope = %.3f",
                worst, slope);
  report(2, "connection", pass, buf, elapsed);
}

void criterion_3_closed_form_holonomy() {
  Timer timer;
  double worst = 0.0;
  for (double b : {0.5, 1.0, 1.9587, 3.0}) {
    const Matrix2 closed = precession_holonomy_u_xz(b, 1.0, 1);
    const auto po = path_ordered_exponential(precession_loop(b, 1), 1e4);
    worst = std::max(worst, max_diff(closed, po.u));
  }
  const double elapsed = timer.seconds();
  const bool pass = worst <= 1e-8 && elapsed < 10.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "max deviation = %.2e at 1e4 steps per unit", worst);
  report(3, "closed-form holonomy", pass, buf, elapsed);
}

// shared with criteria 6 and 8
double g_infidelity_t400 = 1.0;

void criterion_4_adiabatic_convergence() {
  Timer timer;
  const ControlPath path = precession_loop(1.0, 1);
  const std::vector<double> ts = {50.0, 100.0, 200.0, 400.0};
  const auto rows = adiabaticity_report(path, ts);
  std::vector<double> infid;
  for (const auto& r : rows) infid.push_back(std::max(r.infidelity, 1e-16));
  const double slope = fit_loglog_slope(ts, infid);
  g_infidelity_t400 = rows.back().infidelity;
  const double elapsed = timer.seconds();
  const bool pass = slope <= -0.7 && rows.back().infidelity < rows.front().infidelity &&
                    rows.back().leakage <= 1e-3 && elapsed < 120.0;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "slope = %.2f, infidelity(T=400) = %.2e, leakage(T=400) = %.2e",
                slope, rows.back().infidelity, rows.back().leakage);
  report(4, "adiabatic convergence", pass, buf, elapsed);
}

void criterion_5_paper_roots() {
  Timer timer;
  const double expected[] = {1.9587, 1.3716, 0.8375};
  double worst_b = 0.0, worst_cos = 0.0;
  for (int m1 = 0; m1 < 3; ++m1) {
    const double b = solve_field(m1, 1.0);
    worst_b = std::max(worst_b, std::abs(b - expected[m1]));
    worst_cos = std::max(
        worst_cos, std::abs(std::cos(2.0 * M_PI * aux_quantities(b, 1.0).a)));
  }
  const double elapsed = timer.seconds();
  const bool pass = worst_b < 1e-3 && worst_cos < 1e-10 && elapsed < 1.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "max |B - ref| = %.2e, max |cos 2piA| = %.2e",
                worst_b, worst_cos);
  report(5, "paper roots", pass, buf, elapsed);
}

void criterion_6_gate_designs() {
  Timer timer;
  bool pass = true;
  std::string detail;
  for (GateTarget target : {GateTarget::Hadamard, GateTarget::Not}) {
    const GateDesign d = design_gate(target, 0, 1.0);
    pass = pass && d.achieved_fidelity >= 1.0 - 1e-8;

    ControlPath loop = precession_loop(d.b_over_g, 1);
    const ExtractedHolonomy ex = extract_geometric_unitary(loop, 400.0);
    Matrix2 r;
    r << std::cos(d.beta), -std::sin(d.beta), std::sin(d.beta),
        std::cos(d.beta);
    const Matrix2 u_dyn = r.adjoint() * ex.u_geo * r;
    const double dyn_infid = 1.0 - gate_fidelity(d.u_target, u_dyn);
    // the end-to-end error must be explained by this loop's own adiabatic
    // error at T = 400, measured the same way as in criterion 4
    const double adiab_err =
        1.0 - gate_overlap(closed_form_path_holonomy(loop).u, ex.u_geo);
    pass = pass && dyn_infid <= 1.5 * adiab_err + 1e-8 && dyn_infid <= 5e-3;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%s: closed-form fid = %.10f, dynamics infid = %.2e "
                  "(adiabatic error %.2e); ",
                  target == GateTarget::Hadamard ? "H" : "NOT",
                  d.achieved_fidelity, dyn_infid, adiab_err);
    detail += buf;
  }
  report(6, "gate designs", pass, detail, timer.seconds());
}

void criterion_7_berry_phase() {
  Timer timer;
  double worst = 0.0;
  for (int level = 0; level < 4; ++level) {
    const Complex ph = berry_phase_nondegenerate(level, 1.1, 1.0, 0.4, 720);
    worst = std::max(worst, std::abs(ph + 1.0));
  }
  const double elapsed = timer.seconds();
  const bool pass = worst < 1e-6 && elapsed < 10.0;
  char buf[120];
  std::snprintf(buf, sizeof(buf), "max |phase + 1| = %.2e over 4 levels",
                worst);
  report(7, "Berry phase", pass, buf, elapsed);
}

void criterion_8_j_insensitivity() {
  Timer timer;
  const Matrix2 u_closed = precession_holonomy_u_xz(1.0, 1.0, 1);
  std::vector<Matrix2> aligned;
  double max_dev = 0.0;
  for (double j : {0.3, 0.5, 0.8}) {
    const ExtractedHolonomy ex =
        extract_geometric_unitary(precession_loop(1.0, 1, j), 400.0);
    const Matrix2 a = align_phase(ex.u_geo, u_closed);
    max_dev = std::max(max_dev, max_diff(a, u_closed));
    aligned.push_back(a);
  }
  double max_pair = 0.0;
  for (std::size_t i = 0; i < aligned.size(); ++i)
    for (std::size_t k = i + 1; k < aligned.size(); ++k)
      max_pair = std::max(max_pair, max_diff(aligned[i], aligned[k]));
  const double elapsed = timer.seconds();
  const bool pass = max_pair <= 2.0 * max_dev + 1e-10 && max_dev < 0.02;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "max pairwise variation = %.2e, adiabatic error bar = %.2e",
                max_pair, max_dev);
  report(8, "J-insensitivity", pass, buf, elapsed);
}

void criterion_9_composition_audit() {
  Timer timer;
  const double b0 = 1.0, b1 = 1.8;
  const RadialPhase ry = radial_phase_u_y(b0, b1, 1.0);
  const Matrix2 uxz = precession_holonomy_u_xz(b1, 1.0, 1);
  const Matrix2 definitive = ry.u.adjoint() * uxz * ry.u;
  const Matrix2 simplified = uxz * ry.u * ry.u;
  const double claim_diff = max_diff(definitive, simplified);

  ControlPath path;
  path.segments.push_back(RadialSegment{b0, b1, 0.0});
  path.segments.push_back(PrecessionSegment{b1, 0.0, 1});
  path.segments.push_back(RadialSegment{b1, b0, 0.0});
  const auto po = path_ordered_exponential(path, 1e4);
  const double po_diff = max_diff(definitive, po.u);

  const double elapsed = timer.seconds();
  const bool pass = po_diff <= 1e-7;
  char buf[200];
  std::snprintf(
      buf, sizeof(buf),
      "composition vs path-ordered = %.2e; reported simplified-identity "
      "discrepancy = %.2e (documented, not asserted)",
      po_diff, claim_diff);
  report(9, "composition audit", pass, buf, elapsed);
}

}  // namespace

int main() {
  criterion_1_eigenstructure();
  criterion_2_connection();
  criterion_3_closed_form_holonomy();
  criterion_4_adiabatic_convergence();
  criterion_5_paper_roots();
  criterion_6_gate_designs();
  criterion_7_berry_phase();
  criterion_8_j_insensitivity();
  criterion_9_composition_audit();
  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
