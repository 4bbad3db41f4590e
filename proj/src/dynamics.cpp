#include "su2holo/dynamics.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>

#include "su2holo/hamiltonian.hpp"
#include "su2holo/spectrum.hpp"

namespace su2holo {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// sine-squared ease-in/out: zero parameter velocity at segment boundaries
double ramp(double tau, bool smooth) {
  return smooth ? tau - std::sin(kTwoPi * tau) / kTwoPi : tau;
}

struct Schedule {
  struct Leg {
    PathSegment seg;
    double t0, t1;
  };
  std::vector<Leg> legs;
  bool smooth = true;

  std::pair<double, double> at(double t) const {
    const Leg* leg = &legs.back();
    for (const auto& l : legs) {
      if (t <= l.t1) {
        leg = &l;
        break;
      }
    }
    const double span = leg->t1 - leg->t0;
    const double tau = span > 0.0 ? std::clamp((t - leg->t0) / span, 0.0, 1.0)
                                  : 0.0;
    const double s = ramp(tau, smooth);
    if (const auto* r = std::get_if<RadialSegment>(&leg->seg))
      return {r->b_start + s * (r->b_end - r->b_start), r->phi};
    const auto& pr = std::get<PrecessionSegment>(leg->seg);
    return {pr.b, pr.phi_start + s * kTwoPi * pr.turns};
  }
};

Schedule build_schedule(const ControlPath& path, double t_total, bool smooth) {
  std::vector<double> weights;
  double total_w = 0.0;
  for (const auto& seg : path.segments) {
    double w;
    if (const auto* r = std::get_if<RadialSegment>(&seg))
      w = std::abs(r->b_end - r->b_start);
    else {
      const auto& pr = std::get<PrecessionSegment>(seg);
      w = pr.b * kTwoPi * pr.turns;
    }
    weights.push_back(w);
    total_w += w;
  }
  Schedule sch;
  sch.smooth = smooth;
  double t = 0.0;
  for (std::size_t i = 0; i < path.segments.size(); ++i) {
    // zero-length segments (a hold at fixed parameters) share time evenly
    const double frac =
        total_w > 0.0 ? weights[i] / total_w : 1.0 / path.segments.size();
    Schedule::Leg leg{path.segments[i], t, t + frac * t_total};
    t = leg.t1;
    sch.legs.push_back(leg);
  }
  sch.legs.back().t1 = t_total;
  return sch;
}

using OdeState = std::vector<Complex>;

}  // namespace

PropagationResult propagate_with_hamiltonian(
    const std::function<Matrix8(double)>& h_of_t, double t_total,
    const Vector8& initial, const PropagationOptions& opt) {
  if (!(t_total > 0.0))
    throw std::invalid_argument("propagate: T_total must be > 0");
  if (std::abs(initial.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("propagate: initial state not normalized");

  namespace ode = boost::numeric::odeint;
  const double local_tol = std::min(1e-10, opt.tol / 10.0);

  auto rhs = [&](const OdeState& x, OdeState& dxdt, double t) {
    const Matrix8 h = h_of_t(t);
    Eigen::Map<const Vector8> psi(x.data());
    Eigen::Map<Vector8> out(dxdt.data());
    out = -kI * (h * psi);
  };

  OdeState state(initial.data(), initial.data() + 8);
  PropagationResult res;
  res.total_time = t_total;

  auto stepper = ode::make_controlled(
      local_tol, local_tol, ode::runge_kutta_dopri5<OdeState>());
  if (opt.n_samples > 0) {
    std::vector<double> times;
    for (int k = 0; k <= opt.n_samples; ++k)
      times.push_back(t_total * k / opt.n_samples);
    ode::integrate_times(stepper, rhs, state, times.begin(), times.end(),
                         t_total / 1000.0,
                         [&](const OdeState& x, double t) {
                           res.samples.emplace_back(
                               t, Eigen::Map<const Vector8>(x.data()));
                         });
  } else {
    ode::integrate_adaptive(stepper, rhs, state, 0.0, t_total,
                            t_total / 1000.0);
  }

  res.final_state = Eigen::Map<const Vector8>(state.data());
  const double drift = std::abs(res.final_state.norm() - 1.0);
  if (drift > 10.0 * opt.tol)
    throw std::runtime_error("propagate: norm drift exceeded tolerance");
  res.leakage = 0.0;
  return res;
}

PropagationResult schrodinger_propagate(const ControlPath& path,
                                        double t_total, const Vector8& initial,
                                        const PropagationOptions& opt) {
  path.validate();
  const Schedule sch = build_schedule(path, t_total, opt.smooth_ramp);
  const HamiltonianBuilder builder;
  const Matrix8 offset = opt.energy_offset * Matrix8::Identity();

  auto h_of_t = [&](double t) {
    const auto [b, phi] = sch.at(t);
    return Matrix8(builder.assemble(path.g, path.j, b, phi) + offset);
  };
  PropagationResult res =
      propagate_with_hamiltonian(h_of_t, t_total, initial, opt);

  const auto [b_end, phi_end] = path.end_point();
  const DegenerateStates st = closed_form_degenerate_states(b_end, phi_end, path.g);
  res.leakage = 1.0 - std::norm(st.chi1.dot(res.final_state)) -
                std::norm(st.chi2.dot(res.final_state));
  return res;
}

ExtractedHolonomy extract_geometric_unitary(const ControlPath& path,
                                            double t_total,
                                            const PropagationOptions& opt) {
  path.validate();
  if (!path.is_loop())
    throw std::invalid_argument("extract_geometric_unitary: path is not a loop");
  const auto [b0, phi0] = path.start_point();
  const DegenerateStates st = closed_form_degenerate_states(b0, phi0, path.g);

  ExtractedHolonomy out;
  out.leakage = 0.0;
  const std::array<Vector8, 2> initials{st.chi1, st.chi2};
  Matrix2 u_geo;
  for (int col = 0; col < 2; ++col) {
    const PropagationResult res =
        schrodinger_propagate(path, t_total, initials[col], opt);
    if (res.leakage > 0.1)
      throw std::runtime_error(
          "extract_geometric_unitary: leakage too large for a meaningful "
          "projection");
    u_geo(0, col) = st.chi1.dot(res.final_state);
    u_geo(1, col) = st.chi2.dot(res.final_state);
    out.leakage += 0.5 * res.leakage;
  }

  // Divide out the dynamical phase e^{-i E0 T}; the subspace energy E0 is
  // read off the start-point frame (exactly zero unless an offset is added).
  const HamiltonianBuilder builder;
  const Matrix8 h0 = builder.assemble(path.g, path.j, b0, phi0) +
                     opt.energy_offset * Matrix8::Identity();
  const double e0 = st.chi1.dot(h0 * st.chi1).real();
  u_geo *= std::exp(kI * e0 * t_total);

  out.u_geo = u_geo;
  out.deviation_from_unitarity =
      (u_geo.adjoint() * u_geo - Matrix2::Identity()).cwiseAbs().maxCoeff();
  return out;
}

std::vector<AdiabaticityRow> adiabaticity_report(
    const ControlPath& path, const std::vector<double>& t_list,
    const PropagationOptions& opt) {
  if (t_list.empty())
    throw std::invalid_argument("adiabaticity_report: empty T list");
  const Matrix2 u_closed = closed_form_path_holonomy(path).u;
  std::vector<AdiabaticityRow> rows;
  for (double t : t_list) {
    const ExtractedHolonomy ex = extract_geometric_unitary(path, t, opt);
    rows.push_back({t, ex.leakage, 1.0 - gate_overlap(u_closed, ex.u_geo)});
  }
  return rows;
}

double gate_overlap(const Matrix2& a, const Matrix2& b) {
  return 0.5 * std::abs((a.adjoint() * b).trace());
}

}  // namespace su2holo
