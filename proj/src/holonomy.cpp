#include "su2holo/holonomy.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "su2holo/connection.hpp"
#include "su2holo/spectrum.hpp"

namespace su2holo {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

struct PauliCoeffs {
  double c0;
  Eigen::Vector3d v;
};

// M = i (c0 + v . sigma) for anti-Hermitian M.
PauliCoeffs antihermitian_coeffs(const Matrix2& m) {
  PauliCoeffs p;
  p.c0 = 0.5 * (m(0, 0).imag() + m(1, 1).imag());
  p.v.x() = 0.5 * (m(0, 1).imag() + m(1, 0).imag());
  p.v.y() = 0.5 * (m(0, 1).real() - m(1, 0).real());
  p.v.z() = 0.5 * (m(0, 0).imag() - m(1, 1).imag());
  return p;
}

double segment_arclength(const PathSegment& seg) {
  if (const auto* r = std::get_if<RadialSegment>(&seg))
    return std::abs(r->b_end - r->b_start);
  const auto& pr = std::get<PrecessionSegment>(seg);
  return kTwoPi * pr.turns;
}

double spaced(double tau, StepSpacing spacing) {
  return spacing == StepSpacing::Uniform ? tau
                                         : 0.5 * (1.0 - std::cos(M_PI * tau));
}

}  // namespace

Matrix2 exp_i_pauli(double c0, const Eigen::Vector3d& v) {
  const double r = v.norm();
  const double sc = r > 1e-150 ? std::sin(r) / r : 1.0;
  Matrix2 m = std::cos(r) * Matrix2::Identity() +
              kI * sc *
                  (v.x() * sigma_x() + v.y() * sigma_y() + v.z() * sigma_z());
  return std::exp(kI * c0) * m;
}

void ControlPath::validate() const {
  if (!(g > 0.0)) throw std::invalid_argument("ControlPath: g must be > 0");
  if (j == 0.0) throw std::invalid_argument("ControlPath: J must be nonzero");
  bool have_point = false;
  double cur_b = 0.0, cur_phi = 0.0;
  for (const auto& seg : segments) {
    if (const auto* r = std::get_if<RadialSegment>(&seg)) {
      if (!(r->b_start > 0.0) || !(r->b_end > 0.0))
        throw std::invalid_argument("ControlPath: B must stay positive");
      const double lo = std::min(r->b_start, r->b_end);
      const double hi = std::max(r->b_start, r->b_end);
      if (lo <= 2.0 * g && 2.0 * g <= hi)
        throw std::invalid_argument(
            "ControlPath: radial segment crosses the forbidden point B = 2g");
      if (have_point &&
          (std::abs(r->b_start - cur_b) > 1e-9 ||
           std::abs(wrap_angle(r->phi - cur_phi)) > 1e-9 &&
               std::abs(wrap_angle(r->phi - cur_phi) - kTwoPi) > 1e-9))
        throw std::invalid_argument("ControlPath: discontinuous segments");
      cur_b = r->b_end;
      cur_phi = r->phi;
    } else {
      const auto& pr = std::get<PrecessionSegment>(seg);
      if (!(pr.b > 0.0))
        throw std::invalid_argument("ControlPath: B must stay positive");
      if (std::abs(pr.b - 2.0 * g) < 1e-9)
        throw std::invalid_argument(
            "ControlPath: precession at the forbidden point B = 2g");
      if (pr.turns < 1)
        throw std::invalid_argument("ControlPath: turns must be >= 1");
      if (have_point &&
          (std::abs(pr.b - cur_b) > 1e-9 ||
           std::abs(wrap_angle(pr.phi_start - cur_phi)) > 1e-9 &&
               std::abs(wrap_angle(pr.phi_start - cur_phi) - kTwoPi) > 1e-9))
        throw std::invalid_argument("ControlPath: discontinuous segments");
      cur_b = pr.b;
      cur_phi = pr.phi_start;  // full turns leave phi unchanged mod 2pi
    }
    have_point = true;
  }
}

std::pair<double, double> ControlPath::start_point() const {
  if (segments.empty()) throw std::invalid_argument("ControlPath: empty path");
  if (const auto* r = std::get_if<RadialSegment>(&segments.front()))
    return {r->b_start, r->phi};
  const auto& pr = std::get<PrecessionSegment>(segments.front());
  return {pr.b, pr.phi_start};
}

std::pair<double, double> ControlPath::end_point() const {
  if (segments.empty()) throw std::invalid_argument("ControlPath: empty path");
  if (const auto* r = std::get_if<RadialSegment>(&segments.back()))
    return {r->b_end, r->phi};
  const auto& pr = std::get<PrecessionSegment>(segments.back());
  return {pr.b, pr.phi_start + kTwoPi * pr.turns};
}

bool ControlPath::is_loop(double eps) const {
  if (segments.empty()) return true;
  const auto [b0, phi0] = start_point();
  const auto [b1, phi1] = end_point();
  const double dphi = wrap_angle(phi1 - phi0);
  return std::abs(b1 - b0) < eps &&
         (dphi < eps || std::abs(dphi - kTwoPi) < eps);
}

HolonomyResult path_ordered_exponential(const ControlPath& path,
                                        double steps_per_unit,
                                        StepSpacing spacing) {
  path.validate();
  if (steps_per_unit < 100.0)
    throw std::invalid_argument(
        "path_ordered_exponential: steps_per_unit must be >= 100");

  Matrix2 u = Matrix2::Identity();
  for (const auto& seg : path.segments) {
    const double len = segment_arclength(seg);
    if (len == 0.0) continue;
    const int n = static_cast<int>(std::ceil(steps_per_unit * len));
    for (int k = 0; k < n; ++k) {
      const double ta = spaced(static_cast<double>(k) / n, spacing);
      const double tb = spaced(static_cast<double>(k + 1) / n, spacing);
      const double tm = 0.5 * (ta + tb);
      Matrix2 step_gen;
      if (const auto* r = std::get_if<RadialSegment>(&seg)) {
        const double db = (tb - ta) * (r->b_end - r->b_start);
        const double bm = r->b_start + tm * (r->b_end - r->b_start);
        step_gen = -analytic_connection(bm, r->phi, path.g).a_b * db;
      } else {
        const auto& pr = std::get<PrecessionSegment>(seg);
        const double total = kTwoPi * pr.turns;
        const double dphi = (tb - ta) * total;
        const double phim = pr.phi_start + tm * total;
        step_gen = -analytic_connection(pr.b, phim, path.g).a_phi * dphi;
      }
      const PauliCoeffs pc = antihermitian_coeffs(step_gen);
      u = exp_i_pauli(pc.c0, pc.v) * u;
    }
  }
  return {u, HolonomyMethod::PathOrdered};
}

RadialPhase radial_phase_u_y(double b0, double b1, double g, double tol) {
  if (!(b0 > 0.0) || !(b1 > 0.0) || !(g > 0.0))
    throw std::invalid_argument("radial_phase_u_y: need B0, B1, g > 0");
  RadialPhase out;
  if (b0 == b1) {
    out.theta = 0.0;
    out.u = Matrix2::Identity();
    return out;
  }
  const auto integrand = [g](double b) {
    const AuxQuantities q = aux_quantities(b, g);
    return 2.0 * (2.0 * g * b * b * q.a_prime / q.k);
  };
  double err = 0.0;
  out.theta = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, b0, b1, 15, tol, &err);
  if (err > 1e-10 * std::max(1.0, std::abs(out.theta)))
    throw std::runtime_error("radial_phase_u_y: quadrature did not converge");
  out.u = exp_i_pauli(0.0, {0.0, -0.5 * out.theta, 0.0});
  return out;
}

Matrix2 precession_holonomy_u_xz(double b, double g, int n) {
  if (!(b > 0.0) || !(g > 0.0) || n < 1)
    throw std::invalid_argument("precession_holonomy_u_xz: invalid arguments");
  const AuxQuantities q = aux_quantities(b, g);
  const double c = std::cos(2.0 * q.a * M_PI * n);
  const double s = std::sin(2.0 * q.a * M_PI * n);
  const double nx = 2.0 * g * b * b * b / q.k;
  const double nz = q.l / q.k;
  Matrix2 u = c * Matrix2::Identity() +
              kI * s * (nx * sigma_x() + nz * sigma_z());
  if (n % 2 != 0) u = -u;  // e^{-3 i pi n sigma_z} = (-1)^n
  return u;
}

Matrix2 precession_holonomy_u_xz_at(double b, double g, int n,
                                    double phi_start) {
  const Matrix2 frame = exp_i_pauli(0.0, {0.0, 0.0, 1.5 * phi_start});
  return frame.adjoint() * precession_holonomy_u_xz(b, g, n) * frame;
}

HolonomyResult loop_holonomy(double b0, double b1, double g, int n) {
  const RadialPhase ry = radial_phase_u_y(b0, b1, g);
  const Matrix2 uxz = precession_holonomy_u_xz(b1, g, n);
  return {ry.u.adjoint() * uxz * ry.u, HolonomyMethod::ClosedForm};
}

HolonomyResult closed_form_path_holonomy(const ControlPath& path) {
  path.validate();
  Matrix2 u = Matrix2::Identity();
  for (const auto& seg : path.segments) {
    if (const auto* r = std::get_if<RadialSegment>(&seg)) {
      const double theta = radial_phase_u_y(r->b_start, r->b_end, path.g).theta;
      // generic-phi radial axis (sin 3phi, -cos 3phi, 0)
      const Eigen::Vector3d axis{std::sin(3.0 * r->phi),
                                 -std::cos(3.0 * r->phi), 0.0};
      u = exp_i_pauli(0.0, 0.5 * theta * axis) * u;
    } else {
      const auto& pr = std::get<PrecessionSegment>(seg);
      u = precession_holonomy_u_xz_at(pr.b, path.g, pr.turns, pr.phi_start) * u;
    }
  }
  return {u, HolonomyMethod::ClosedForm};
}

RotationDecomposition rotation_decomposition(const Matrix2& u) {
  if ((u.adjoint() * u - Matrix2::Identity()).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("rotation_decomposition: matrix not unitary");
  const Complex det = u.determinant();
  const Complex s = std::sqrt(det);  // principal branch
  const Matrix2 u0 = u / s;

  double c = 0.5 * (u0(0, 0) + u0(1, 1)).real();
  Eigen::Vector3d v;
  v.x() = -0.5 * (u0(0, 1).imag() + u0(1, 0).imag());
  v.y() = 0.5 * (u0(1, 0).real() - u0(0, 1).real());
  v.z() = 0.5 * (u0(1, 1).imag() - u0(0, 0).imag());
  double gamma = std::arg(s);
  if (c < 0.0) {  // pick the branch with angle in [0, pi]
    c = -c;
    v = -v;
    gamma = gamma > 0.0 ? gamma - M_PI : gamma + M_PI;
  }

  RotationDecomposition dec;
  const double sn = v.norm();
  dec.global_phase = gamma;
  dec.angle = 2.0 * std::atan2(sn, c);
  if (sn < 1e-12) {
    dec.axis_defined = false;
    dec.axis = {0.0, 0.0, 1.0};
  } else {
    dec.axis = v / sn;
  }
  return dec;
}

}  // namespace su2holo
