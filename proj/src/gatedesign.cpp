#include "su2holo/gatedesign.hpp"

#include <cmath>
#include <vector>

#include "su2holo/holonomy.hpp"
#include "su2holo/spectrum.hpp"

namespace su2holo {

namespace {

Matrix2 basis_rotation(double beta) {
  Matrix2 r;
  r << std::cos(beta), -std::sin(beta), std::sin(beta), std::cos(beta);
  return r;
}

double a_of_b(double b, double g) { return aux_quantities(b, g).a; }

}  // namespace

Matrix2 rotated_holonomy(double b, double g, double beta) {
  const Matrix2 r = basis_rotation(beta);
  return r.adjoint() * precession_holonomy_u_xz(b, g, 1) * r;
}

Matrix2 rotated_holonomy_direct(double b, double g, double beta) {
  const AuxQuantities q = aux_quantities(b, g);
  const double c = std::cos(2.0 * q.a * M_PI);
  const double s = std::sin(2.0 * q.a * M_PI);
  const double lx = 2.0 * g * b * b * b / q.k;
  const double lz = q.l / q.k;
  const double c2 = std::cos(2.0 * beta);
  const double s2 = std::sin(2.0 * beta);
  const double zc = lz * c2 + lx * s2;
  const double xc = lz * s2 - lx * c2;
  return -c * Matrix2::Identity() -
         kI * s * (zc * sigma_z() - xc * sigma_x());
}

double solve_field(int m1, double g) {
  if (m1 < 0 || m1 > 2)
    throw std::invalid_argument(
        "solve_field: m1 must be 0, 1 or 2 (the radicand 39 - 4 m1 (m1+1) "
        "is negative for m1 >= 3)");
  if (!(g > 0.0)) throw std::invalid_argument("solve_field: g must be > 0");
  const double q = (1.0 + 2.0 * m1) * (1.0 + 2.0 * m1);
  const double rad = (39.0 - 4.0 * m1 * (m1 + 1)) * q;
  const double num = 2.0 * (-12.0 + std::sqrt(rad));
  const double den = 4.0 * m1 * (m1 + 1) - 3.0;
  return g * std::sqrt(num / den);
}

double hadamard_basis_angle(double b, double g, int m2) {
  const AuxQuantities q = aux_quantities(b, g);
  if (std::abs(q.l) < 1e-12 * q.k)
    throw std::invalid_argument(
        "hadamard_basis_angle: L vanishes (B = 2g); pick a different m1 root");
  const double r = 2.0 * g * b * b * b / q.l;
  const double num = 1.0 + r + std::sqrt(2.0 * (1.0 + r * r));
  const double den = 1.0 - r;
  // two-argument arctan keeps the branch continuous through den = 0
  return std::atan2(num, den) - m2 * M_PI / 2.0;
}

double solve_field_for_a(double a_target, double g) {
  double lo = 1e-9 * g, hi = 100.0 * g;
  const double a_lo = a_of_b(lo, g);   // ~ 3/2
  const double a_hi = a_of_b(hi, g);   // ~ -1/2
  if (!(a_target < a_lo) || !(a_target > a_hi))
    throw std::invalid_argument("solve_field_for_a: target outside range");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (a_of_b(mid, g) > a_target)
      lo = mid;  // A decreases with B
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Matrix2 target_matrix(GateTarget target, double theta) {
  switch (target) {
    case GateTarget::Hadamard:
      return (sigma_x() + sigma_z()) / std::sqrt(2.0);
    case GateTarget::Not:
      return sigma_x();
    case GateTarget::SqrtINot:
      // square root of i*NOT with the positive-real-trace branch
      return (Matrix2::Identity() + kI * sigma_x()) / std::sqrt(2.0);
    case GateTarget::Phase: {
      Matrix2 m = Matrix2::Identity();
      m(1, 1) = std::exp(kI * theta);
      return m;
    }
  }
  throw std::invalid_argument("target_matrix: unknown target");
}

double gate_fidelity(const Matrix2& u_target, const Matrix2& u) {
  return 0.5 * std::abs((u_target.adjoint() * u).trace());
}

namespace {

// Axis-alignment synthesis: match the canonical rotation angle through B
// (the angle is basis-independent), then rotate the holonomy axis onto the
// target axis, which must lie in the chi-frame (x,z)-plane.
GateDesign synthesize_in_plane(GateTarget target, double g, double theta) {
  GateDesign d;
  d.target = target;
  d.theta = theta;
  d.u_target = target_matrix(target, theta);

  const RotationDecomposition tdec = rotation_decomposition(d.u_target);
  if (tdec.axis_defined && std::abs(tdec.axis.y()) > 1e-9) {
    d.feasible = false;
    d.message = "target rotation axis has a y component; unreachable by a "
                "single precession";
    return d;
  }
  const double psi_t = std::atan2(tdec.axis.x(), tdec.axis.z());
  const double a0 = tdec.angle / (4.0 * M_PI);

  double best_fid = -1.0;
  for (int sign : {+1, -1}) {
    for (int k = -1; k <= 2; ++k) {
      const double a_cand = sign * a0 + k;
      if (!(a_cand > -0.4999 && a_cand < 1.4999)) continue;
      double b;
      try {
        b = solve_field_for_a(a_cand, g);
      } catch (const std::invalid_argument&) {
        continue;
      }
      const AuxQuantities q = aux_quantities(b, g);
      const double psi_h = std::atan2(2.0 * g * b * b * b / q.k, q.l / q.k);
      for (int flip = 0; flip < 2; ++flip) {
        const double beta = 0.5 * (psi_h - psi_t) + flip * M_PI / 2.0;
        const Matrix2 u = rotated_holonomy(b, g, beta);
        const double fid = gate_fidelity(d.u_target, u);
        if (fid > best_fid) {
          best_fid = fid;
          d.b_over_g = b / g;
          d.beta = beta;
          d.u_closed = u;
        }
      }
    }
  }
  d.achieved_fidelity = best_fid;
  d.feasible = best_fid >= 1.0 - 1e-8;
  if (!d.feasible)
    d.message = "no field magnitude reproduces the target rotation angle";
  return d;
}

}  // namespace

GateDesign design_gate(GateTarget target, int m1, double g, double theta,
                       int m2) {
  if (!(g > 0.0)) throw std::invalid_argument("design_gate: g must be > 0");
  switch (target) {
    case GateTarget::Hadamard:
    case GateTarget::Not: {
      GateDesign d;
      d.target = target;
      d.m1 = m1;
      d.m2 = m2;
      const double b = solve_field(m1, g);
      d.b_over_g = b / g;
      d.beta = hadamard_basis_angle(b, g, m2);
      if (target == GateTarget::Not) d.beta -= M_PI / 8.0;
      d.u_target = target_matrix(target);
      d.u_closed = rotated_holonomy(b, g, d.beta);
      d.achieved_fidelity = gate_fidelity(d.u_target, d.u_closed);
      d.feasible = d.achieved_fidelity >= 1.0 - 1e-8;
      return d;
    }
    case GateTarget::SqrtINot:
      return synthesize_in_plane(target, g, 0.0);
    case GateTarget::Phase: {
      if (!(std::abs(theta) < 2.0 * M_PI)) {
        GateDesign d;
        d.target = target;
        d.theta = theta;
        d.feasible = false;
        d.message = "phase angle must lie in (-2*pi, 2*pi); the single-"
                    "precession rotation angle cannot exceed a full turn";
        return d;
      }
      return synthesize_in_plane(target, g, theta);
    }
  }
  throw std::invalid_argument("design_gate: unknown target");
}

}  // namespace su2holo
