#pragma once

#include <variant>
#include <vector>

#include "su2holo/types.hpp"

namespace su2holo {

/// Change B at fixed phi.
struct RadialSegment {
  double b_start, b_end, phi;
};

/// Rotate phi by 2*pi*turns at fixed B.
struct PrecessionSegment {
  double b;
  double phi_start;
  int turns;
};

using PathSegment = std::variant<RadialSegment, PrecessionSegment>;

/// Piecewise control curve (B(t), phi(t)); segments must be continuous,
/// stay at B > 0 and avoid B = 2g.
struct ControlPath {
  std::vector<PathSegment> segments;
  double g = 1.0;
  double j = 0.5;

  void validate() const;
  bool is_loop(double eps = 1e-9) const;
  /// (B, phi) at the start / end of the curve.
  std::pair<double, double> start_point() const;
  std::pair<double, double> end_point() const;
};

enum class HolonomyMethod { ClosedForm, PathOrdered, Schrodinger };

struct HolonomyResult {
  Matrix2 u;  // in the chi_{1,2} frame of the path's start point
  HolonomyMethod method;
};

enum class StepSpacing { Uniform, CosineClustered };

/// Product of midpoint-rule incremental exponentials exp{-A_i dlambda^i}
/// along the path. steps_per_unit counts steps per radian of phi and per
/// g-unit of B.
HolonomyResult path_ordered_exponential(const ControlPath& path,
                                        double steps_per_unit = 1000,
                                        StepSpacing spacing = StepSpacing::Uniform);

struct RadialPhase {
  Matrix2 u;     // exp{-i theta sigma_y / 2}, valid at phi = 0
  double theta;  // 2 int_{B0}^{B1} (2 g B^2 A'/K) dB
};

/// Abelian-in-form phase of a radial segment at phi = 0, by adaptive
/// quadrature of the closed-form integrand.
RadialPhase radial_phase_u_y(double b0, double b1, double g,
                             double tol = 1e-12);

/// Closed-form holonomy of n full precessions at magnitude b starting at
/// phi = 0: rotation by 4*A*pi*n about the unit axis (2gB^3/K, 0, L/K),
/// times the (-1)^n prefactor.
Matrix2 precession_holonomy_u_xz(double b, double g, int n);

/// Same, for a precession starting at arbitrary phi (frame conjugation).
Matrix2 precession_holonomy_u_xz_at(double b, double g, int n,
                                    double phi_start);

/// Radial out, precess n turns, radial back: (U_Y)^-1 U_XZ U_Y.
HolonomyResult loop_holonomy(double b0, double b1, double g, int n);

/// Closed-form holonomy of an arbitrary radial/precession path.
HolonomyResult closed_form_path_holonomy(const ControlPath& path);

struct RotationDecomposition {
  double global_phase;           // gamma in U = e^{i gamma}[c - i s n.sigma]
  double angle;                  // alpha, canonicalized with sin(alpha/2) >= 0
  Eigen::Vector3d axis;          // unit n, (0,0,1) by convention when angle = 0
  bool axis_defined = true;
};

RotationDecomposition rotation_decomposition(const Matrix2& u);

/// exp{ i (c0 + v . sigma) } via the closed-form Pauli rotation formula.
Matrix2 exp_i_pauli(double c0, const Eigen::Vector3d& v);

}  // namespace su2holo
