#include "su2holo/connection.hpp"

#include <cmath>

#include "su2holo/hamiltonian.hpp"
#include "su2holo/spectrum.hpp"

namespace su2holo {

ConnectionOneForm analytic_connection(double b, double phi, double g) {
  if (!(b > 0.0) || !(g > 0.0))
    throw std::invalid_argument("analytic_connection: need B > 0 and g > 0");
  const AuxQuantities q = aux_quantities(b, g);
  const double b2 = b * b;
  const double zc = 2.0 * b2 * (b2 + 2.0 * g * g) / q.k;  // sigma_z/2 coeff
  const double xc = 2.0 * g * b2 * b * q.a / q.k;
  const double rc = 2.0 * g * b2 * q.a_prime / q.k;
  const double c3 = std::cos(3.0 * phi);
  const double s3 = std::sin(3.0 * phi);

  ConnectionOneForm c;
  c.b = b;
  c.phi = phi;
  c.g = g;
  c.a_phi = kI * (zc * 0.5 * sigma_z() - xc * (c3 * sigma_x() + s3 * sigma_y()));
  c.a_b = -kI * rc * (s3 * sigma_x() - c3 * sigma_y());
  return c;
}

namespace {

Matrix2 overlap_derivative(const Vector8& c1, const Vector8& c2,
                           const DegenerateStates& plus,
                           const DegenerateStates& minus, double delta) {
  const Vector8 d1 = (plus.chi1 - minus.chi1) / (2.0 * delta);
  const Vector8 d2 = (plus.chi2 - minus.chi2) / (2.0 * delta);
  Matrix2 a;
  a(0, 0) = c1.dot(d1);
  a(0, 1) = c1.dot(d2);
  a(1, 0) = c2.dot(d1);
  a(1, 1) = c2.dot(d2);
  return a;
}

void check_smooth(const DegenerateStates& at, const DegenerateStates& shifted) {
  if (std::abs(at.chi1.dot(shifted.chi1)) < 0.9 ||
      std::abs(at.chi2.dot(shifted.chi2)) < 0.9)
    throw std::runtime_error(
        "numeric_connection: gauge discontinuity between neighboring frames");
}

}  // namespace

ConnectionOneForm numeric_connection(double b, double phi, double g,
                                     double delta) {
  if (!(b > 0.0) || !(g > 0.0))
    throw std::invalid_argument("numeric_connection: need B > 0 and g > 0");
  if (!(delta > 0.0) || b - delta <= 0.0)
    throw std::invalid_argument("numeric_connection: invalid step delta");

  const DegenerateStates at = closed_form_degenerate_states(b, phi, g);
  const DegenerateStates phi_p = closed_form_degenerate_states(b, phi + delta, g);
  const DegenerateStates phi_m = closed_form_degenerate_states(b, phi - delta, g);
  const DegenerateStates b_p = closed_form_degenerate_states(b + delta, phi, g);
  const DegenerateStates b_m = closed_form_degenerate_states(b - delta, phi, g);
  check_smooth(at, phi_p);
  check_smooth(at, b_p);

  ConnectionOneForm c;
  c.b = b;
  c.phi = phi;
  c.g = g;
  c.a_phi = overlap_derivative(at.chi1, at.chi2, phi_p, phi_m, delta);
  c.a_b = overlap_derivative(at.chi1, at.chi2, b_p, b_m, delta);
  return c;
}

Complex berry_phase_nondegenerate(int level_index, double b, double g,
                                  double j, int n_steps) {
  if (level_index < 0 || level_index > 3)
    throw std::invalid_argument("berry_phase_nondegenerate: level 0..3");
  if (n_steps < 8)
    throw std::invalid_argument("berry_phase_nondegenerate: n_steps too small");
  SystemParams p{g, j, b, 0.0};
  p.validate();

  const HamiltonianBuilder builder;
  const EigenFrame frame0 = numeric_eigendecomposition(builder(p));
  std::vector<int> singles;
  for (const auto& grp : frame0.groups)
    if (grp.size() == 1) singles.push_back(grp.front());
  if (static_cast<int>(singles.size()) <= level_index)
    throw std::runtime_error(
        "berry_phase_nondegenerate: fewer nondegenerate levels than expected");

  const Vector8 v0 = frame0.states.col(singles[level_index]);
  Vector8 prev = v0;
  Complex prod = 1.0;
  for (int k = 1; k < n_steps; ++k) {
    p.phi = 2.0 * M_PI * k / n_steps;
    const EigenFrame frame = numeric_eigendecomposition(builder(p));
    int best = 0;
    double best_ov = -1.0;
    for (int col = 0; col < 8; ++col) {
      const double ov = std::abs(prev.dot(frame.states.col(col)));
      if (ov > best_ov) {
        best_ov = ov;
        best = col;
      }
    }
    if (best_ov < 0.5)
      throw std::runtime_error(
          "berry_phase_nondegenerate: lost eigenvector continuity");
    const Vector8 cur = frame.states.col(best);
    prod *= prev.dot(cur);
    prev = cur;
  }
  prod *= prev.dot(v0);  // close the loop on the original frame
  return prod / std::abs(prod);
}

}  // namespace su2holo
