#pragma once

#include "su2holo/types.hpp"

namespace su2holo {

/// Adiabatic connection within the E = 0 subspace, stored as the raw
/// overlap matrices A_cb = <chi_c|d chi_b> (anti-Hermitian), so that the
/// holonomy is U = Pexp{-int A_phi dphi - int A_B dB}.
struct ConnectionOneForm {
  Matrix2 a_phi;  // coefficient of dphi
  Matrix2 a_b;    // coefficient of dB
  double b, phi, g;
};

ConnectionOneForm analytic_connection(double b, double phi, double g);

/// Central-difference estimate of the connection from the closed-form
/// states. Throws on a gauge discontinuity (frame overlap below 0.9),
/// which cannot occur in the fixed phase convention used here.
ConnectionOneForm numeric_connection(double b, double phi, double g,
                                     double delta = 1e-5);

/// Discrete (Pancharatnam-product) Berry phase of one of the four
/// nondegenerate levels over a single full precession. `level_index`
/// counts the nondegenerate levels in ascending energy order, 0..3.
/// Returns a unit-modulus complex number.
Complex berry_phase_nondegenerate(int level_index, double b, double g,
                                  double j, int n_steps = 720);

}  // namespace su2holo
