#pragma once

#include <string>

#include "su2holo/types.hpp"

namespace su2holo {

enum class GateTarget { Hadamard, Not, SqrtINot, Phase };

struct GateDesign {
  GateTarget target;
  double theta = 0.0;  // Phase targets only
  int m1 = 0;
  int m2 = 0;
  double b_over_g = 0.0;
  double beta = 0.0;  // computational-basis angle, radians
  int n = 1;
  double achieved_fidelity = 0.0;
  bool feasible = true;
  std::string message;
  Matrix2 u_closed = Matrix2::Identity();
  Matrix2 u_target = Matrix2::Identity();
};

/// n = 1 precession holonomy in the basis rotated by beta about the
/// chi-frame y axis: R(beta)^dag U_XZ R(beta).
Matrix2 rotated_holonomy(double b, double g, double beta);

/// Same matrix assembled directly from its cos 2beta / sin 2beta
/// coefficient form; independent code path for cross-checking.
Matrix2 rotated_holonomy_direct(double b, double g, double beta);

/// Closed-form field magnitude with cos(2 pi A) = 0, i.e. A = (2 m1 + 1)/4.
/// Only m1 in {0, 1, 2} gives a real positive root.
double solve_field(int m1, double g);

/// Basis angle putting the single-precession holonomy on the Hadamard
/// axis; m2 shifts by half-period multiples of pi/2.
double hadamard_basis_angle(double b, double g, int m2 = 0);

/// Bisection solve of A(B) = a_target (A is strictly decreasing in B).
double solve_field_for_a(double a_target, double g);

Matrix2 target_matrix(GateTarget target, double theta = 0.0);

/// |tr(u_target^dag u)| / 2 after (implicit) global-phase alignment.
double gate_fidelity(const Matrix2& u_target, const Matrix2& u);

GateDesign design_gate(GateTarget target, int m1, double g,
                       double theta = 0.0, int m2 = 0);

}  // namespace su2holo
