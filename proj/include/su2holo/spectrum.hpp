#pragma once

#include <vector>

#include "su2holo/types.hpp"

namespace su2holo {

/// The auxiliary scalars A, A', K, L of the closed-form eigenstructure.
struct AuxQuantities {
  double a;        // (1/2)(-B^2 + 6g^2)/sqrt(B^4 + 4g^4)
  double a_prime;  // (1/2)( B^2 + 6g^2)/sqrt(B^4 + 4g^4), always > 0
  double k;        // B^4 - 2g^2 B^2 + 8g^4, always > 0
  double l;        // (-B^2 + 4g^2) sqrt(B^4 + 4g^4), vanishes at B = 2g
};

AuxQuantities aux_quantities(double b, double g);

struct ClosedFormSpectrum {
  std::array<double, 8> sorted;         ///< all eight energies, ascending
  std::array<double, 4> nondegenerate;  ///< (1/2)[J +- sqrt(J^2+4(2g^2+B^2 +- 2Bg))]
  double zero_energy = 0.0;             ///< doubly degenerate
  double singlet_energy;                ///< -J, doubly degenerate
};

ClosedFormSpectrum closed_form_eigenvalues(const SystemParams& p);

/// The four degenerate eigenstates in the phase convention with the |000>
/// coefficient of chi1 real and the |111> coefficient of chi2 real positive.
/// H chi1 = H chi2 = 0, H chi3 = -J chi3, H chi4 = -J chi4.
struct DegenerateStates {
  Vector8 chi1, chi2, chi3, chi4;
};

DegenerateStates closed_form_degenerate_states(double b, double phi, double g);

/// Sorted, degeneracy-grouped eigenpairs of a Hermitian 8x8 matrix.
struct EigenFrame {
  Eigen::Matrix<double, 8, 1> energies;      // ascending
  Matrix8 states;                            // eigenvectors as columns
  std::vector<std::vector<int>> groups;      // partition of 0..7 by degeneracy

  Matrix8 group_projector(std::size_t group_index) const;
  int group_of(int state_index) const;
};

/// Throws if any inter-group gap is below 10*tau_deg (ambiguous grouping).
EigenFrame numeric_eigendecomposition(const Matrix8& h, double tau_deg = 1e-8);

/// Minimal |E_i - E_j| between the E = 0 pair and every other level.
double level_gap(const SystemParams& p);

}  // namespace su2holo
