#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace su2holo {

using Complex = std::complex<double>;
using Matrix8 = Eigen::Matrix<Complex, 8, 8>;
using Vector8 = Eigen::Matrix<Complex, 8, 1>;
using Matrix2 = Eigen::Matrix2cd;
using Vector2 = Eigen::Vector2cd;

inline constexpr Complex kI{0.0, 1.0};

/// Couplings and drive defining one Hamiltonian instance. All module
/// internals work in units of g (g = 1 canonical); the CLI handles scaling.
struct SystemParams {
  double g = 1.0;    ///< qubit 1,2 <-> 3 coupling, must be > 0
  double j = 0.5;    ///< qubit 1 <-> 2 coupling, must be nonzero
  double b = 1.0;    ///< drive magnitude, >= 0
  double phi = 0.0;  ///< drive angle, radians

  void validate() const {
    if (!(g > 0.0)) throw std::invalid_argument("SystemParams: g must be > 0");
    if (j == 0.0)
      throw std::invalid_argument(
          "SystemParams: J must be nonzero (the protected subspace merges "
          "with the singlet levels at J = 0)");
    if (b < 0.0) throw std::invalid_argument("SystemParams: B must be >= 0");
  }

  /// B = 2g is where the precession axis component L vanishes; adiabatic
  /// loops must not pass through it.
  bool at_forbidden_field(double eps = 1e-9) const {
    return std::abs(b - 2.0 * g) < eps;
  }
};

/// Basis convention: |q3 q2 q1> maps to index 4*q3 + 2*q2 + q1
/// (qubit 3 is the most significant bit).
constexpr int basis_index(int q3, int q2, int q1) {
  return 4 * q3 + 2 * q2 + q1;
}

inline const Matrix2& sigma_x() {
  static const Matrix2 m = (Matrix2() << 0, 1, 1, 0).finished();
  return m;
}
inline const Matrix2& sigma_y() {
  static const Matrix2 m = (Matrix2() << 0, -kI, kI, 0).finished();
  return m;
}
inline const Matrix2& sigma_z() {
  static const Matrix2 m = (Matrix2() << 1, 0, 0, -1).finished();
  return m;
}

}  // namespace su2holo
