#pragma once

#include "su2holo/types.hpp"

namespace su2holo {

enum class PauliAxis { X, Y, Z };

/// sigma^{axis} acting on the named qubit (1, 2 or 3), identity elsewhere.
Matrix8 pauli_embed(PauliAxis axis, int qubit);

/// Caches the four constant Pauli-string sums so the time-dependent
/// Hamiltonian can be assembled with three scaled adds per call.
class HamiltonianBuilder {
 public:
  HamiltonianBuilder();
  Matrix8 operator()(const SystemParams& p) const;
  Matrix8 assemble(double g, double j, double b, double phi) const;

 private:
  Matrix8 drive_x_;    // sx1 + sx2
  Matrix8 drive_y_;    // sy1 + sy2
  Matrix8 coupling_g_; // sx3 sx2 + sy3 sy2 + sx3 sx1 + sy3 sy1
  Matrix8 coupling_j_; // sx2 sx1 + sy2 sy1
};

Matrix8 build_hamiltonian(const SystemParams& p);

}  // namespace su2holo
