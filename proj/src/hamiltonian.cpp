#include "su2holo/hamiltonian.hpp"

namespace su2holo {

Matrix8 pauli_embed(PauliAxis axis, int qubit) {
  if (qubit < 1 || qubit > 3)
    throw std::invalid_argument("pauli_embed: qubit index must be 1, 2 or 3");
  Matrix2 s;
  switch (axis) {
    case PauliAxis::X: s = sigma_x(); break;
    case PauliAxis::Y: s = sigma_y(); break;
    case PauliAxis::Z: s = sigma_z(); break;
  }
  const int bit = qubit - 1;  // qubit 1 is the least significant bit
  Matrix8 out = Matrix8::Zero();
  for (int col = 0; col < 8; ++col) {
    const int cb = (col >> bit) & 1;
    for (int rb = 0; rb < 2; ++rb) {
      const Complex amp = s(rb, cb);
      if (amp != 0.0) out((col & ~(1 << bit)) | (rb << bit), col) = amp;
    }
  }
  return out;
}

HamiltonianBuilder::HamiltonianBuilder() {
  const Matrix8 x1 = pauli_embed(PauliAxis::X, 1);
  const Matrix8 x2 = pauli_embed(PauliAxis::X, 2);
  const Matrix8 x3 = pauli_embed(PauliAxis::X, 3);
  const Matrix8 y1 = pauli_embed(PauliAxis::Y, 1);
  const Matrix8 y2 = pauli_embed(PauliAxis::Y, 2);
  const Matrix8 y3 = pauli_embed(PauliAxis::Y, 3);
  drive_x_ = x1 + x2;
  drive_y_ = y1 + y2;
  coupling_g_ = x3 * x2 + y3 * y2 + x3 * x1 + y3 * y1;
  coupling_j_ = x2 * x1 + y2 * y1;
}

Matrix8 HamiltonianBuilder::assemble(double g, double j, double b,
                                     double phi) const {
  const double bx = b * std::cos(phi);
  const double by = b * std::sin(phi);
  return 0.5 * (bx * drive_x_ + by * drive_y_ + g * coupling_g_ +
                j * coupling_j_);
}

Matrix8 HamiltonianBuilder::operator()(const SystemParams& p) const {
  p.validate();
  return assemble(p.g, p.j, p.b, p.phi);
}

Matrix8 build_hamiltonian(const SystemParams& p) {
  static const HamiltonianBuilder builder;
  return builder(p);
}

}  // namespace su2holo
