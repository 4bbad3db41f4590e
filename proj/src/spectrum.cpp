#include "su2holo/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "su2holo/hamiltonian.hpp"

namespace su2holo {

AuxQuantities aux_quantities(double b, double g) {
  if (!(g > 0.0)) throw std::invalid_argument("aux_quantities: g must be > 0");
  if (b < 0.0) throw std::invalid_argument("aux_quantities: B must be >= 0");
  const double b2 = b * b;
  const double g2 = g * g;
  const double root = std::sqrt(b2 * b2 + 4.0 * g2 * g2);
  AuxQuantities q;
  q.a = 0.5 * (-b2 + 6.0 * g2) / root;
  q.a_prime = 0.5 * (b2 + 6.0 * g2) / root;
  q.k = b2 * b2 - 2.0 * g2 * b2 + 8.0 * g2 * g2;
  q.l = (-b2 + 4.0 * g2) * root;
  return q;
}

ClosedFormSpectrum closed_form_eigenvalues(const SystemParams& p) {
  p.validate();
  ClosedFormSpectrum s;
  s.singlet_energy = -p.j;
  int idx = 0;
  for (int outer : {+1, -1}) {
    for (int inner : {+1, -1}) {
      const double under = 2.0 * p.g * p.g + p.b * p.b + inner * 2.0 * p.b * p.g;
      s.nondegenerate[idx++] =
          0.5 * (p.j + outer * std::sqrt(p.j * p.j + 4.0 * under));
    }
  }
  s.sorted = {0.0, 0.0, -p.j, -p.j, s.nondegenerate[0], s.nondegenerate[1],
              s.nondegenerate[2], s.nondegenerate[3]};
  std::sort(s.sorted.begin(), s.sorted.end());
  return s;
}

DegenerateStates closed_form_degenerate_states(double b, double phi,
                                               double g) {
  if (!(g > 0.0))
    throw std::invalid_argument("closed_form_degenerate_states: g must be > 0");
  if (b < 0.0)
    throw std::invalid_argument("closed_form_degenerate_states: B must be >= 0");
  const AuxQuantities q = aux_quantities(b, g);
  const double b2 = b * b;
  const double g2 = g * g;
  const double root2 = b2 * b2 + 4.0 * g2 * g2;  // B^4 + 4g^4
  const auto e = [&](double m) { return std::exp(kI * m * phi); };

  DegenerateStates st;
  st.chi1 = Vector8::Zero();
  st.chi1(basis_index(0, 0, 0)) = -b2 + 4.0 * g2;
  st.chi1(basis_index(0, 1, 1)) = b2 * e(2.0);
  st.chi1(basis_index(1, 0, 0)) = -2.0 * g * b * e(1.0);
  st.chi1 /= std::sqrt(2.0 * q.k);

  st.chi2 = Vector8::Zero();
  st.chi2(basis_index(0, 0, 0)) = 2.0 * g * b2 * b * e(-3.0);
  st.chi2(basis_index(0, 1, 1)) = -4.0 * g2 * g * b * e(-1.0);
  st.chi2(basis_index(1, 0, 0)) = -b2 * (b2 - 2.0 * g2) * e(-2.0);
  st.chi2(basis_index(1, 1, 1)) = q.k;
  st.chi2 /= std::sqrt(2.0 * q.k * root2);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  st.chi3 = Vector8::Zero();
  st.chi3(basis_index(0, 0, 1)) = inv_sqrt2;
  st.chi3(basis_index(0, 1, 0)) = -inv_sqrt2;
  st.chi4 = Vector8::Zero();
  st.chi4(basis_index(1, 1, 0)) = inv_sqrt2;
  st.chi4(basis_index(1, 0, 1)) = -inv_sqrt2;
  return st;
}

Matrix8 EigenFrame::group_projector(std::size_t group_index) const {
  Matrix8 p = Matrix8::Zero();
  for (int idx : groups.at(group_index))
    p += states.col(idx) * states.col(idx).adjoint();
  return p;
}

int EigenFrame::group_of(int state_index) const {
  for (std::size_t gi = 0; gi < groups.size(); ++gi)
    for (int idx : groups[gi])
      if (idx == state_index) return static_cast<int>(gi);
  return -1;
}

EigenFrame numeric_eigendecomposition(const Matrix8& h, double tau_deg) {
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("numeric_eigendecomposition: H not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix8> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("numeric_eigendecomposition: solver failed");

  EigenFrame frame;
  frame.energies = es.eigenvalues();
  frame.states = es.eigenvectors();
  frame.groups.push_back({0});
  for (int i = 1; i < 8; ++i) {
    const double gap = frame.energies(i) - frame.energies(i - 1);
    if (gap < tau_deg) {
      frame.groups.back().push_back(i);
    } else {
      if (gap < 10.0 * tau_deg)
        throw std::runtime_error(
            "numeric_eigendecomposition: ambiguous degeneracy grouping "
            "(inter-group gap below 10*tau_deg)");
      frame.groups.push_back({i});
    }
  }
  return frame;
}

double level_gap(const SystemParams& p) {
  const ClosedFormSpectrum s = closed_form_eigenvalues(p);
  double gap = std::abs(s.singlet_energy);
  for (double e : s.nondegenerate) gap = std::min(gap, std::abs(e));
  return gap;
}

}  // namespace su2holo
