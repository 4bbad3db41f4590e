#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "su2holo/holonomy.hpp"
#include "su2holo/types.hpp"

namespace su2holo {

struct PropagationOptions {
  double tol = 1e-8;           ///< allowed norm drift; integrator runs tighter
  bool smooth_ramp = true;     ///< sine-squared ease-in/out per segment
  double energy_offset = 0.0;  ///< adds offset * identity to H (tests the
                               ///< dynamical-phase removal path)
  int n_samples = 0;           ///< trajectory samples to record (0 = none)
};

struct PropagationResult {
  Vector8 final_state;
  std::vector<std::pair<double, Vector8>> samples;
  double total_time;  // in 1/g units
  double leakage;     // population outside the E = 0 subspace at the end
};

/// Integrates i dpsi/dt = H(t) psi with an adaptive Dormand-Prince scheme.
PropagationResult propagate_with_hamiltonian(
    const std::function<Matrix8(double)>& h_of_t, double t_total,
    const Vector8& initial, const PropagationOptions& opt = {});

/// Maps the path onto t in [0, T] (durations proportional to field-space
/// arc length, optional smooth ramp per segment) and integrates.
PropagationResult schrodinger_propagate(const ControlPath& path,
                                        double t_total, const Vector8& initial,
                                        const PropagationOptions& opt = {});

struct ExtractedHolonomy {
  Matrix2 u_geo;  // in the chi_{1,2} frame of the loop's start point
  double deviation_from_unitarity;
  double leakage;
};

/// Propagates chi1 and chi2 around the loop and projects the finals back
/// onto the start frame; the dynamical phase e^{-i int E dt} is divided out
/// (trivially 1 when the subspace energy is exactly zero).
ExtractedHolonomy extract_geometric_unitary(const ControlPath& path,
                                            double t_total,
                                            const PropagationOptions& opt = {});

struct AdiabaticityRow {
  double t_total;
  double leakage;
  double infidelity;  // 1 - |tr(U_closed^dag U_geo)| / 2
};

std::vector<AdiabaticityRow> adiabaticity_report(
    const ControlPath& path, const std::vector<double>& t_list,
    const PropagationOptions& opt = {});

/// |tr(a^dag b)| / 2 -- global-phase-invariant overlap of 2x2 unitaries.
double gate_overlap(const Matrix2& a, const Matrix2& b);

}  // namespace su2holo
