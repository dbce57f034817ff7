#pragma once

#include <array>

#include "pulse.hpp"
#include "qubit.hpp"
#include "scattering.hpp"

namespace homs {

// The three mutually unbiased measurement bases for one qubit: identity,
// Hadamard, and exp(i pi/4 sigma_x). Basis s, outcome l corresponds to the
// state U_s|l> with l = 0 the down outcome.
struct MubSet {
  std::array<Eigen::Matrix2cd, 3> u;

  static MubSet standard();
  Eigen::Vector2cd basis_state(int s, int l) const;
  Eigen::Matrix2cd projector(int s, int l) const;
};

// First-sideband positions read by the tomography protocol: the down branch
// at e1[ground] - e0[1-] and the up branch at e1[1+] - e0[2+], both relative
// to the cavity line. Requires a detuned TLS.
struct SidebandPeaks {
  double pos_down;
  double pos_up;
  double separation;
};

SidebandPeaks tomography_peak_positions(const ScatteringContext& ctx);

// probabilities[s] = (p_{s,down}, p_{s,up}); rows sum to 1.
using ProbabilityTable = std::array<std::array<double, 2>, 3>;

// Measures basis s (0-based) of rho: rotates rho by U_s^dagger, scatters the
// pulse off the rotated state, reads the two first-sideband peak heights at
// parabolic-refined maxima, and normalises them to sum 1. Throws when the
// sidebands are too close to resolve against both the pulse width and the
// cavity linewidth.
std::array<double, 2> simulate_probabilities(const ScatteringContext& ctx,
                                             const QubitDensity& rho, int s,
                                             const PulseSpec& pulse);

// All three bases.
ProbabilityTable tomography_simulate(const ScatteringContext& ctx,
                                     const QubitDensity& rho,
                                     const PulseSpec& pulse);

// Inverts the probability table: rho = sum_{s,l} p_sl P_sl - I, Hermitised
// and trace-renormalised. Each row must sum to 1 within 1e-3. When
// min_eigenvalue is non-null it receives the smaller eigenvalue before any
// clamping (negative values flag unphysical input data).
QubitDensity reconstruct(const ProbabilityTable& probs,
                         double* min_eigenvalue = nullptr);

// Uhlmann fidelity via the two-dimensional closed form
// Tr(rho rho_tilde) + 2 sqrt(det rho det rho_tilde).
double fidelity(const QubitDensity& rho, const QubitDensity& rho_tilde);

}  // namespace homs
