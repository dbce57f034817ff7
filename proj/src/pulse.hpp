#pragma once

#include <complex>
#include <vector>

#include "qubit.hpp"
#include "scattering.hpp"
#include "spectrum.hpp"

namespace homs {

// Gaussian spectral amplitude f(omega) = (2/(pi d^2))^{1/4}
// exp[-(omega - omega0)^2/d^2], normalised so that the integral of |f|^2
// over omega is 1. omega0 is an absolute frequency.
struct PulseSpec {
  double omega0;
  double d;
};

double gaussian_amplitude(const PulseSpec& pulse, double omega);

// Superposition of dressed labels the scatterer starts in; coefficients are
// indexed by label_index and must be normalised.
struct InitialState {
  std::vector<std::complex<double>> coeff;
};

InitialState pure_initial(const Label& l, int n_trunc);

// Product state (a|down> + b|up>) (x) mechanical vacuum expressed exactly in
// the dressed basis: C_{0,ground} = a, C_{1,plus} = b cos(theta_1),
// C_{1,minus} = -b sin(theta_1).
InitialState qubit_initial_state(std::complex<double> a,
                                 std::complex<double> b,
                                 const SystemParams& p, int n_trunc);

// Transmitted-photon spectral density against delta_k for a pulse scattering
// off the given initial superposition. Value at omega_k sums over final
// labels the squared coherent sum of pulse amplitude times transmission
// amplitude, each evaluated at the incoming frequency that lands on omega_k.
SpectrumSeries transmission_spectrum(const ScatteringContext& ctx,
                                     const PulseSpec& pulse,
                                     const InitialState& initial,
                                     const std::vector<double>& grid);

// TLS density matrix (x) mechanical vacuum: diagonalises rho, runs each
// eigenvector as a pure initial state, and sums the spectra weighted by the
// eigenvalues.
SpectrumSeries mixed_state_spectrum(const ScatteringContext& ctx,
                                    const PulseSpec& pulse,
                                    const QubitDensity& rho,
                                    const std::vector<double>& grid);

// Default transmission window [-delta1 - delta2 - (n_show + 1/2) omega_b,
// +5 kappa] with fine windows around the sidebands the initial state
// populates. n_show < 0 picks the smallest red-sideband count that keeps
// 99.9% of the displacement weight; excited initial components extend the
// blue edge by their excitation energy so anti-Stokes lines stay in view.
std::vector<double> default_transmission_grid(const ScatteringContext& ctx,
                                              const InitialState& initial,
                                              const PulseSpec& pulse,
                                              int n_show = -1);

}  // namespace homs
