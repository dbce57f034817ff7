#pragma once

#include <complex>
#include <vector>

#include "overlaps.hpp"
#include "params.hpp"
#include "spectrum.hpp"

namespace homs {

// Precomputed tables for the single-photon scattering formulas: overlap
// matrix plus the zero- and one-photon energy ladders, indexed by
// label_index.
struct ScatteringContext {
  SystemParams params;
  DerivedParams derived;
  OverlapMatrix overlap;
  int n_trunc;
  std::vector<double> e0;  // energies with the cavity empty
  std::vector<double> e1;  // energies with one cavity photon

  double row_defect(int label_idx) const {
    return overlap.row_norm_defect(label_idx);
  }
};

// n_trunc <= 0 selects the default scattering truncation for the given
// parameters.
ScatteringContext make_context(const SystemParams& p, int n_trunc = 0);

// Overlap default plus extra shells so that the intermediate-state sums in
// the transmission amplitude conserve flux to better than 1e-10 and the
// initial-row defect stays below the spectrum tail-warning threshold.
int default_scattering_n_trunc(double beta);

// omega_k + e0[initial] - e1[final] + i kappa/2; the resonance denominator
// of the scattering solution.
std::complex<double> effective_detuning(const ScatteringContext& ctx,
                                        double omega_k, const Label& final_lbl,
                                        const Label& initial);

// Amplitude for the incoming photon to sit in the cavity with the
// TLS-mechanics subsystem transferred to final_lbl (displaced frame).
std::complex<double> excitation_amplitude(const ScatteringContext& ctx,
                                          double omega_k,
                                          const Label& final_lbl,
                                          const Label& initial);

// Transmission amplitude t_{final,initial}(omega_k): the Kronecker delta
// minus i kappa times the intermediate-label sum over the full truncated
// ladder.
std::complex<double> transmission_amplitude(const ScatteringContext& ctx,
                                            double omega_k,
                                            const Label& final_lbl,
                                            const Label& initial);

// Cauchy-Schwarz bound on what the labels beyond n_trunc could add to the
// intermediate sum of t_{final,initial}, from the truncated row-norm
// defects; |denominator| >= kappa/2 makes the bound independent of omega_k.
double transmission_tail_bound(const ScatteringContext& ctx,
                               const Label& final_lbl, const Label& initial);

// Sum over final labels of |t|^2; equals 1 for a lossless scatterer, so the
// deviation measures truncation error.
double transmission_flux(const ScatteringContext& ctx, double omega_k,
                         const Label& initial);

// Probability that the cavity is excited, summed over final labels, sampled
// on a detuning grid (delta_k = omega_k - omega_c). tail_estimate bounds the
// weight of final labels beyond the truncation.
SpectrumSeries cavity_excitation_spectrum(const ScatteringContext& ctx,
                                          const Label& initial,
                                          const std::vector<double>& grid);

struct PredictedPeak {
  double delta_k;  // resonance position relative to the cavity line
  double weight;   // squared overlap with the initial label
  Label final_lbl;
};

// Resonance positions delta_k = e1[final] - e0[initial] - omega_c with their
// Franck-Condon weights, for all final labels with n <= n_max, sorted by
// position.
std::vector<PredictedPeak> predict_excitation_peaks(
    const ScatteringContext& ctx, const Label& initial, int n_max);

// Fine windows (10 kappa wide, 2001 points) around every predicted peak with
// weight >= weight_floor, merged with a coarse scan spanning all of them.
std::vector<double> default_excitation_grid(const ScatteringContext& ctx,
                                            const Label& initial,
                                            double weight_floor = 1e-8);

}  // namespace homs
