#include <doctest.h>

#include <cmath>
#include <complex>

#include "presets.hpp"
#include "scattering.hpp"
#include "support/oracles.hpp"

using namespace homs;

TEST_CASE("context defaults") {
  SystemParams p = preset("fig2").params;
  ScatteringContext ctx = make_context(p);
  CHECK(ctx.n_trunc == default_scattering_n_trunc(1.2));
  CHECK(ctx.n_trunc == default_overlap_n_trunc(1.2) + 10);
  CHECK(int(ctx.e0.size()) == label_count(ctx.n_trunc));
  // one-photon ladder is the zero-photon one shifted and corrected
  DerivedParams d = derive_params(p);
  Label g0{0, Branch::ground};
  CHECK(ctx.e1[label_index(g0)] ==
        doctest::Approx(ctx.e0[label_index(g0)] + p.omega_c - d.delta1 -
                        d.delta2)
            .epsilon(1e-14));
}

TEST_CASE("excitation amplitude is a lorentzian in omega") {
  ScatteringContext ctx = make_context(preset("fig2").params);
  Label initial{0, Branch::ground};
  Label final_lbl{1, Branch::minus};
  // |e|^2 |denominator|^2 must not depend on omega_k
  double first = -1.0;
  for (double w : uniform_grid(9.0, 11.0, 17)) {
    std::complex<double> e =
        excitation_amplitude(ctx, w, final_lbl, initial);
    std::complex<double> den = effective_detuning(ctx, w, final_lbl, initial);
    double inv = std::norm(e) * std::norm(den);
    if (first < 0.0)
      first = inv;
    else
      CHECK(std::abs(inv - first) < 1e-10 * first);
  }
  CHECK(first == doctest::Approx(ctx.params.kappa *
                                 std::pow(ctx.overlap(initial, final_lbl), 2))
                     .epsilon(1e-12));
}

TEST_CASE("transmission reduces to unity far off resonance") {
  ScatteringContext ctx = make_context(preset("fig2").params);
  Label g0{0, Branch::ground};
  std::complex<double> t =
      transmission_amplitude(ctx, ctx.params.omega_c - 5.0, g0, g0);
  CHECK(std::abs(t - 1.0) < 0.01);
  Label other{1, Branch::plus};
  CHECK(std::abs(transmission_amplitude(ctx, ctx.params.omega_c - 5.0, other,
                                        g0)) < 0.01);
}

TEST_CASE("flux conservation on a coarse sweep") {
  for (const char* name : {"fig2", "fig3"}) {
    ScatteringContext ctx = make_context(preset(name).params);
    Label g0{0, Branch::ground};
    for (double w : uniform_grid(ctx.params.omega_c - 2.0,
                                 ctx.params.omega_c + 3.0, 101))
      CHECK(std::abs(transmission_flux(ctx, w, g0) - 1.0) < 1e-10);
  }
}

TEST_CASE("overlap magnitudes are exchange-symmetric") {
  ScatteringContext ctx = make_context(preset("fig3").params, 12);
  for (int i = 0; i < label_count(6); ++i)
    for (int f = 0; f < label_count(6); ++f) {
      Label li = label_from_index(i);
      Label lf = label_from_index(f);
      CHECK(std::abs(std::abs(ctx.overlap(li, lf)) -
                     std::abs(ctx.overlap(lf, li))) < 1e-10);
    }
}

TEST_CASE("excitation spectrum has kappa-wide peaks at predicted positions") {
  ScatteringContext ctx = make_context(preset("fig2").params);
  Label g0{0, Branch::ground};
  std::vector<PredictedPeak> predicted = predict_excitation_peaks(ctx, g0, 2);
  REQUIRE(predicted.size() == 5);  // ground final + two doublets

  std::vector<double> grid = default_excitation_grid(ctx, g0);
  SpectrumSeries s = cavity_excitation_spectrum(ctx, g0, grid);
  CHECK_FALSE(s.tail_warning);

  for (const auto& pk : predicted) {
    Peak found = find_peak_near(s.grid, s.value, pk.delta_k,
                                5 * ctx.params.kappa);
    CHECK(std::abs(found.position - pk.delta_k) < ctx.params.kappa / 50);
    // height = 4 weight / kappa for an isolated lorentzian
    CHECK(found.height == doctest::Approx(4 * pk.weight / ctx.params.kappa)
                              .epsilon(0.01));
  }

  // FWHM of the isolated polaron peak equals the cavity linewidth
  Peak main = find_peak_near(s.grid, s.value, predicted[0].delta_k,
                             5 * ctx.params.kappa);
  CHECK(fwhm(s.grid, s.value, main.index) ==
        doctest::Approx(ctx.params.kappa).epsilon(0.05));
}

TEST_CASE("tail diagnostics track the truncation") {
  SystemParams p = preset("fig2").params;
  Label g0{0, Branch::ground};
  ScatteringContext tight = make_context(p, 8);
  std::vector<double> grid = uniform_grid(-2.0, 1.0, 101);
  CHECK(cavity_excitation_spectrum(tight, g0, grid).tail_warning);
  ScatteringContext ok = make_context(p);
  CHECK_FALSE(cavity_excitation_spectrum(ok, g0, grid).tail_warning);
  CHECK(transmission_tail_bound(tight, g0, g0) >
        transmission_tail_bound(ok, g0, g0));
}

TEST_CASE("lambda = 0 reduces to the displaced-oscillator spectrum") {
  SystemParams p = preset("fig3").params;
  p.lambda = 0.0;
  ScatteringContext ctx = make_context(p);
  Label g0{0, Branch::ground};
  std::vector<double> grid = uniform_grid(-2.4, 1.6, 801);
  SpectrumSeries s = cavity_excitation_spectrum(ctx, g0, grid);
  for (size_t k = 0; k < grid.size(); ++k) {
    double ref = testsupport::poisson_lorentzian_spectrum(grid[k], p, 40);
    CHECK(std::abs(s.value[k] - ref) < 1e-8);
  }
}
