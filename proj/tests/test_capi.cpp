// Exercises the shared-library boundary only: every call goes through the
// C header, no core headers are included.
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <string>
#include <vector>

#include <hybridoms.h>

namespace {

homs_params preset_or_fail(const char* name, double* width = nullptr) {
  homs_params p;
  REQUIRE(homs_preset(name, &p, width) == HOMS_OK);
  return p;
}

}  // namespace

TEST_CASE("version and error channel") {
  CHECK(std::string(homs_version()) == "1.0.0");
  CHECK(homs_params_default(nullptr) == HOMS_ERR_INVALID_ARGUMENT);
  CHECK(std::string(homs_last_error()).size() > 0);
}

TEST_CASE("params default, validate, derive") {
  homs_params p;
  REQUIRE(homs_params_default(&p) == HOMS_OK);
  CHECK(p.omega_c == 10.0);
  CHECK(p.omega_b == 1.0);
  CHECK(p.kappa == 0.01);
  CHECK(homs_validate(&p) == HOMS_OK);

  p.kappa = -1.0;
  CHECK(homs_validate(&p) == HOMS_ERR_INVALID_ARGUMENT);
  CHECK(std::string(homs_last_error()).find("kappa") != std::string::npos);

  homs_params f2 = preset_or_fail("fig2");
  homs_derived d;
  REQUIRE(homs_derive(&f2, &d) == HOMS_OK);
  CHECK(d.beta == doctest::Approx(1.2).epsilon(1e-15));
  CHECK(d.alpha == doctest::Approx(0.06).epsilon(1e-15));
  CHECK(d.delta1 == doctest::Approx(1.44).epsilon(1e-15));
  CHECK(d.delta2 == doctest::Approx(0.0036).epsilon(1e-12));
  CHECK(d.delta_ab == 0.0);
  CHECK(d.alpha_large == 0);
}

TEST_CASE("params JSON round trip") {
  const char* text =
      "{\"omega_c\": 10, \"omega_b\": 1, \"omega_a\": 1, \"g\": 0.5,"
      " \"lambda\": 0.02, \"kappa\": 0.01, \"gamma_a\": 0, \"gamma_b\": 0,"
      " \"n_a\": 0, \"n_b\": 0}";
  homs_params p;
  REQUIRE(homs_params_from_json_text(text, &p) == HOMS_OK);
  CHECK(p.g == 0.5);
  CHECK(p.lambda == 0.02);
  CHECK(homs_params_from_json_text("not json", &p) ==
        HOMS_ERR_INVALID_ARGUMENT);
  CHECK(homs_params_from_json_text("{\"g\": 0.5}", &p) ==
        HOMS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("presets are recognised and stable") {
  for (const char* name :
       {"fig2", "fig3", "fig4ac", "fig4df", "fig5", "fig6"}) {
    double w1 = 0.0, w2 = 0.0;
    homs_params a = preset_or_fail(name, &w1);
    homs_params b = preset_or_fail(name, &w2);
    CHECK(w1 > 0.0);
    CHECK(w1 == w2);
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
  }
  homs_params p;
  CHECK(homs_preset("fig7", &p, nullptr) == HOMS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("ladder spot values at the degenerate point") {
  homs_params p = preset_or_fail("fig2");
  double theta;
  REQUIRE(homs_mixing_angle(1, p.lambda, 0.0, &theta) == HOMS_OK);
  CHECK(theta == doctest::Approx(std::atan(1.0)).epsilon(1e-15));  // pi/4
  CHECK(homs_mixing_angle(0, p.lambda, 0.0, &theta) ==
        HOMS_ERR_INVALID_ARGUMENT);

  double e;
  REQUIRE(homs_dressed_energy(&p, 1, HOMS_BRANCH_PLUS, &e) == HOMS_OK);
  CHECK(e == doctest::Approx(0.5 + p.lambda).epsilon(1e-14));
  REQUIRE(homs_dressed_energy(&p, 1, HOMS_BRANCH_MINUS, &e) == HOMS_OK);
  CHECK(e == doctest::Approx(0.5 - p.lambda).epsilon(1e-14));
  REQUIRE(homs_dressed_energy(&p, 0, HOMS_BRANCH_GROUND, &e) == HOMS_OK);
  CHECK(e == doctest::Approx(-0.5).epsilon(1e-14));

  // one-photon ground line: omega_c - delta1 - omega_a/2 - delta2
  REQUIRE(homs_total_energy(&p, 1, 0, HOMS_BRANCH_GROUND, &e) == HOMS_OK);
  CHECK(e == doctest::Approx(10.0 - 1.44 - 0.5 - 0.0036).epsilon(1e-13));

  double cu, cd;
  REQUIRE(homs_dressed_state(&p, 1, HOMS_BRANCH_PLUS, &cu, &cd) == HOMS_OK);
  CHECK(cu == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(cd == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  REQUIRE(homs_dressed_state(&p, 1, HOMS_BRANCH_MINUS, &cu, &cd) == HOMS_OK);
  CHECK(cu == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-14));
  CHECK(cd == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("system lifecycle, overlaps and flux") {
  homs_params p = preset_or_fail("fig2");
  homs_system* sys = nullptr;
  REQUIRE(homs_system_create(&p, 0, &sys) == HOMS_OK);
  REQUIRE(sys != nullptr);
  CHECK(homs_system_n_trunc(sys) == homs_default_overlap_n_trunc(1.2) + 12);
  CHECK(homs_system_label_count(sys) == 2 * homs_system_n_trunc(sys) + 1);
  CHECK(homs_system_n_trunc(nullptr) == 0);

  double v;
  REQUIRE(homs_overlap(sys, 0, HOMS_BRANCH_GROUND, 0, HOMS_BRANCH_GROUND,
                       &v) == HOMS_OK);
  CHECK(v == doctest::Approx(std::cos(0.06) * std::exp(-0.72)).epsilon(1e-12));
  CHECK(homs_overlap(sys, 0, HOMS_BRANCH_PLUS, 0, HOMS_BRANCH_GROUND, &v) ==
        HOMS_ERR_INVALID_ARGUMENT);

  double flux;
  REQUIRE(homs_transmission_flux(sys, p.omega_c - 1.0, 0, HOMS_BRANCH_GROUND,
                                 &flux) == HOMS_OK);
  CHECK(flux == doctest::Approx(1.0).epsilon(1e-10));

  // recompute the flux from individual amplitudes
  int n_trunc = homs_system_n_trunc(sys);
  double sum = 0.0;
  auto add = [&](int fn, int fxi) {
    double re, im;
    REQUIRE(homs_transmission_amplitude(sys, p.omega_c - 1.0, fn, fxi, 0,
                                        HOMS_BRANCH_GROUND, &re, &im) ==
            HOMS_OK);
    sum += re * re + im * im;
  };
  add(0, HOMS_BRANCH_GROUND);
  for (int n = 1; n <= n_trunc; ++n) {
    add(n, HOMS_BRANCH_PLUS);
    add(n, HOMS_BRANCH_MINUS);
  }
  CHECK(sum == doctest::Approx(flux).epsilon(1e-12));

  // far off resonance the pulse passes through: t -> 1
  double re, im;
  REQUIRE(homs_transmission_amplitude(sys, p.omega_c + 50.0, 0,
                                      HOMS_BRANCH_GROUND, 0,
                                      HOMS_BRANCH_GROUND, &re, &im) ==
          HOMS_OK);
  CHECK(std::abs(std::complex<double>(re, im) - 1.0) < 0.01);

  homs_system_free(sys);
  homs_system_free(nullptr);  // harmless
}

TEST_CASE("excitation peaks, grid and spectrum") {
  homs_params p = preset_or_fail("fig2");
  homs_system* sys = nullptr;
  REQUIRE(homs_system_create(&p, 0, &sys) == HOMS_OK);

  int count = 0;
  REQUIRE(homs_predict_excitation_peaks(sys, 0, HOMS_BRANCH_GROUND, 3,
                                        nullptr, nullptr, nullptr, nullptr, 0,
                                        &count) == HOMS_OK);
  REQUIRE(count == 7);  // ground + three doublets
  std::vector<double> dk(count), w(count);
  std::vector<int> fn(count), fxi(count);
  REQUIRE(homs_predict_excitation_peaks(sys, 0, HOMS_BRANCH_GROUND, 3,
                                        dk.data(), w.data(), fn.data(),
                                        fxi.data(), count, &count) == HOMS_OK);
  bool found = false;
  for (int i = 0; i < count; ++i)
    if (fn[i] == 0) {
      found = true;
      CHECK(dk[i] == doctest::Approx(-1.44 - 0.0036).epsilon(1e-12));
      CHECK(w[i] == doctest::Approx(std::pow(std::cos(0.06), 2) *
                                    std::exp(-1.44))
                        .epsilon(1e-10));
    }
  CHECK(found);

  int gcount = 0;
  REQUIRE(homs_default_excitation_grid(sys, 0, HOMS_BRANCH_GROUND, nullptr, 0,
                                       &gcount) == HOMS_OK);
  REQUIRE(gcount > 100);
  std::vector<double> grid(gcount);
  REQUIRE(homs_default_excitation_grid(sys, 0, HOMS_BRANCH_GROUND,
                                       grid.data(), gcount, &gcount) ==
          HOMS_OK);
  for (int i = 1; i < gcount; ++i) REQUIRE(grid[i] > grid[i - 1]);

  std::vector<double> values(gcount);
  homs_spectrum_info info;
  REQUIRE(homs_excitation_spectrum(sys, 0, HOMS_BRANCH_GROUND, grid.data(),
                                   gcount, values.data(), &info) == HOMS_OK);
  double vmax = 0.0;
  for (double x : values) {
    REQUIRE(x >= 0.0);
    vmax = std::max(vmax, x);
  }
  CHECK(vmax > 0.0);
  CHECK(info.tail_warning == 0);
  homs_system_free(sys);
}

TEST_CASE("pulse transmission across the boundary") {
  double width = 0.0;
  homs_params p = preset_or_fail("fig4ac", &width);
  homs_system* sys = nullptr;
  REQUIRE(homs_system_create(&p, 0, &sys) == HOMS_OK);
  int dim = homs_system_label_count(sys);

  homs_derived d;
  REQUIRE(homs_derive(&p, &d) == HOMS_OK);
  homs_pulse pulse{p.omega_c - d.delta1 - d.delta2, width};

  int count = 0;
  REQUIRE(homs_default_transmission_grid(sys, pulse, nullptr, 2, nullptr, 0,
                                         &count) == HOMS_OK);
  REQUIRE(count > 100);
  std::vector<double> grid(count);
  REQUIRE(homs_default_transmission_grid(sys, pulse, nullptr, 2, grid.data(),
                                         count, &count) == HOMS_OK);

  // mechanical vacuum (x) spin-down is the unpaired ground label, so the
  // mixed spectrum of the down-projector must match the pure ground run
  std::vector<double> coeff(2 * dim, 0.0);
  coeff[0] = 1.0;
  std::vector<double> pure(count), mixed(count);
  REQUIRE(homs_transmission_spectrum(sys, pulse, coeff.data(), grid.data(),
                                     count, pure.data(), nullptr) == HOMS_OK);
  double rho_down[8] = {1, 0, 0, 0, 0, 0, 0, 0};
  homs_spectrum_info info;
  REQUIRE(homs_mixed_spectrum(sys, pulse, rho_down, grid.data(), count,
                              mixed.data(), &info) == HOMS_OK);
  for (int i = 0; i < count; ++i)
    REQUIRE(mixed[i] == doctest::Approx(pure[i]).epsilon(1e-12));

  // unnormalised superposition is rejected
  coeff[2] = 1.0;
  CHECK(homs_transmission_spectrum(sys, pulse, coeff.data(), grid.data(),
                                   count, pure.data(), nullptr) ==
        HOMS_ERR_INVALID_ARGUMENT);
  homs_system_free(sys);
}

TEST_CASE("steady-state oracle") {
  homs_params p;
  REQUIRE(homs_params_default(&p) == HOMS_OK);
  p.g = 0.0;
  p.lambda = 0.0;
  p.gamma_a = 1e-3;
  p.gamma_b = 1e-3;
  double eta = p.kappa / 50;

  double n_ph, residual, min_eig;
  REQUIRE(homs_lindblad_steady_state(&p, eta, 0.0, 3, 5, &n_ph, &residual,
                                     &min_eig) == HOMS_OK);
  CHECK(n_ph ==
        doctest::Approx(eta * eta / (0.25 * p.kappa * p.kappa)).epsilon(1e-6));
  CHECK(residual < 1e-10);
  CHECK(min_eig > -1e-8);
  REQUIRE(homs_lindblad_steady_state(&p, eta, 0.0, 3, 5, nullptr, nullptr,
                                     nullptr) == HOMS_OK);

  double grid[3] = {-0.01, 0.0, 0.01};
  double swept[3];
  REQUIRE(homs_lindblad_sweep(&p, eta, 3, 5, grid, 3, swept) == HOMS_OK);
  for (int k = 0; k < 3; ++k) {
    double pt;
    REQUIRE(homs_lindblad_steady_state(&p, eta, grid[k], 3, 5, &pt, nullptr,
                                       nullptr) == HOMS_OK);
    CHECK(swept[k] == doctest::Approx(pt).epsilon(1e-12));
  }

  p.lambda = 0.0;
  p.gamma_a = 0.0;
  CHECK(homs_lindblad_steady_state(&p, eta, 0.0, 3, 5, &n_ph, nullptr,
                                   nullptr) == HOMS_ERR_NUMERICAL);
}

TEST_CASE("bloch round trip and fidelity") {
  double rho[8];
  REQUIRE(homs_bloch_to_rho(0.6, 0.4, 0.3, rho) == HOMS_OK);
  CHECK(rho[0] == doctest::Approx(0.65).epsilon(1e-15));  // re00
  CHECK(rho[2] == doctest::Approx(0.3).epsilon(1e-15));   // re01
  CHECK(rho[3] == doctest::Approx(-0.2).epsilon(1e-15));  // im01
  double rx, ry, rz;
  REQUIRE(homs_rho_to_bloch(rho, &rx, &ry, &rz) == HOMS_OK);
  CHECK(rx == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(ry == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(rz == doctest::Approx(0.3).epsilon(1e-14));

  double f;
  REQUIRE(homs_fidelity(rho, rho, &f) == HOMS_OK);
  CHECK(f == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(homs_bloch_to_rho(0.9, 0.9, 0.9, rho) ==
        HOMS_ERR_INVALID_ARGUMENT);  // |r| > 1
}

TEST_CASE("tomography round trip") {
  double width = 0.0;
  homs_params p = preset_or_fail("fig6", &width);
  homs_system* sys = nullptr;
  REQUIRE(homs_system_create(&p, 0, &sys) == HOMS_OK);
  homs_derived d;
  REQUIRE(homs_derive(&p, &d) == HOMS_OK);
  homs_pulse pulse{p.omega_c - d.delta1, width};

  double truth[8];
  REQUIRE(homs_bloch_to_rho(0.6, 0.4, 0.3, truth) == HOMS_OK);
  double probs[6];
  REQUIRE(homs_tomography_simulate(sys, pulse, truth, probs) == HOMS_OK);
  for (int s = 0; s < 3; ++s) {
    CHECK(probs[2 * s] >= 0.0);
    CHECK(probs[2 * s + 1] >= 0.0);
    CHECK(probs[2 * s] + probs[2 * s + 1] == doctest::Approx(1.0).epsilon(1e-9));
  }

  double rec[8], min_eig;
  REQUIRE(homs_tomography_reconstruct(probs, rec, &min_eig) == HOMS_OK);
  double f;
  REQUIRE(homs_fidelity(truth, rec, &f) == HOMS_OK);
  CHECK(f > 0.999);

  double bad[6] = {1, 0, 1, 0, 1, 0};
  REQUIRE(homs_tomography_reconstruct(bad, rec, &min_eig) == HOMS_OK);
  CHECK(min_eig < 0.0);

  double inconsistent[6] = {0.9, 0.3, 0.5, 0.5, 0.5, 0.5};
  CHECK(homs_tomography_reconstruct(inconsistent, rec, nullptr) ==
        HOMS_ERR_INVALID_ARGUMENT);
  homs_system_free(sys);
}
