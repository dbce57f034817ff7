#include "hybridoms.h"

#include <cmath>
#include <complex>
#include <cstring>
#include <exception>
#include <string>

#include "errors.hpp"
#include "ladder.hpp"
#include "lindblad.hpp"
#include "overlaps.hpp"
#include "params.hpp"
#include "presets.hpp"
#include "pulse.hpp"
#include "qubit.hpp"
#include "scattering.hpp"
#include "spectrum.hpp"
#include "tomography.hpp"

struct homs_system {
  homs::ScatteringContext ctx;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs fn, mapping exceptions onto status codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return HOMS_OK;
  } catch (const std::invalid_argument& e) {
    return fail(HOMS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const homs::numerical_error& e) {
    return fail(HOMS_ERR_NUMERICAL, e.what());
  } catch (const std::exception& e) {
    return fail(HOMS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HOMS_ERR_INTERNAL, "unknown error");
  }
}

homs::SystemParams to_cpp(const homs_params& p) {
  return {p.omega_c, p.omega_b, p.omega_a, p.g,   p.lambda,
          p.kappa,   p.gamma_a, p.gamma_b, p.n_a, p.n_b};
}

homs_params to_c(const homs::SystemParams& p) {
  return {p.omega_c, p.omega_b, p.omega_a, p.g,   p.lambda,
          p.kappa,   p.gamma_a, p.gamma_b, p.n_a, p.n_b};
}

homs::Label to_label(int n, int xi) {
  homs::Branch b;
  switch (xi) {
    case HOMS_BRANCH_GROUND: b = homs::Branch::ground; break;
    case HOMS_BRANCH_PLUS: b = homs::Branch::plus; break;
    case HOMS_BRANCH_MINUS: b = homs::Branch::minus; break;
    default: throw std::invalid_argument("bad branch value");
  }
  homs::Label l{n, b};
  homs::validate_label(l);
  return l;
}

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

homs::QubitDensity rho_from_array(const double* rho) {
  require(rho != nullptr, "rho must not be NULL");
  homs::QubitDensity m;
  m(0, 0) = {rho[0], rho[1]};
  m(0, 1) = {rho[2], rho[3]};
  m(1, 0) = {rho[4], rho[5]};
  m(1, 1) = {rho[6], rho[7]};
  return m;
}

void rho_to_array(const homs::QubitDensity& m, double* rho) {
  rho[0] = m(0, 0).real(); rho[1] = m(0, 0).imag();
  rho[2] = m(0, 1).real(); rho[3] = m(0, 1).imag();
  rho[4] = m(1, 0).real(); rho[5] = m(1, 0).imag();
  rho[6] = m(1, 1).real(); rho[7] = m(1, 1).imag();
}

homs::InitialState state_from_coeff(const homs_system& sys,
                                    const double* coeff) {
  require(coeff != nullptr, "coeff must not be NULL");
  int dim = homs::label_count(sys.ctx.n_trunc);
  homs::InitialState st;
  st.coeff.resize(dim);
  for (int i = 0; i < dim; ++i)
    st.coeff[i] = {coeff[2 * i], coeff[2 * i + 1]};
  return st;
}

void fill_info(const homs::SpectrumSeries& s, homs_spectrum_info* info) {
  if (!info) return;
  info->tail_estimate = s.tail_estimate;
  info->tail_warning = s.tail_warning;
  info->integral = s.integral;
  info->coverage_warning = s.coverage_warning;
  info->width_warning = s.width_warning;
}

int copy_out(const std::vector<double>& src, double* dst, int cap,
             int* count) {
  require(count != nullptr, "count must not be NULL");
  *count = int(src.size());
  if (cap <= 0) return HOMS_OK;
  require(dst != nullptr, "output array must not be NULL");
  require(cap >= int(src.size()), "output capacity too small");
  std::memcpy(dst, src.data(), src.size() * sizeof(double));
  return HOMS_OK;
}

}  // namespace

extern "C" {

const char* homs_last_error(void) { return g_last_error.c_str(); }

const char* homs_version(void) { return "1.0.0"; }

int homs_params_default(homs_params* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = to_c(homs::SystemParams{});
  });
}

int homs_params_from_json_text(const char* text, homs_params* out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "text/out must not be NULL");
    *out = to_c(homs::params_from_json(text));
  });
}

int homs_validate(const homs_params* p) {
  return guarded([&] {
    require(p != nullptr, "params must not be NULL");
    homs::validate(to_cpp(*p));
  });
}

int homs_derive(const homs_params* p, homs_derived* out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "params/out must not be NULL");
    homs::DerivedParams d = homs::derive_params(to_cpp(*p));
    *out = {d.beta,           d.alpha,         d.delta1,
            d.delta2,         d.delta_ab,      d.alpha_large,
            d.lambda_large,   d.sideband_unresolved};
  });
}

int homs_preset(const char* name, homs_params* out, double* pulse_width) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "name/out must not be NULL");
    homs::Preset pre = homs::preset(name);
    *out = to_c(pre.params);
    if (pulse_width) *pulse_width = pre.pulse_width;
  });
}

int homs_mixing_angle(int n, double lambda, double delta_ab, double* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = homs::mixing_angle(n, lambda, delta_ab);
  });
}

int homs_dressed_energy(const homs_params* p, int n, int xi, double* out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "params/out must not be NULL");
    *out = homs::dressed_energy(to_label(n, xi), to_cpp(*p));
  });
}

int homs_total_energy(const homs_params* p, int m, int n, int xi,
                      double* out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "params/out must not be NULL");
    *out = homs::total_energy(m, to_label(n, xi), to_cpp(*p));
  });
}

int homs_dressed_state(const homs_params* p, int n, int xi, double* c_up,
                       double* c_down) {
  return guarded([&] {
    require(p != nullptr && c_up != nullptr && c_down != nullptr,
            "params/outputs must not be NULL");
    homs::DressedState s = homs::dressed_state(to_label(n, xi), to_cpp(*p));
    *c_up = s.c_up;
    *c_down = s.c_down;
  });
}

int homs_system_create(const homs_params* p, int n_trunc, homs_system** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "params/out must not be NULL");
    *out = new homs_system{homs::make_context(to_cpp(*p), n_trunc)};
  });
}

void homs_system_free(homs_system* sys) { delete sys; }

int homs_system_n_trunc(const homs_system* sys) {
  return sys ? sys->ctx.n_trunc : 0;
}

int homs_system_label_count(const homs_system* sys) {
  return sys ? homs::label_count(sys->ctx.n_trunc) : 0;
}

int homs_default_overlap_n_trunc(double beta) {
  int out = 0;
  int rc = guarded([&] { out = homs::default_overlap_n_trunc(beta); });
  return rc == HOMS_OK ? out : -1;
}

int homs_overlap(const homs_system* sys, int row_n, int row_xi, int col_n,
                 int col_xi, double* out) {
  return guarded([&] {
    require(sys != nullptr && out != nullptr, "sys/out must not be NULL");
    homs::Label r = to_label(row_n, row_xi), c = to_label(col_n, col_xi);
    require(std::max(r.n, c.n) <= sys->ctx.n_trunc,
            "label beyond truncation");
    *out = sys->ctx.overlap(r, c);
  });
}

int homs_transmission_amplitude(const homs_system* sys, double omega_k,
                                int final_n, int final_xi, int initial_n,
                                int initial_xi, double* re, double* im) {
  return guarded([&] {
    require(sys != nullptr && re != nullptr && im != nullptr,
            "sys/outputs must not be NULL");
    std::complex<double> t = homs::transmission_amplitude(
        sys->ctx, omega_k, to_label(final_n, final_xi),
        to_label(initial_n, initial_xi));
    *re = t.real();
    *im = t.imag();
  });
}

int homs_transmission_flux(const homs_system* sys, double omega_k,
                           int initial_n, int initial_xi, double* out) {
  return guarded([&] {
    require(sys != nullptr && out != nullptr, "sys/out must not be NULL");
    *out = homs::transmission_flux(sys->ctx, omega_k,
                                   to_label(initial_n, initial_xi));
  });
}

int homs_predict_excitation_peaks(const homs_system* sys, int initial_n,
                                  int initial_xi, int n_max, double* delta_k,
                                  double* weight, int* final_n, int* final_xi,
                                  int cap, int* count) {
  return guarded([&] {
    require(sys != nullptr && count != nullptr, "sys/count must not be NULL");
    auto peaks = homs::predict_excitation_peaks(
        sys->ctx, to_label(initial_n, initial_xi), n_max);
    *count = int(peaks.size());
    if (cap <= 0) return;
    require(delta_k && weight && final_n && final_xi,
            "output arrays must not be NULL");
    require(cap >= int(peaks.size()), "output capacity too small");
    for (size_t i = 0; i < peaks.size(); ++i) {
      delta_k[i] = peaks[i].delta_k;
      weight[i] = peaks[i].weight;
      final_n[i] = peaks[i].final_lbl.n;
      switch (peaks[i].final_lbl.xi) {
        case homs::Branch::ground: final_xi[i] = HOMS_BRANCH_GROUND; break;
        case homs::Branch::plus: final_xi[i] = HOMS_BRANCH_PLUS; break;
        case homs::Branch::minus: final_xi[i] = HOMS_BRANCH_MINUS; break;
      }
    }
  });
}

int homs_default_excitation_grid(const homs_system* sys, int initial_n,
                                 int initial_xi, double* grid, int cap,
                                 int* count) {
  return guarded([&] {
    require(sys != nullptr, "sys must not be NULL");
    std::vector<double> g = homs::default_excitation_grid(
        sys->ctx, to_label(initial_n, initial_xi));
    copy_out(g, grid, cap, count);
  });
}

int homs_excitation_spectrum(const homs_system* sys, int initial_n,
                             int initial_xi, const double* grid, int npts,
                             double* values, homs_spectrum_info* info) {
  return guarded([&] {
    require(sys != nullptr && grid != nullptr && values != nullptr,
            "sys/grid/values must not be NULL");
    require(npts >= 3, "need at least 3 grid points");
    std::vector<double> g(grid, grid + npts);
    homs::SpectrumSeries s = homs::cavity_excitation_spectrum(
        sys->ctx, to_label(initial_n, initial_xi), g);
    std::memcpy(values, s.value.data(), s.value.size() * sizeof(double));
    fill_info(s, info);
  });
}

int homs_transmission_spectrum(const homs_system* sys, homs_pulse pulse,
                               const double* coeff, const double* grid,
                               int npts, double* values,
                               homs_spectrum_info* info) {
  return guarded([&] {
    require(sys != nullptr && grid != nullptr && values != nullptr,
            "sys/grid/values must not be NULL");
    require(npts >= 3, "need at least 3 grid points");
    homs::InitialState st = state_from_coeff(*sys, coeff);
    std::vector<double> g(grid, grid + npts);
    homs::SpectrumSeries s = homs::transmission_spectrum(
        sys->ctx, {pulse.omega0, pulse.d}, st, g);
    std::memcpy(values, s.value.data(), s.value.size() * sizeof(double));
    fill_info(s, info);
  });
}

int homs_default_transmission_grid(const homs_system* sys, homs_pulse pulse,
                                   const double* coeff, int n_show,
                                   double* grid, int cap, int* count) {
  return guarded([&] {
    require(sys != nullptr, "sys must not be NULL");
    homs::InitialState st;
    if (coeff) {
      st = state_from_coeff(*sys, coeff);
    } else {
      // NULL coeff: cover the whole qubit span (mechanical vacuum times any
      // TLS state), which lives on the ground, 1+ and 1- labels.
      int dim = homs::label_count(sys->ctx.n_trunc);
      require(dim >= 3, "qubit-span grid needs n_trunc >= 1");
      st.coeff.assign(dim, 0.0);
      double w = 1.0 / std::sqrt(3.0);
      st.coeff[0] = w;
      st.coeff[1] = w;
      st.coeff[2] = w;
    }
    std::vector<double> g = homs::default_transmission_grid(
        sys->ctx, st, {pulse.omega0, pulse.d}, n_show);
    copy_out(g, grid, cap, count);
  });
}

int homs_mixed_spectrum(const homs_system* sys, homs_pulse pulse,
                        const double* rho, const double* grid, int npts,
                        double* values, homs_spectrum_info* info) {
  return guarded([&] {
    require(sys != nullptr && grid != nullptr && values != nullptr,
            "sys/grid/values must not be NULL");
    require(npts >= 3, "need at least 3 grid points");
    std::vector<double> g(grid, grid + npts);
    homs::SpectrumSeries s = homs::mixed_state_spectrum(
        sys->ctx, {pulse.omega0, pulse.d}, rho_from_array(rho), g);
    std::memcpy(values, s.value.data(), s.value.size() * sizeof(double));
    fill_info(s, info);
  });
}

int homs_lindblad_sweep(const homs_params* p, double eta, int n_c, int n_b,
                        const double* delta_l, int npts, double* mean_photon) {
  return guarded([&] {
    require(p != nullptr && delta_l != nullptr && mean_photon != nullptr,
            "params/grid/out must not be NULL");
    require(npts >= 1, "need at least 1 grid point");
    homs::LindbladSolver solver(to_cpp(*p), eta, {n_c, n_b});
    if (npts < 3) {
      for (int i = 0; i < npts; ++i)
        mean_photon[i] = solver.solve(delta_l[i]).mean_photon;
      return;
    }
    std::vector<double> g(delta_l, delta_l + npts);
    homs::SpectrumSeries s = solver.sweep(g);
    std::memcpy(mean_photon, s.value.data(), s.value.size() * sizeof(double));
  });
}

int homs_lindblad_steady_state(const homs_params* p, double eta,
                               double delta_l, int n_c, int n_b,
                               double* mean_photon, double* residual,
                               double* min_eigenvalue) {
  return guarded([&] {
    require(p != nullptr, "params must not be NULL");
    homs::LindbladSolver solver(to_cpp(*p), eta, {n_c, n_b});
    homs::SteadyStateResult r = solver.solve(delta_l);
    if (mean_photon) *mean_photon = r.mean_photon;
    if (residual) *residual = r.residual;
    if (min_eigenvalue) *min_eigenvalue = r.min_eigenvalue;
  });
}

int homs_bloch_to_rho(double rx, double ry, double rz, double* rho_out) {
  return guarded([&] {
    require(rho_out != nullptr, "rho_out must not be NULL");
    rho_to_array(homs::qubit_from_bloch(rx, ry, rz), rho_out);
  });
}

int homs_rho_to_bloch(const double* rho, double* rx, double* ry, double* rz) {
  return guarded([&] {
    require(rx != nullptr && ry != nullptr && rz != nullptr,
            "outputs must not be NULL");
    homs::BlochVector b = homs::bloch_from_qubit(rho_from_array(rho));
    *rx = b.rx;
    *ry = b.ry;
    *rz = b.rz;
  });
}

int homs_tomography_simulate(const homs_system* sys, homs_pulse pulse,
                             const double* rho, double* probs) {
  return guarded([&] {
    require(sys != nullptr && probs != nullptr, "sys/probs must not be NULL");
    homs::ProbabilityTable t = homs::tomography_simulate(
        sys->ctx, rho_from_array(rho), {pulse.omega0, pulse.d});
    for (int s = 0; s < 3; ++s) {
      probs[2 * s] = t[s][0];
      probs[2 * s + 1] = t[s][1];
    }
  });
}

int homs_tomography_reconstruct(const double* probs, double* rho_out,
                                double* min_eigenvalue) {
  return guarded([&] {
    require(probs != nullptr && rho_out != nullptr,
            "probs/rho_out must not be NULL");
    homs::ProbabilityTable t{{{probs[0], probs[1]},
                              {probs[2], probs[3]},
                              {probs[4], probs[5]}}};
    rho_to_array(homs::reconstruct(t, min_eigenvalue), rho_out);
  });
}

int homs_fidelity(const double* rho_a, const double* rho_b, double* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = homs::fidelity(rho_from_array(rho_a), rho_from_array(rho_b));
  });
}

}  // extern "C"
