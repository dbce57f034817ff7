#include "scattering.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace homs {

namespace {

std::string context_fingerprint(const ScatteringContext& ctx) {
  const SystemParams& p = ctx.params;
  std::ostringstream os;
  os.precision(12);
  os << "omega_c=" << p.omega_c << " omega_b=" << p.omega_b
     << " omega_a=" << p.omega_a << " g=" << p.g << " lambda=" << p.lambda
     << " kappa=" << p.kappa << " n_trunc=" << ctx.n_trunc;
  return os.str();
}

}  // namespace

int default_scattering_n_trunc(double beta) {
  return default_overlap_n_trunc(beta) + 12;
}

ScatteringContext make_context(const SystemParams& p, int n_trunc) {
  DerivedParams d = derive_params(p);
  if (n_trunc <= 0) n_trunc = default_scattering_n_trunc(d.beta);
  ScatteringContext ctx{p, d, overlap_matrix(p, n_trunc), n_trunc, {}, {}};
  int dim = label_count(n_trunc);
  ctx.e0.resize(dim);
  ctx.e1.resize(dim);
  for (int i = 0; i < dim; ++i) {
    Label l = label_from_index(i);
    ctx.e0[i] = total_energy(0, l, p);
    ctx.e1[i] = total_energy(1, l, p);
  }
  return ctx;
}

std::complex<double> effective_detuning(const ScatteringContext& ctx,
                                        double omega_k, const Label& final_lbl,
                                        const Label& initial) {
  int f = label_index(final_lbl), i = label_index(initial);
  if (f >= int(ctx.e0.size()) || i >= int(ctx.e0.size()))
    throw std::invalid_argument("effective_detuning: label beyond truncation");
  return {omega_k + ctx.e0[i] - ctx.e1[f], 0.5 * ctx.params.kappa};
}

std::complex<double> excitation_amplitude(const ScatteringContext& ctx,
                                          double omega_k,
                                          const Label& final_lbl,
                                          const Label& initial) {
  int f = label_index(final_lbl), i = label_index(initial);
  if (f >= int(ctx.e0.size()) || i >= int(ctx.e0.size()))
    throw std::invalid_argument("excitation_amplitude: label beyond truncation");
  double v = std::sqrt(ctx.params.kappa);
  return v * ctx.overlap.entries(i, f) /
         effective_detuning(ctx, omega_k, final_lbl, initial);
}

std::complex<double> transmission_amplitude(const ScatteringContext& ctx,
                                            double omega_k,
                                            const Label& final_lbl,
                                            const Label& initial) {
  int f = label_index(final_lbl), i = label_index(initial);
  int dim = int(ctx.e0.size());
  if (f >= dim || i >= dim)
    throw std::invalid_argument(
        "transmission_amplitude: label beyond truncation");
  double kappa = ctx.params.kappa;
  std::complex<double> sum = 0.0;
  for (int v = 0; v < dim; ++v) {
    double num = ctx.overlap.entries(f, v) * ctx.overlap.entries(i, v);
    if (num == 0.0) continue;
    std::complex<double> dt(omega_k + ctx.e0[i] - ctx.e1[v], 0.5 * kappa);
    sum += num / dt;
  }
  std::complex<double> t = -std::complex<double>(0.0, 1.0) * kappa * sum;
  if (f == i) t += 1.0;
  return t;
}

double transmission_tail_bound(const ScatteringContext& ctx,
                               const Label& final_lbl, const Label& initial) {
  double df = std::max(0.0, ctx.row_defect(label_index(final_lbl)));
  double di = std::max(0.0, ctx.row_defect(label_index(initial)));
  // |kappa * sum_tail| <= kappa * sqrt(df*di) / (kappa/2)
  return 2.0 * std::sqrt(df * di);
}

double transmission_flux(const ScatteringContext& ctx, double omega_k,
                         const Label& initial) {
  int dim = int(ctx.e0.size());
  double flux = 0.0;
  for (int f = 0; f < dim; ++f)
    flux += std::norm(
        transmission_amplitude(ctx, omega_k, label_from_index(f), initial));
  return flux;
}

SpectrumSeries cavity_excitation_spectrum(const ScatteringContext& ctx,
                                          const Label& initial,
                                          const std::vector<double>& grid) {
  int i = label_index(initial);
  int dim = int(ctx.e0.size());
  if (i >= dim)
    throw std::invalid_argument(
        "cavity_excitation_spectrum: initial label beyond truncation");
  SpectrumSeries s;
  s.grid = grid;
  s.value.resize(grid.size());
  double kappa = ctx.params.kappa;
  for (size_t k = 0; k < grid.size(); ++k) {
    double omega_k = ctx.params.omega_c + grid[k];
    double total = 0.0;
    for (int f = 0; f < dim; ++f) {
      double num = ctx.overlap.entries(i, f);
      if (num == 0.0) continue;
      double re = omega_k + ctx.e0[i] - ctx.e1[f];
      total += kappa * num * num / (re * re + 0.25 * kappa * kappa);
    }
    s.value[k] = total;
  }
  // Missing final labels: sum of kappa*O^2/|denom|^2 <= (4/kappa) * defect.
  s.tail_estimate = 4.0 / kappa * std::max(0.0, ctx.row_defect(i));
  s.tail_warning = s.tail_estimate > 1e-8;
  s.fingerprint = context_fingerprint(ctx) + " initial=" +
                  std::to_string(initial.n) + to_string(initial.xi);
  return s;
}

std::vector<PredictedPeak> predict_excitation_peaks(
    const ScatteringContext& ctx, const Label& initial, int n_max) {
  int i = label_index(initial);
  if (n_max > ctx.n_trunc)
    throw std::invalid_argument(
        "predict_excitation_peaks: n_max beyond truncation");
  std::vector<PredictedPeak> out;
  for (int f = 0; f < label_count(n_max); ++f) {
    Label lf = label_from_index(f);
    double w = ctx.overlap.entries(i, f);
    out.push_back({ctx.e1[f] - ctx.e0[i] - ctx.params.omega_c, w * w, lf});
  }
  std::sort(out.begin(), out.end(),
            [](const PredictedPeak& a, const PredictedPeak& b) {
              return a.delta_k < b.delta_k;
            });
  return out;
}

std::vector<double> default_excitation_grid(const ScatteringContext& ctx,
                                            const Label& initial,
                                            double weight_floor) {
  // Stay a couple of shells below the truncation edge where weights and
  // energies are converged.
  int n_max = std::max(1, ctx.n_trunc - 2);
  std::vector<PredictedPeak> peaks =
      predict_excitation_peaks(ctx, initial, n_max);
  double kappa = ctx.params.kappa;
  std::vector<std::vector<double>> parts;
  double lo = HUGE_VAL, hi = -HUGE_VAL;
  for (const PredictedPeak& p : peaks) {
    if (p.weight < weight_floor) continue;
    parts.push_back(
        uniform_grid(p.delta_k - 5.0 * kappa, p.delta_k + 5.0 * kappa, 2001));
    lo = std::min(lo, p.delta_k);
    hi = std::max(hi, p.delta_k);
  }
  if (parts.empty())
    throw std::invalid_argument(
        "default_excitation_grid: no predicted peak above the weight floor");
  double pad = 0.5 * ctx.params.omega_b;
  parts.push_back(uniform_grid(lo - pad, hi + pad, 2001));
  return merge_grids(parts);
}

}  // namespace homs
