#include "pulse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace homs {

double gaussian_amplitude(const PulseSpec& pulse, double omega) {
  if (pulse.d <= 0.0)
    throw std::invalid_argument("gaussian_amplitude: width must be positive");
  double z = (omega - pulse.omega0) / pulse.d;
  return std::pow(2.0 / (M_PI * pulse.d * pulse.d), 0.25) * std::exp(-z * z);
}

InitialState pure_initial(const Label& l, int n_trunc) {
  int idx = label_index(l);
  if (idx >= label_count(n_trunc))
    throw std::invalid_argument("pure_initial: label beyond truncation");
  InitialState s;
  s.coeff.assign(label_count(n_trunc), 0.0);
  s.coeff[idx] = 1.0;
  return s;
}

InitialState qubit_initial_state(std::complex<double> a,
                                 std::complex<double> b,
                                 const SystemParams& p, int n_trunc) {
  double norm = std::norm(a) + std::norm(b);
  if (std::abs(norm - 1.0) > 1e-10)
    throw std::invalid_argument("qubit_initial_state: |a|^2+|b|^2 must be 1");
  if (n_trunc < 1)
    throw std::invalid_argument("qubit_initial_state: n_trunc must be >= 1");
  double th = mixing_angle(1, p.lambda, p.omega_a - p.omega_b);
  InitialState s;
  s.coeff.assign(label_count(n_trunc), 0.0);
  s.coeff[label_index({0, Branch::ground})] = a;
  s.coeff[label_index({1, Branch::plus})] = b * std::cos(th);
  s.coeff[label_index({1, Branch::minus})] = -b * std::sin(th);
  return s;
}

namespace {

void check_initial(const InitialState& initial, int dim) {
  if (int(initial.coeff.size()) != dim)
    throw std::invalid_argument(
        "initial state dimension does not match the context truncation");
  double norm = 0.0;
  for (const auto& c : initial.coeff) norm += std::norm(c);
  if (std::abs(norm - 1.0) > 1e-8)
    throw std::invalid_argument("initial state must be normalised");
}

// Indices of the labels the initial state actually populates.
std::vector<int> active_components(const InitialState& initial) {
  std::vector<int> idx;
  for (int i = 0; i < int(initial.coeff.size()); ++i)
    if (std::norm(initial.coeff[i]) > 1e-20) idx.push_back(i);
  return idx;
}

}  // namespace

SpectrumSeries transmission_spectrum(const ScatteringContext& ctx,
                                     const PulseSpec& pulse,
                                     const InitialState& initial,
                                     const std::vector<double>& grid) {
  int dim = label_count(ctx.n_trunc);
  check_initial(initial, dim);
  std::vector<int> active = active_components(initial);

  SpectrumSeries s;
  s.grid = grid;
  s.value.resize(grid.size());
  // Beyond this many widths the Gaussian squared is below 1e-70 of its peak.
  double reach = 9.0 * pulse.d;
  for (size_t k = 0; k < grid.size(); ++k) {
    double omega_k = ctx.params.omega_c + grid[k];
    double total = 0.0;
    for (int f = 0; f < dim; ++f) {
      Label lf = label_from_index(f);
      std::complex<double> amp = 0.0;
      for (int i : active) {
        double u = omega_k + ctx.e0[f] - ctx.e0[i];
        if (std::abs(u - pulse.omega0) > reach) continue;
        amp += initial.coeff[i] * gaussian_amplitude(pulse, u) *
               transmission_amplitude(ctx, u, lf, label_from_index(i));
      }
      total += std::norm(amp);
    }
    s.value[k] = total;
  }

  // Weight lost to final labels beyond the truncation: outgoing flux from
  // each populated component is exactly 1 over the full label set, so the
  // kept-label flux deficit near the pulse centre measures the missing part.
  double tail = 0.0;
  for (int i : active) {
    double deficit = 0.0;
    for (double u : {pulse.omega0 - 2.0 * pulse.d, pulse.omega0,
                     pulse.omega0 + 2.0 * pulse.d}) {
      double fl = transmission_flux(ctx, u, label_from_index(i));
      deficit = std::max(deficit, std::max(0.0, 1.0 - fl));
    }
    tail += std::abs(initial.coeff[i]) * std::sqrt(deficit);
  }
  s.tail_estimate = tail * tail;
  s.tail_warning = s.tail_estimate > 1e-8;
  s.width_warning = pulse.d >= 0.1 * ctx.params.omega_b;
  s.integral = integrate(s.grid, s.value);
  s.coverage_warning = s.integral < 0.999;

  std::ostringstream os;
  os.precision(12);
  os << "pulse omega0=" << pulse.omega0 << " d=" << pulse.d
     << " n_trunc=" << ctx.n_trunc;
  s.fingerprint = os.str();
  return s;
}

SpectrumSeries mixed_state_spectrum(const ScatteringContext& ctx,
                                    const PulseSpec& pulse,
                                    const QubitDensity& rho,
                                    const std::vector<double>& grid) {
  validate_qubit_density(rho);
  Eigen::SelfAdjointEigenSolver<QubitDensity> es(rho);
  SpectrumSeries out;
  out.grid = grid;
  out.value.assign(grid.size(), 0.0);
  for (int u = 0; u < 2; ++u) {
    double weight = es.eigenvalues()(u);
    if (weight <= 1e-14) continue;
    std::complex<double> a = es.eigenvectors()(0, u);
    std::complex<double> b = es.eigenvectors()(1, u);
    InitialState init = qubit_initial_state(a, b, ctx.params, ctx.n_trunc);
    SpectrumSeries part = transmission_spectrum(ctx, pulse, init, grid);
    for (size_t k = 0; k < grid.size(); ++k)
      out.value[k] += weight * part.value[k];
    out.tail_estimate += weight * part.tail_estimate;
    out.tail_warning = out.tail_warning || part.tail_warning;
    out.width_warning = part.width_warning;
    out.fingerprint = part.fingerprint + " mixed";
  }
  out.integral = integrate(out.grid, out.value);
  out.coverage_warning = out.integral < 0.999;
  return out;
}

// Smallest N with a Poisson(beta^2) tail beyond N below 5e-4: red sidebands
// past that carry negligible single-photon weight, with margin left for
// branch-splitting weight the bare Poisson law does not see.
static int auto_sideband_count(double beta2, int n_trunc) {
  double term = std::exp(-beta2);
  double cum = term;
  int n = 0;
  while (cum < 0.9995 && n < n_trunc - 1) {
    ++n;
    term *= beta2 / n;
    cum += term;
  }
  return std::max(n, 1);
}

std::vector<double> default_transmission_grid(const ScatteringContext& ctx,
                                              const InitialState& initial,
                                              const PulseSpec& pulse,
                                              int n_show) {
  int dim = label_count(ctx.n_trunc);
  check_initial(initial, dim);
  std::vector<int> active = active_components(initial);
  const DerivedParams& dv = ctx.derived;
  double kappa = ctx.params.kappa;
  if (n_show < 0)
    n_show = auto_sideband_count(dv.beta * dv.beta, ctx.n_trunc);
  double lo = -dv.delta1 - dv.delta2 - (n_show + 0.5) * ctx.params.omega_b;
  // An excited initial component can hand its excitation energy to the
  // photon; widen the blue edge so those lines are not clipped.
  double e0_min = *std::min_element(ctx.e0.begin(), ctx.e0.end());
  double excess = 0.0;
  for (int i : active)
    if (std::norm(initial.coeff[i]) > 1e-6)
      excess = std::max(excess, ctx.e0[i] - e0_min);
  double hi = 5.0 * kappa;
  if (excess > 0.0) hi += excess + 0.5 * ctx.params.omega_b;
  double half = 6.0 * (pulse.d + kappa);

  std::vector<std::vector<double>> parts;
  parts.push_back(uniform_grid(lo, hi, 2001));

  auto add_window = [&](double pos) {
    if (pos < lo || pos > hi) return;
    parts.push_back(uniform_grid(pos - half, pos + half, 2001));
  };

  // Sidebands the pulse center reaches through each populated component:
  // the scattered image of the pulse peak for every final label with an
  // appreciable amplitude there.
  for (int i : active) {
    Label li = label_from_index(i);
    for (int f = 0; f < dim; ++f) {
      std::complex<double> t = transmission_amplitude(
          ctx, pulse.omega0, label_from_index(f), li);
      if (std::norm(initial.coeff[i]) * std::norm(t) < 1e-7) continue;
      add_window(pulse.omega0 - ctx.params.omega_c - (ctx.e0[f] - ctx.e0[i]));
    }
    // One-photon resonances lying inside the pulse bandwidth, imaged onto
    // each final label they can decay to.
    for (int v = 0; v < dim; ++v) {
      double u_res = ctx.e1[v] - ctx.e0[i];
      double z = (u_res - pulse.omega0) / pulse.d;
      double ov_iv = ctx.overlap.entries(i, v);
      if (z * z > 14.0 || ov_iv * ov_iv < 1e-8) continue;
      for (int f = 0; f < dim; ++f) {
        double ov_fv = ctx.overlap.entries(f, v);
        if (ov_fv * ov_fv < 1e-6) continue;
        add_window(ctx.e1[v] - ctx.e0[f] - ctx.params.omega_c);
      }
    }
  }
  return merge_grids(parts);
}

}  // namespace homs
