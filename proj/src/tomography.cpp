#include "tomography.hpp"

#include <cmath>
#include <stdexcept>

namespace homs {

MubSet MubSet::standard() {
  using namespace std::complex_literals;
  MubSet m;
  m.u[0] = Eigen::Matrix2cd::Identity();
  double r = 1.0 / std::sqrt(2.0);
  m.u[1] << r, r, r, -r;
  // exp(i pi/4 sigma_x) = cos(pi/4) I + i sin(pi/4) sigma_x
  m.u[2] << r, r * 1i, r * 1i, r;
  return m;
}

Eigen::Vector2cd MubSet::basis_state(int s, int l) const {
  if (s < 0 || s > 2 || l < 0 || l > 1)
    throw std::invalid_argument("MubSet: basis index out of range");
  return u[s].col(l);
}

Eigen::Matrix2cd MubSet::projector(int s, int l) const {
  Eigen::Vector2cd psi = basis_state(s, l);
  return psi * psi.adjoint();
}

SidebandPeaks tomography_peak_positions(const ScatteringContext& ctx) {
  if (ctx.params.omega_a == ctx.params.omega_b)
    throw std::invalid_argument(
        "tomography needs a detuned TLS (omega_a != omega_b)");
  if (ctx.n_trunc < 2)
    throw std::invalid_argument("tomography needs n_trunc >= 2");
  double omega_c = ctx.params.omega_c;
  SidebandPeaks r{};
  r.pos_down = ctx.e1[label_index({0, Branch::ground})] -
               ctx.e0[label_index({1, Branch::minus})] - omega_c;
  r.pos_up = ctx.e1[label_index({1, Branch::plus})] -
             ctx.e0[label_index({2, Branch::plus})] - omega_c;
  r.separation = std::abs(r.pos_down - r.pos_up);
  return r;
}

namespace {

// Peak height near pos: the refined local maximum when one exists, else the
// largest sample (a branch with no population has only the flat tail of the
// other peak in its window).
double height_near(const std::vector<double>& x, const std::vector<double>& y,
                   double pos, double radius) {
  try {
    return find_peak_near(x, y, pos, radius).height;
  } catch (const std::invalid_argument&) {
    double best = 0.0;
    for (size_t i = 0; i < x.size(); ++i)
      if (std::abs(x[i] - pos) <= radius) best = std::max(best, y[i]);
    return best;
  }
}

}  // namespace

std::array<double, 2> simulate_probabilities(const ScatteringContext& ctx,
                                             const QubitDensity& rho, int s,
                                             const PulseSpec& pulse) {
  if (s < 0 || s > 2)
    throw std::invalid_argument("simulate_probabilities: s must be 0..2");
  validate_qubit_density(rho);
  SidebandPeaks peaks = tomography_peak_positions(ctx);
  double resolvable = 3.0 * std::min(pulse.d, ctx.params.kappa);
  if (peaks.separation < resolvable)
    throw std::invalid_argument(
        "sideband peaks closer than the resolvable width; increase the "
        "TLS-mechanics coupling or narrow the pulse");

  MubSet mub = MubSet::standard();
  QubitDensity rotated = mub.u[s].adjoint() * rho * mub.u[s];

  double radius = 0.45 * peaks.separation;
  std::vector<double> grid = merge_grids(
      {uniform_grid(peaks.pos_down - radius, peaks.pos_down + radius, 2001),
       uniform_grid(peaks.pos_up - radius, peaks.pos_up + radius, 2001)});
  SpectrumSeries spec = mixed_state_spectrum(ctx, pulse, rotated, grid);

  double h_down = height_near(spec.grid, spec.value, peaks.pos_down, radius);
  double h_up = height_near(spec.grid, spec.value, peaks.pos_up, radius);
  double total = h_down + h_up;
  if (total <= 0.0)
    throw std::invalid_argument(
        "simulate_probabilities: no sideband signal in either window");
  return {h_down / total, h_up / total};
}

ProbabilityTable tomography_simulate(const ScatteringContext& ctx,
                                     const QubitDensity& rho,
                                     const PulseSpec& pulse) {
  ProbabilityTable t;
  for (int s = 0; s < 3; ++s) t[s] = simulate_probabilities(ctx, rho, s, pulse);
  return t;
}

QubitDensity reconstruct(const ProbabilityTable& probs,
                         double* min_eigenvalue) {
  for (const auto& row : probs) {
    if (row[0] < -1e-3 || row[1] < -1e-3)
      throw std::invalid_argument("reconstruct: negative probability");
    if (std::abs(row[0] + row[1] - 1.0) > 1e-3)
      throw std::invalid_argument(
          "reconstruct: probability rows must sum to 1");
  }
  MubSet mub = MubSet::standard();
  QubitDensity rho = -QubitDensity::Identity();
  for (int s = 0; s < 3; ++s)
    for (int l = 0; l < 2; ++l) rho += probs[s][l] * mub.projector(s, l);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  if (min_eigenvalue) {
    Eigen::SelfAdjointEigenSolver<QubitDensity> es(rho);
    *min_eigenvalue = es.eigenvalues().minCoeff();
  }
  return rho;
}

double fidelity(const QubitDensity& rho, const QubitDensity& rho_tilde) {
  double cross = (rho * rho_tilde).trace().real();
  double da = std::max(0.0, rho.determinant().real());
  double db = std::max(0.0, rho_tilde.determinant().real());
  double f = cross + 2.0 * std::sqrt(da * db);
  return std::min(1.0, std::max(0.0, f));
}

}  // namespace homs
