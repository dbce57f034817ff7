#include "lindblad.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>
#ifdef HOMS_HAVE_UMFPACK
#include <Eigen/UmfPackSupport>
#endif

#include "errors.hpp"
#include "threading.hpp"

namespace homs {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using SpMatC = Eigen::SparseMatrix<std::complex<double>>;

int state_index(int mc, int s, int mb, const TruncationSpec& t) {
  return (mc * 2 + s) * t.n_b + mb;
}

void check_truncation(const SystemParams& p, const TruncationSpec& t) {
  if (t.n_c < 2)
    throw std::invalid_argument("lindblad: n_c must be >= 2");
  double beta = p.g / p.omega_b;
  int support = int(std::ceil(beta * beta + 5.0 * beta)) + 5;
  if (t.n_b < support)
    throw std::invalid_argument(
        "lindblad: n_b below the displaced-state support (" +
        std::to_string(support) + " for these parameters)");
  if (2 * t.n_c * t.n_b > 256)
    throw std::invalid_argument(
        "lindblad: truncation too large for the direct solver");
}

SpMat annihilator_cavity(const TruncationSpec& t) {
  int dim = 2 * t.n_c * t.n_b;
  SpMat c(dim, dim);
  std::vector<Eigen::Triplet<double>> tr;
  for (int mc = 1; mc < t.n_c; ++mc)
    for (int s = 0; s < 2; ++s)
      for (int mb = 0; mb < t.n_b; ++mb)
        tr.emplace_back(state_index(mc - 1, s, mb, t),
                        state_index(mc, s, mb, t), std::sqrt(double(mc)));
  c.setFromTriplets(tr.begin(), tr.end());
  return c;
}

SpMat annihilator_mech(const TruncationSpec& t) {
  int dim = 2 * t.n_c * t.n_b;
  SpMat b(dim, dim);
  std::vector<Eigen::Triplet<double>> tr;
  for (int mc = 0; mc < t.n_c; ++mc)
    for (int s = 0; s < 2; ++s)
      for (int mb = 1; mb < t.n_b; ++mb)
        tr.emplace_back(state_index(mc, s, mb - 1, t),
                        state_index(mc, s, mb, t), std::sqrt(double(mb)));
  b.setFromTriplets(tr.begin(), tr.end());
  return b;
}

SpMat lower_tls(const TruncationSpec& t) {
  int dim = 2 * t.n_c * t.n_b;
  SpMat sm(dim, dim);
  std::vector<Eigen::Triplet<double>> tr;
  for (int mc = 0; mc < t.n_c; ++mc)
    for (int mb = 0; mb < t.n_b; ++mb)
      tr.emplace_back(state_index(mc, 0, mb, t), state_index(mc, 1, mb, t),
                      1.0);
  sm.setFromTriplets(tr.begin(), tr.end());
  return sm;
}

// kron(J, J) - kron(I, J^T J)/2 - kron(J^T J, I)/2 for a real jump operator
// (column-stacked convention).
SpMat dissipator(const SpMat& j, const SpMat& identity) {
  SpMat jtj = SpMat(j.transpose()) * j;
  SpMat out = Eigen::kroneckerProduct(j, j);
  out -= 0.5 * Eigen::kroneckerProduct(identity, jtj).eval();
  out -= 0.5 * Eigen::kroneckerProduct(jtj, identity).eval();
  return out;
}

}  // namespace

Eigen::SparseMatrix<double> lindblad_hamiltonian(const SystemParams& p,
                                                 double eta, double delta_l,
                                                 const TruncationSpec& t) {
  validate(p);
  if (eta < 0.0 || !std::isfinite(eta))
    throw std::invalid_argument("lindblad: eta must be finite and >= 0");
  check_truncation(p, t);
  int dim = 2 * t.n_c * t.n_b;
  std::vector<Eigen::Triplet<double>> tr;
  for (int mc = 0; mc < t.n_c; ++mc)
    for (int s = 0; s < 2; ++s)
      for (int mb = 0; mb < t.n_b; ++mb) {
        int i = state_index(mc, s, mb, t);
        double diag = -delta_l * mc + p.omega_b * mb +
                      0.5 * p.omega_a * (s == 1 ? 1.0 : -1.0);
        tr.emplace_back(i, i, diag);
        // -g c^dag c (b + b^dag)
        if (mb + 1 < t.n_b) {
          double v = -p.g * mc * std::sqrt(mb + 1.0);
          if (v != 0.0) {
            tr.emplace_back(state_index(mc, s, mb + 1, t), i, v);
            tr.emplace_back(i, state_index(mc, s, mb + 1, t), v);
          }
        }
        // lambda b sigma_+ : |up, mb-1><down, mb|
        if (s == 0 && mb > 0 && p.lambda != 0.0) {
          double v = p.lambda * std::sqrt(double(mb));
          tr.emplace_back(state_index(mc, 1, mb - 1, t), i, v);
          tr.emplace_back(i, state_index(mc, 1, mb - 1, t), v);
        }
        // eta (c + c^dag)
        if (mc + 1 < t.n_c && eta != 0.0) {
          double v = eta * std::sqrt(mc + 1.0);
          tr.emplace_back(state_index(mc + 1, s, mb, t), i, v);
          tr.emplace_back(i, state_index(mc + 1, s, mb, t), v);
        }
      }
  SpMat h(dim, dim);
  h.setFromTriplets(tr.begin(), tr.end());
  return h;
}

LindbladSolver::LindbladSolver(const SystemParams& p, double eta,
                               const TruncationSpec& t)
    : params_(p), eta_(eta), trunc_(t) {
  validate(p);
  if (eta < 0.0 || !std::isfinite(eta))
    throw std::invalid_argument("lindblad: eta must be finite and >= 0");
  // Exact conservation laws make the Liouvillian singular with a degenerate
  // steady-state family; a direct solve would silently return an arbitrary
  // member, so refuse up front.
  if (p.lambda == 0.0 && p.gamma_a == 0.0)
    throw numerical_error(
        "lindblad: sigma_z is conserved (lambda = 0 and gamma_a = 0), the "
        "steady state is not unique");
  if (p.g == 0.0 && p.lambda == 0.0 && p.gamma_b == 0.0)
    throw numerical_error(
        "lindblad: mechanical quanta are conserved (g = lambda = gamma_b = "
        "0), the steady state is not unique");
  check_truncation(p, t);
  dim_ = 2 * t.n_c * t.n_b;
  nvec_ = dim_ * dim_;

  SpMat h = lindblad_hamiltonian(p, eta, 0.0, t);
  SpMat identity(dim_, dim_);
  identity.setIdentity();

  SpMat lh = Eigen::kroneckerProduct(identity, h);
  lh -= Eigen::kroneckerProduct(h, identity).eval();

  SpMat ld(nvec_, nvec_);
  SpMat c = annihilator_cavity(t);
  ld = dissipator(SpMat(std::sqrt(p.kappa) * c), identity);
  SpMat sm = lower_tls(t);
  if (p.gamma_a > 0.0) {
    ld += dissipator(SpMat(std::sqrt(p.gamma_a * (p.n_a + 1.0)) * sm),
                     identity);
    if (p.n_a > 0.0)
      ld += dissipator(
          SpMat(std::sqrt(p.gamma_a * p.n_a) * SpMat(sm.transpose())),
          identity);
  }
  SpMat b = annihilator_mech(t);
  if (p.gamma_b > 0.0) {
    ld += dissipator(SpMat(std::sqrt(p.gamma_b * (p.n_b + 1.0)) * b),
                     identity);
    if (p.n_b > 0.0)
      ld += dissipator(
          SpMat(std::sqrt(p.gamma_b * p.n_b) * SpMat(b.transpose())),
          identity);
  }

  const std::complex<double> mi(0.0, -1.0);
  base_.reserve(size_t(lh.nonZeros()) + size_t(ld.nonZeros()));
  for (int k = 0; k < lh.outerSize(); ++k)
    for (SpMat::InnerIterator it(lh, k); it; ++it) {
      if (it.row() == 0)
        row0_.emplace_back(int(it.col()), mi * it.value());
      else
        base_.emplace_back(int(it.row()), int(it.col()), mi * it.value());
    }
  for (int k = 0; k < ld.outerSize(); ++k)
    for (SpMat::InnerIterator it(ld, k); it; ++it) {
      if (it.row() == 0)
        row0_.emplace_back(int(it.col()), it.value());
      else
        base_.emplace_back(int(it.row()), int(it.col()), it.value());
    }

  photon_.resize(dim_);
  for (int mc = 0; mc < t.n_c; ++mc)
    for (int s = 0; s < 2; ++s)
      for (int mb = 0; mb < t.n_b; ++mb) photon_[state_index(mc, s, mb, t)] = mc;
}

SteadyStateResult LindbladSolver::solve(double delta_l) const {
  using Cd = std::complex<double>;
  std::vector<Triplet> trips = base_;
  trips.reserve(trips.size() + nvec_ + dim_);
  // Drive detuning enters only on the coherence rows: i delta_l (n_row -
  // n_col). Zero on every population row, so the replaced row is untouched.
  for (int k = 1; k < nvec_; ++k) {
    double shift = photon_[k % dim_] - photon_[k / dim_];
    if (shift != 0.0) trips.emplace_back(k, k, Cd(0.0, delta_l * shift));
  }
  for (int i = 0; i < dim_; ++i) trips.emplace_back(0, i * dim_ + i, 1.0);

  SpMatC a(nvec_, nvec_);
  a.setFromTriplets(trips.begin(), trips.end());
  a.makeCompressed();

#ifdef HOMS_HAVE_UMFPACK
  Eigen::UmfPackLU<SpMatC> lu;
#else
  Eigen::SparseLU<SpMatC> lu;
#endif
  lu.analyzePattern(a);
  lu.factorize(a);
  if (lu.info() != Eigen::Success)
    throw numerical_error(
        "steady state: Liouvillian factorisation failed (no unique steady "
        "state?)");

  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(nvec_);
  rhs(0) = 1.0;
  Eigen::VectorXcd x = lu.solve(rhs);
  x += lu.solve(Eigen::VectorXcd(rhs - a * x));  // one refinement step

  Eigen::VectorXcd res = a * x - rhs;
  Cd row0_dot = 0.0;
  for (const auto& [col, val] : row0_) row0_dot += val * x(col);
  // The drive-detuning diagonal vanishes on row 0, so row0_ is complete.
  double residual = std::sqrt(res.tail(nvec_ - 1).squaredNorm() +
                              std::norm(row0_dot));
  if (!std::isfinite(residual) || residual > 1e-10)
    throw numerical_error("steady state: residual " +
                          std::to_string(residual) + " exceeds 1e-10");

  SteadyStateResult out;
  Eigen::Map<const Eigen::MatrixXcd> rho_map(x.data(), dim_, dim_);
  out.trace_defect = std::abs(rho_map.trace() - Cd(1.0));
  out.hermiticity_defect =
      (rho_map - rho_map.adjoint()).cwiseAbs().maxCoeff();
  out.rho = 0.5 * (rho_map + rho_map.adjoint());
  out.rho /= out.rho.trace().real();
  out.residual = residual;
  double mean = 0.0;
  for (int i = 0; i < dim_; ++i) mean += photon_[i] * out.rho(i, i).real();
  out.mean_photon = mean;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(out.rho,
                                                     Eigen::EigenvaluesOnly);
  out.min_eigenvalue = es.eigenvalues().minCoeff();
  return out;
}

SpectrumSeries LindbladSolver::sweep(const std::vector<double>& grid) const {
  SpectrumSeries s;
  s.grid = grid;
  s.value.assign(grid.size(), 0.0);
  // Each point factorises its own copy of the generator; cap the concurrency
  // so peak memory stays bounded.
  parallel_for(
      int(grid.size()), [&](int k) { s.value[k] = solve(grid[k]).mean_photon; },
      4);
  std::ostringstream os;
  os.precision(12);
  os << "lindblad eta=" << eta_ << " n_c=" << trunc_.n_c
     << " n_b=" << trunc_.n_b;
  s.fingerprint = os.str();
  return s;
}

}  // namespace homs
