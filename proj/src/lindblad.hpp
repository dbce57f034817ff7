#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "params.hpp"
#include "spectrum.hpp"

namespace homs {

// Fock cutoffs of the numerical product space cavity (x) TLS (x) mechanics;
// the TLS dimension is fixed at 2. State index: (m_c * 2 + s) * n_b + m_b
// with s = 0 for down, 1 for up.
struct TruncationSpec {
  int n_c{3};
  int n_b{25};
};

// Frame convention: the frame rotates at the drive frequency on the cavity
// only (the drive couples only to the cavity, and every other term commutes
// with c^dag c, so the rest of the Hamiltonian is unchanged):
//   H = -Delta_L c^dag c + omega_b b^dag b - g c^dag c (b + b^dag)
//       + (omega_a/2) sigma_z + lambda (b sigma_+ + b^dag sigma_-)
//       + eta (c + c^dag)
// with Delta_L = omega_L - omega_c. Real symmetric in the product basis.
Eigen::SparseMatrix<double> lindblad_hamiltonian(const SystemParams& p,
                                                 double eta, double delta_l,
                                                 const TruncationSpec& t);

struct SteadyStateResult {
  Eigen::MatrixXcd rho;
  double mean_photon;
  double residual;            // ||L[rho]|| of the unconstrained generator
  double trace_defect;        // |tr rho - 1| before renormalisation
  double hermiticity_defect;  // max |rho - rho^dag| before symmetrisation
  double min_eigenvalue;      // of the symmetrised, renormalised rho
};

// Steady state of the driven dissipative system by direct sparse LU on the
// vectorised generator, with the equation for the vacuum population replaced
// by the trace constraint. Jump operators: sqrt(kappa) c,
// sqrt(gamma_a (n_a + 1)) sigma_-, sqrt(gamma_a n_a) sigma_+,
// sqrt(gamma_b (n_b + 1)) b, sqrt(gamma_b n_b) b^dag.
class LindbladSolver {
 public:
  // Throws std::invalid_argument for truncations below the displaced-state
  // support or too large for a direct solve, and numerical_error when an
  // exact conservation law (sigma_z with lambda = gamma_a = 0, or mechanical
  // quanta with g = lambda = gamma_b = 0) makes the steady state non-unique.
  LindbladSolver(const SystemParams& p, double eta, const TruncationSpec& t);

  // Throws numerical_error when the factorisation fails or the residual
  // stays above 1e-10 after one step of iterative refinement.
  SteadyStateResult solve(double delta_l) const;

  // Mean cavity photon number per drive detuning. Points are independent
  // solves; concurrency is capped to bound factorisation memory.
  SpectrumSeries sweep(const std::vector<double>& grid) const;

  int dimension() const { return dim_; }
  const TruncationSpec& truncation() const { return trunc_; }

 private:
  SystemParams params_;
  double eta_;
  TruncationSpec trunc_;
  int dim_;   // 2 * n_c * n_b
  int nvec_;  // dim^2

  using Triplet = Eigen::Triplet<std::complex<double>>;
  std::vector<Triplet> base_;             // generator minus drive detuning,
                                          // minus the replaced row
  std::vector<std::pair<int, std::complex<double>>> row0_;  // replaced row
  std::vector<double> photon_;            // c^dag c diagonal per state index
};

}  // namespace homs
