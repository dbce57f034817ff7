#include "qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace homs {

QubitDensity qubit_from_bloch(double rx, double ry, double rz) {
  using namespace std::complex_literals;
  double r2 = rx * rx + ry * ry + rz * rz;
  if (!std::isfinite(r2) || r2 > 1.0 + 1e-12)
    throw std::invalid_argument("qubit_from_bloch: need |r| <= 1");
  QubitDensity rho;
  rho << 0.5 * (1.0 + rz), 0.5 * (rx - 1i * ry),
         0.5 * (rx + 1i * ry), 0.5 * (1.0 - rz);
  return rho;
}

BlochVector bloch_from_qubit(const QubitDensity& rho) {
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(),
          rho(0, 0).real() - rho(1, 1).real()};
}

void validate_qubit_density(const QubitDensity& rho, double tol) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("density matrix must be Hermitian");
  if (std::abs(rho.trace() - std::complex<double>(1.0)) > tol)
    throw std::invalid_argument("density matrix must have unit trace");
  Eigen::SelfAdjointEigenSolver<QubitDensity> es(rho);
  if (es.eigenvalues().minCoeff() < -tol ||
      es.eigenvalues().maxCoeff() > 1.0 + tol)
    throw std::invalid_argument(
        "density matrix eigenvalues must lie in [0, 1]");
}

}  // namespace homs
