#pragma once

#include <Eigen/Dense>

namespace homs {

// 2x2 density matrix in the basis (|down>, |up>), index 0 = down.
using QubitDensity = Eigen::Matrix2cd;

// rho = (I + r_x sigma_x + r_y sigma_y + r_z sigma_z)/2 with the Pauli
// matrices taken in the (down, up) display order, so r_z = rho_00 - rho_11.
// Throws std::invalid_argument outside the Bloch ball (|r| > 1).
QubitDensity qubit_from_bloch(double rx, double ry, double rz);

struct BlochVector {
  double rx, ry, rz;
};

BlochVector bloch_from_qubit(const QubitDensity& rho);

// Throws std::invalid_argument unless rho is Hermitian with unit trace and
// eigenvalues in [0,1], all within tol.
void validate_qubit_density(const QubitDensity& rho, double tol = 1e-10);

}  // namespace homs
