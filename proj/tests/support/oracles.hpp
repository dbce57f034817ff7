// Brute-force reference implementations used only by the tests. Everything
// here goes through dense matrix exponentials and eigensolvers instead of the
// closed forms in the library, so agreement is meaningful.
#pragma once

#include <Eigen/Dense>

#include "ladder.hpp"
#include "params.hpp"

namespace testsupport {

// exp[beta (b^dag - b)] on an n_fock-level space via diagonalisation of the
// Hermitian generator i beta (b^dag - b).
Eigen::MatrixXd displacement_operator(double beta, int n_fock);

// exp(-i alpha sigma_y) in the (down, up) basis, again via diagonalisation.
Eigen::Matrix2d spin_rotation(double alpha);

// Frame change U1(1) U2(1) on Fock (x) spin space (spin index fast, down=0).
Eigen::MatrixXd frame_change_operator(double beta, double alpha, int n_fock);

// Doublet eigenvector (c_up, c_down) from a freshly built 2x2 block,
// sign-fixed like the library: plus has c_up > 0, minus has c_down > 0.
Eigen::Vector2d dressed_eigenvector(int n, homs::Branch xi,
                                    const homs::SystemParams& p);

// Dressed basis vector on Fock (x) spin space.
Eigen::VectorXd dressed_vector(const homs::Label& l,
                               const homs::SystemParams& p, int n_fock);

// <row| U1(1) U2(1) |col> by dense linear algebra.
double overlap_oracle(const homs::Label& row, const homs::Label& col,
                      const homs::SystemParams& p, int n_fock);

// Cavity excitation spectrum for lambda = 0: Poisson-weighted Lorentzians
// centred on the displaced-oscillator sidebands.
double poisson_lorentzian_spectrum(double delta_k, const homs::SystemParams& p,
                                   int n_terms);

}  // namespace testsupport
