#pragma once

#include <Eigen/Dense>

#include "ladder.hpp"
#include "params.hpp"

namespace homs {

// Largest oscillator quantum number the stable displacement evaluation is
// certified for.
inline constexpr int kMaxDisplacementLevel = 200;

// Associated Laguerre polynomial L_i^k(x) by the three-term recurrence in the
// lower index i. Requires i >= 0 and k >= 0.
double assoc_laguerre(int i, int k, double x);

// Franck-Condon factor <n|U1(1)|n'> of the single-photon polaron
// displacement, beta = g/omega_b:
//   sqrt(n!/n'!) e^{-beta^2/2} (-beta)^{n'-n} L_n^{n'-n}(beta^2)   n' >= n
//   sqrt(n'!/n!) e^{-beta^2/2} beta^{n-n'}   L_{n'}^{n-n'}(beta^2) n' <  n
// The factorial-ratio prefactor is accumulated in log space, so the value is
// finite and accurate up to kMaxDisplacementLevel.
double displacement_element(int n, int n_prime, double beta);

// Real overlap <row| U1(1) U2(1) |col> between dressed labels, assembled
// from the nine closed-form spin contractions of the factorised
// transformation (one per (row branch, col branch, ground or not) case).
double dressed_overlap(const Label& row, const Label& col,
                       const SystemParams& p);

// Dense real matrix of dressed_overlap over all labels with n <= n_trunc,
// indexed by label_index. Row r holds <r|U(1)|c>, which also equals the
// dressed-basis component <c~(1)|r> by realness.
struct OverlapMatrix {
  Eigen::MatrixXd entries;
  double beta;
  double alpha;
  int n_trunc;

  double operator()(const Label& row, const Label& col) const {
    return entries(label_index(row), label_index(col));
  }

  // 1 - sum of squares over the row with index row_idx; tends to 0 as
  // n_trunc grows (truncated unitarity).
  double row_norm_defect(int row_idx) const;
};

OverlapMatrix overlap_matrix(const SystemParams& p, int n_trunc);

// Smallest n with e^{-beta^2} beta^{2n}/n! < 1e-10, plus 5 guard levels.
// The Poisson tail bounds the weight a ground-row overlap can leak past the
// cutoff.
int default_overlap_n_trunc(double beta);

}  // namespace homs
