#pragma once

#include <string>

#include <Eigen/Dense>

#include "params.hpp"

namespace homs {

// Eigenstates of the TLS-mechanics block at fixed photon number. The ground
// label is the unpaired |0, down> state; every n >= 1 contributes a (+, -)
// doublet hybridising |n-1, up> and |n, down>.
enum class Branch { ground, plus, minus };

std::string to_string(Branch b);
Branch branch_from_string(const std::string& s);

// (n, xi) with n = 0 meaning the ground label (xi ignored, stored as
// Branch::ground) and n >= 1 meaning the n-th doublet member.
struct Label {
  int n{0};
  Branch xi{Branch::ground};
};

// Flat indexing over labels up to doublet K: ground = 0, (n,+) = 2n-1,
// (n,-) = 2n. label_count(K) = 2K+1.
int label_index(const Label& l);
Label label_from_index(int idx);
int label_count(int n_max);

// Sanity-checks a label: n >= 0, n = 0 iff xi = ground.
void validate_label(const Label& l);

// 2x2 TLS-mechanics block at excitation number n >= 1 in the basis
// {|n-1, up>, |n, down>}.
Eigen::Matrix2d jc_block(int n, const SystemParams& p);

// Spin-sector composition of a doublet member:
//   |n+> =  cos(theta_n)|n-1, up> + sin(theta_n)|n, down>
//   |n-> = -sin(theta_n)|n-1, up> + cos(theta_n)|n, down>
struct DressedState {
  double c_up;    // coefficient of |n-1, up>
  double c_down;  // coefficient of |n, down>
};

DressedState dressed_state(const Label& l, const SystemParams& p);

// Energy of the label within the zero-photon TLS-mechanics sector:
// (n - 1/2) omega_b +- (1/2) sqrt(delta_ab^2 + 4 n lambda^2), and
// -omega_a/2 for the ground label.
double dressed_energy(const Label& l, const SystemParams& p);

// Full energy with m photons, including the polaron shift -m^2 delta1 and
// the second-order dispersive correction +- m^2 delta2 cos(2 theta_n)
// (ground label: -m^2 delta2).
double total_energy(int m, const Label& l, const SystemParams& p);

// Exact dressed energy next to its large-detuning expansion
//   plus branch:  omega_a/2 + lambda^2/delta_ab + (n-1)(omega_b + lambda^2/delta_ab)
//   minus branch: -omega_a/2 + n (omega_b - lambda^2/delta_ab)
// The gap scales as lambda^4/delta_ab^3, so it doubles as a regime check.
struct DispersiveCheck {
  double exact;
  double approx;
  double gap;  // |exact - approx|
};

// Requires delta_ab != 0; throws std::invalid_argument otherwise. The ground
// label is returned with gap 0 (the expansion is exact for the unpaired
// state).
DispersiveCheck dispersive_energy_check(const Label& l,
                                        const SystemParams& p);

}  // namespace homs
