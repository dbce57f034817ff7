#pragma once

#include <string>

namespace homs {

// Raw physical parameters. Units: hbar = 1, waveguide group velocity = 1,
// and omega_b is the natural frequency scale (1 by convention), so the
// cavity-waveguide coupling is V = sqrt(kappa).
struct SystemParams {
  double omega_c{10.0};  // cavity frequency
  double omega_b{1.0};   // mechanical frequency
  double omega_a{1.0};   // TLS transition frequency
  double g{0.0};         // optomechanical coupling
  double lambda{0.0};    // TLS-mechanics coupling
  double kappa{0.01};    // cavity decay into the waveguide
  double gamma_a{0.0};   // TLS decay
  double gamma_b{0.0};   // mechanical damping
  double n_a{0.0};       // TLS thermal occupation
  double n_b{0.0};       // mechanical thermal occupation
};

struct DerivedParams {
  double beta;      // g/omega_b, polaron displacement per photon
  double alpha;     // beta*lambda/omega_a, residual TLS rotation angle
  double delta1;    // g^2/omega_b, photon-number frequency shift
  double delta2;    // beta^2*lambda^2/omega_a, TLS-induced shift
  double delta_ab;  // omega_a - omega_b

  bool alpha_large{false};          // alpha > 0.1: perturbation theory degrading
  bool lambda_large{false};         // lambda >= min(omega_a, omega_b)/10
  bool sideband_unresolved{false};  // kappa >= omega_b
};

// Throws std::invalid_argument when parameters are out of range. omega_c,
// omega_b, omega_a and kappa must be strictly positive; g and lambda must be
// nonnegative (zero selects the decoupled limits); decays and occupations
// must be nonnegative.
void validate(const SystemParams& p);

DerivedParams derive_params(const SystemParams& p);

// Mixing angle theta_n of the n-th dressed doublet, tan(2*theta_n) =
// 2*lambda*sqrt(n)/delta_ab with 2*theta_n in (0, pi), so theta_n -> 0 for
// delta_ab -> +inf and theta_n -> pi/2 for delta_ab -> -inf. The doubly
// degenerate point lambda = 0, delta_ab = 0 returns pi/4 (continuity in
// lambda). Requires n >= 1.
double mixing_angle(int n, double lambda, double delta_ab);

// Strict JSON parser for the CLI config schema: exactly the ten parameter
// keys, all numbers; unknown or missing keys are rejected.
SystemParams params_from_json(const std::string& text);

}  // namespace homs
