#include "ladder.hpp"

#include <cmath>
#include <stdexcept>

namespace homs {

std::string to_string(Branch b) {
  switch (b) {
    case Branch::ground: return "ground";
    case Branch::plus: return "plus";
    case Branch::minus: return "minus";
  }
  throw std::invalid_argument("to_string: bad Branch value");
}

Branch branch_from_string(const std::string& s) {
  if (s == "ground") return Branch::ground;
  if (s == "plus" || s == "+") return Branch::plus;
  if (s == "minus" || s == "-") return Branch::minus;
  throw std::invalid_argument("unknown branch \"" + s + "\"");
}

void validate_label(const Label& l) {
  if (l.n < 0) throw std::invalid_argument("label: n must be >= 0");
  if (l.n == 0 && l.xi != Branch::ground)
    throw std::invalid_argument("label: n = 0 is the ground label");
  if (l.n > 0 && l.xi == Branch::ground)
    throw std::invalid_argument("label: n >= 1 needs branch plus or minus");
}

int label_index(const Label& l) {
  validate_label(l);
  if (l.n == 0) return 0;
  return l.xi == Branch::plus ? 2 * l.n - 1 : 2 * l.n;
}

Label label_from_index(int idx) {
  if (idx < 0) throw std::invalid_argument("label index must be >= 0");
  if (idx == 0) return {0, Branch::ground};
  int n = (idx + 1) / 2;
  return {n, idx % 2 == 1 ? Branch::plus : Branch::minus};
}

int label_count(int n_max) {
  if (n_max < 0) throw std::invalid_argument("label_count: n_max >= 0");
  return 2 * n_max + 1;
}

Eigen::Matrix2d jc_block(int n, const SystemParams& p) {
  if (n < 1) throw std::invalid_argument("jc_block: n must be >= 1");
  Eigen::Matrix2d h;
  double off = p.lambda * std::sqrt(double(n));
  h << (n - 1) * p.omega_b + 0.5 * p.omega_a, off,
       off, n * p.omega_b - 0.5 * p.omega_a;
  return h;
}

DressedState dressed_state(const Label& l, const SystemParams& p) {
  validate_label(l);
  if (l.n == 0) return {0.0, 1.0};
  double th = mixing_angle(l.n, p.lambda, p.omega_a - p.omega_b);
  if (l.xi == Branch::plus) return {std::cos(th), std::sin(th)};
  return {-std::sin(th), std::cos(th)};
}

double dressed_energy(const Label& l, const SystemParams& p) {
  validate_label(l);
  if (l.n == 0) return -0.5 * p.omega_a;
  double dab = p.omega_a - p.omega_b;
  double split = std::sqrt(dab * dab + 4.0 * l.n * p.lambda * p.lambda);
  double mid = (l.n - 0.5) * p.omega_b;
  return l.xi == Branch::plus ? mid + 0.5 * split : mid - 0.5 * split;
}

namespace {

// cos(2 theta_n) evaluated without the angle: delta_ab / splitting, with the
// degenerate point mapping to 0 (theta = pi/4).
double cos_two_theta(int n, const SystemParams& p) {
  double dab = p.omega_a - p.omega_b;
  double split = std::sqrt(dab * dab + 4.0 * n * p.lambda * p.lambda);
  if (split == 0.0) return 0.0;
  return dab / split;
}

}  // namespace

double total_energy(int m, const Label& l, const SystemParams& p) {
  if (m < 0) throw std::invalid_argument("total_energy: m must be >= 0");
  DerivedParams d = derive_params(p);
  double base = m * p.omega_c - double(m) * m * d.delta1;
  if (l.n == 0) return base - 0.5 * p.omega_a - double(m) * m * d.delta2;
  double c2t = cos_two_theta(l.n, p);
  double sign = l.xi == Branch::plus ? 1.0 : -1.0;
  return base + dressed_energy(l, p) + sign * double(m) * m * d.delta2 * c2t;
}

DispersiveCheck dispersive_energy_check(const Label& l,
                                        const SystemParams& p) {
  validate_label(l);
  double dab = p.omega_a - p.omega_b;
  if (dab == 0.0)
    throw std::invalid_argument(
        "dispersive_energy_check: requires delta_ab != 0");
  DispersiveCheck r{};
  r.exact = dressed_energy(l, p);
  if (l.n == 0) {
    r.approx = r.exact;
    r.gap = 0.0;
    return r;
  }
  double shift = p.lambda * p.lambda / dab;
  if (l.xi == Branch::plus)
    r.approx = 0.5 * p.omega_a + shift + (l.n - 1) * (p.omega_b + shift);
  else
    r.approx = -0.5 * p.omega_a + l.n * (p.omega_b - shift);
  r.gap = std::abs(r.exact - r.approx);
  return r;
}

}  // namespace homs
