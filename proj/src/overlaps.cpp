#include "overlaps.hpp"

#include <cmath>
#include <stdexcept>

namespace homs {

double assoc_laguerre(int i, int k, double x) {
  if (i < 0 || k < 0)
    throw std::invalid_argument("assoc_laguerre: indices must be >= 0");
  if (i == 0) return 1.0;
  double lm1 = 1.0;          // L_0^k
  double l = 1.0 + k - x;    // L_1^k
  for (int j = 1; j < i; ++j) {
    double lp1 = ((2.0 * j + k + 1.0 - x) * l - (j + k) * lm1) / (j + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

double displacement_element(int n, int n_prime, double beta) {
  if (n < 0 || n_prime < 0)
    throw std::invalid_argument("displacement_element: n, n' must be >= 0");
  if (n > kMaxDisplacementLevel || n_prime > kMaxDisplacementLevel)
    throw std::invalid_argument(
        "displacement_element: level beyond certified range");
  if (beta < 0.0)
    throw std::invalid_argument("displacement_element: beta must be >= 0");
  if (beta == 0.0) return n == n_prime ? 1.0 : 0.0;

  int lo = std::min(n, n_prime);
  int hi = std::max(n, n_prime);
  int k = hi - lo;
  // sqrt(lo!/hi!) beta^k in log space; lgamma(m+1) = ln m!.
  double logpref = 0.5 * (std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0)) +
                   k * std::log(beta) - 0.5 * beta * beta;
  double lag = assoc_laguerre(lo, k, beta * beta);
  // (-beta)^{n'-n} contributes the sign only when n' > n.
  double sign = (n_prime > n && k % 2 != 0) ? -1.0 : 1.0;
  if (lag < 0.0) {
    sign = -sign;
    lag = -lag;
  }
  if (lag == 0.0) return 0.0;
  return sign * std::exp(logpref + std::log(lag));
}

namespace {

struct Trig {
  double c;  // cos(theta_n)
  double s;  // sin(theta_n)
};

Trig doublet_trig(int n, const SystemParams& p) {
  double th = mixing_angle(n, p.lambda, p.omega_a - p.omega_b);
  return {std::cos(th), std::sin(th)};
}

}  // namespace

double dressed_overlap(const Label& row, const Label& col,
                       const SystemParams& p) {
  validate_label(row);
  validate_label(col);
  DerivedParams dv = derive_params(p);
  double ca = std::cos(dv.alpha);
  double sa = std::sin(dv.alpha);
  double beta = dv.beta;
  auto d = [beta](int a, int b) { return displacement_element(a, b, beta); };

  if (row.n == 0 && col.n == 0) return ca * d(0, 0);

  if (row.n == 0) {
    int n = col.n;
    Trig t = doublet_trig(n, p);
    if (col.xi == Branch::plus)
      return sa * t.c * d(0, n - 1) + ca * t.s * d(0, n);
    return -sa * t.s * d(0, n - 1) + ca * t.c * d(0, n);
  }

  if (col.n == 0) {
    int n = row.n;
    Trig t = doublet_trig(n, p);
    if (row.xi == Branch::plus)
      return -sa * t.c * d(n - 1, 0) + ca * t.s * d(n, 0);
    return sa * t.s * d(n - 1, 0) + ca * t.c * d(n, 0);
  }

  int n = row.n, np = col.n;
  Trig tn = doublet_trig(n, p);
  Trig tp = doublet_trig(np, p);
  bool rp = row.xi == Branch::plus;
  bool cp = col.xi == Branch::plus;
  if (rp && cp)
    return ca * tn.c * tp.c * d(n - 1, np - 1) -
           sa * tn.c * tp.s * d(n - 1, np) +
           sa * tn.s * tp.c * d(n, np - 1) + ca * tn.s * tp.s * d(n, np);
  if (rp && !cp)
    return -ca * tn.c * tp.s * d(n - 1, np - 1) -
           sa * tn.c * tp.c * d(n - 1, np) -
           sa * tn.s * tp.s * d(n, np - 1) + ca * tn.s * tp.c * d(n, np);
  if (!rp && cp)
    return -ca * tn.s * tp.c * d(n - 1, np - 1) +
           sa * tn.s * tp.s * d(n - 1, np) +
           sa * tn.c * tp.c * d(n, np - 1) + ca * tn.c * tp.s * d(n, np);
  return ca * tn.s * tp.s * d(n - 1, np - 1) +
         sa * tn.s * tp.c * d(n - 1, np) -
         sa * tn.c * tp.s * d(n, np - 1) + ca * tn.c * tp.c * d(n, np);
}

double OverlapMatrix::row_norm_defect(int row_idx) const {
  return 1.0 - entries.row(row_idx).squaredNorm();
}

OverlapMatrix overlap_matrix(const SystemParams& p, int n_trunc) {
  if (n_trunc < 1)
    throw std::invalid_argument("overlap_matrix: n_trunc must be >= 1");
  if (n_trunc > kMaxDisplacementLevel)
    throw std::invalid_argument(
        "overlap_matrix: n_trunc beyond certified displacement range");
  DerivedParams dv = derive_params(p);
  int dim = label_count(n_trunc);
  OverlapMatrix m;
  m.beta = dv.beta;
  m.alpha = dv.alpha;
  m.n_trunc = n_trunc;
  m.entries.resize(dim, dim);
  for (int r = 0; r < dim; ++r) {
    Label lr = label_from_index(r);
    for (int c = 0; c < dim; ++c)
      m.entries(r, c) = dressed_overlap(lr, label_from_index(c), p);
  }
  return m;
}

int default_overlap_n_trunc(double beta) {
  if (beta < 0.0)
    throw std::invalid_argument("default_overlap_n_trunc: beta must be >= 0");
  double b2 = beta * beta;
  int n = 0;
  // log of e^{-b2} b2^n / n!
  double logw = -b2;
  while (logw >= std::log(1e-10) && n < kMaxDisplacementLevel) {
    ++n;
    logw += std::log(b2) - std::log(double(n));
    if (b2 == 0.0) break;
  }
  return n + 5;
}

}  // namespace homs
