#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "overlaps.hpp"
#include "params.hpp"
#include "presets.hpp"
#include "support/oracles.hpp"

using namespace homs;

namespace {

// beta = 1.2, alpha = 0.06 at zero TLS-mechanics detuning.
SystemParams degenerate_point() {
  SystemParams p;
  p.g = 1.2;
  p.lambda = 0.05;
  return p;
}

// Same beta and alpha with the TLS detuned.
SystemParams detuned_point() {
  SystemParams p;
  p.omega_a = 1.1;
  p.g = 1.2;
  p.lambda = 0.055;
  return p;
}

}  // namespace

TEST_CASE("displacement elements match the matrix exponential") {
  for (double beta : {0.3, 0.8, 1.2}) {
    Eigen::MatrixXd u = testsupport::displacement_operator(beta, 200);
    for (int n = 0; n <= 12; ++n)
      for (int np = 0; np <= 12; ++np)
        CHECK(std::abs(displacement_element(n, np, beta) - u(n, np)) < 1e-10);
  }
}

TEST_CASE("displacement exchange symmetry") {
  for (int n = 0; n <= 10; ++n)
    for (int np = 0; np <= 10; ++np) {
      double sign = ((n - np) % 2 == 0) ? 1.0 : -1.0;
      CHECK(displacement_element(n, np, 0.9) ==
            doctest::Approx(sign * displacement_element(np, n, 0.9))
                .epsilon(1e-13));
    }
}

TEST_CASE("zero displacement is the identity") {
  for (int n = 0; n <= 6; ++n)
    for (int np = 0; np <= 6; ++np)
      CHECK(displacement_element(n, np, 0.0) == (n == np ? 1.0 : 0.0));
}

TEST_CASE("displacement stays finite at the certified ceiling") {
  double v = displacement_element(kMaxDisplacementLevel,
                                  kMaxDisplacementLevel - 1, 1.2);
  CHECK(std::isfinite(v));
  CHECK_THROWS_AS(displacement_element(-1, 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(displacement_element(0, kMaxDisplacementLevel + 1, 1.0),
                  std::invalid_argument);
}

TEST_CASE("poisson ground-row weights sum to one") {
  double sum = 0.0;
  for (int n = 0; n <= 60; ++n) {
    double d = displacement_element(n, 0, 1.2);
    sum += d * d;
  }
  CHECK(std::abs(sum - 1.0) < 1e-10);
}

TEST_CASE("dressed overlaps match the brute-force frame change") {
  for (const SystemParams& p : {degenerate_point(), detuned_point()}) {
    for (int rn = 0; rn <= 6; ++rn)
      for (int cn = 0; cn <= 6; ++cn)
        for (Branch rxi :
             rn == 0 ? std::vector<Branch>{Branch::ground}
                     : std::vector<Branch>{Branch::plus, Branch::minus})
          for (Branch cxi :
               cn == 0 ? std::vector<Branch>{Branch::ground}
                       : std::vector<Branch>{Branch::plus, Branch::minus}) {
            Label row{rn, rxi};
            Label col{cn, cxi};
            double lib = dressed_overlap(row, col, p);
            double ref = testsupport::overlap_oracle(row, col, p, 200);
            CHECK(std::abs(lib - ref) < 1e-8);
          }
  }
}

TEST_CASE("overlap matrix agrees with the scalar entries") {
  SystemParams p = degenerate_point();
  OverlapMatrix m = overlap_matrix(p, 8);
  CHECK(m.n_trunc == 8);
  CHECK(m.entries.rows() == label_count(8));
  for (int r = 0; r < label_count(8); ++r)
    for (int c = 0; c < label_count(8); ++c) {
      Label lr = label_from_index(r);
      Label lc = label_from_index(c);
      CHECK(m(lr, lc) == dressed_overlap(lr, lc, p));
    }
}

TEST_CASE("row norms approach one at the default truncation") {
  SystemParams p = degenerate_point();
  int n_default = default_overlap_n_trunc(1.2);
  OverlapMatrix m = overlap_matrix(p, n_default);
  for (int row = 0; row < label_count(6); ++row)
    CHECK(m.row_norm_defect(row) < 1e-6);
}

TEST_CASE("default truncation rule") {
  // smallest n with e^{-beta^2} beta^{2n}/n! < 1e-10, plus 5
  CHECK(default_overlap_n_trunc(0.0) == 6);
  CHECK(default_overlap_n_trunc(0.8) == 16);
  CHECK(default_overlap_n_trunc(1.2) == 20);
  CHECK(default_overlap_n_trunc(1.3) >= default_overlap_n_trunc(1.2));
}

TEST_CASE("overlap truncation limits") {
  SystemParams p = degenerate_point();
  CHECK_THROWS_AS(overlap_matrix(p, 0), std::invalid_argument);
  CHECK_THROWS_AS(overlap_matrix(p, kMaxDisplacementLevel + 1),
                  std::invalid_argument);
}

TEST_CASE("laguerre recurrence against small closed forms") {
  // L_0^k = 1, L_1^k(x) = 1 + k - x, L_2^1(x) = 3 - 3x + x^2/2
  CHECK(assoc_laguerre(0, 3, 0.7) == 1.0);
  CHECK(assoc_laguerre(1, 2, 0.4) == doctest::Approx(3.0 - 0.4));
  CHECK(assoc_laguerre(2, 1, 0.9) ==
        doctest::Approx(3.0 - 3 * 0.9 + 0.5 * 0.81));
}
