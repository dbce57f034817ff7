#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spectrum.hpp"

using namespace homs;

namespace {

double lorentzian(double x, double x0, double width, double amp) {
  double half = 0.5 * width;
  return amp * half * half / ((x - x0) * (x - x0) + half * half);
}

}  // namespace

TEST_CASE("uniform grid endpoints and spacing") {
  std::vector<double> g = uniform_grid(-1.0, 2.0, 7);
  CHECK(g.size() == 7);
  CHECK(g.front() == -1.0);
  CHECK(g.back() == 2.0);
  CHECK(g[1] - g[0] == doctest::Approx(0.5));
  CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(uniform_grid(1.0, 0.0, 5), std::invalid_argument);
}

TEST_CASE("peak refinement on an offset lorentzian") {
  double x0 = 0.3123, width = 0.1;
  std::vector<double> x = uniform_grid(-1.0, 1.5, 251);  // step 0.01
  std::vector<double> y;
  for (double xi : x) y.push_back(lorentzian(xi, x0, width, 2.0));
  std::vector<Peak> peaks = find_peaks(x, y);
  REQUIRE(peaks.size() == 1);
  CHECK(std::abs(peaks[0].position - x0) < 1e-3);  // well under the step
  CHECK(peaks[0].height == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("min_height filters noise peaks") {
  std::vector<double> x = uniform_grid(0.0, 10.0, 101);
  std::vector<double> y;
  for (double xi : x)
    y.push_back(lorentzian(xi, 3.0, 0.5, 1.0) +
                lorentzian(xi, 7.0, 0.5, 0.01));
  CHECK(find_peaks(x, y).size() == 2);
  CHECK(find_peaks(x, y, 0.1).size() == 1);
}

TEST_CASE("find_peak_near windows the search") {
  std::vector<double> x = uniform_grid(0.0, 10.0, 401);
  std::vector<double> y;
  for (double xi : x)
    y.push_back(lorentzian(xi, 3.0, 0.4, 1.0) +
                lorentzian(xi, 6.0, 0.4, 3.0));
  Peak p = find_peak_near(x, y, 3.1, 0.5);
  CHECK(std::abs(p.position - 3.0) < 1e-2);
  Peak q = find_peak_near(x, y, 5.0, 1.5);  // larger one wins inside window
  CHECK(std::abs(q.position - 6.0) < 1e-2);
  CHECK_THROWS_AS(find_peak_near(x, y, 9.5, 0.3), std::invalid_argument);
}

TEST_CASE("dips mirror peaks") {
  std::vector<double> x = uniform_grid(-2.0, 2.0, 201);
  std::vector<double> y;
  for (double xi : x) y.push_back(1.0 - lorentzian(xi, 0.37, 0.3, 0.9));
  std::vector<Peak> dips = find_dips(x, y);
  REQUIRE(dips.size() == 1);
  CHECK(std::abs(dips[0].position - 0.37) < 2e-3);
}

TEST_CASE("fwhm of a lorentzian") {
  double width = 0.08;
  std::vector<double> x = uniform_grid(-1.0, 1.0, 2001);
  std::vector<double> y;
  for (double xi : x) y.push_back(lorentzian(xi, 0.0, width, 1.0));
  std::vector<Peak> peaks = find_peaks(x, y);
  REQUIRE(peaks.size() == 1);
  CHECK(fwhm(x, y, peaks[0].index) == doctest::Approx(width).epsilon(0.005));
}

TEST_CASE("fwhm requires bracketed crossings") {
  std::vector<double> x = uniform_grid(-0.01, 0.01, 21);  // narrower than peak
  std::vector<double> y;
  for (double xi : x) y.push_back(lorentzian(xi, 0.0, 0.5, 1.0));
  int center = 10;
  CHECK_THROWS_AS(fwhm(x, y, center), std::invalid_argument);
}

TEST_CASE("integration of smooth functions") {
  // odd point count: pure Simpson
  std::vector<double> x = uniform_grid(0.0, M_PI, 1001);
  std::vector<double> y;
  for (double xi : x) y.push_back(std::sin(xi));
  CHECK(integrate(x, y) == doctest::Approx(2.0).epsilon(1e-10));

  // even point count: Simpson plus one trapezoid
  x = uniform_grid(0.0, M_PI, 1000);
  y.clear();
  for (double xi : x) y.push_back(std::sin(xi));
  CHECK(integrate(x, y) == doctest::Approx(2.0).epsilon(1e-7));

  // non-uniform grid falls back to trapezoid
  x = {0.0, 0.1, 0.35, 0.7, 1.0};
  y = {1.0, 1.0, 1.0, 1.0, 1.0};
  CHECK(integrate(x, y) == doctest::Approx(1.0));
}

TEST_CASE("grid merging sorts and deduplicates") {
  std::vector<double> merged =
      merge_grids({{0.0, 1.0, 2.0}, {1.0 + 1e-15, 3.0}, {-1.0}});
  REQUIRE(merged.size() == 5);
  CHECK(merged.front() == -1.0);
  CHECK(merged.back() == 3.0);
  for (size_t i = 1; i < merged.size(); ++i) CHECK(merged[i] > merged[i - 1]);
}
