#include "spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace homs {

namespace {

void check_series(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("spectrum: grid/value size mismatch");
  if (x.size() < 3)
    throw std::invalid_argument("spectrum: need at least 3 points");
  for (size_t i = 1; i < x.size(); ++i)
    if (x[i] <= x[i - 1])
      throw std::invalid_argument("spectrum: grid must be strictly increasing");
}

// Quadratic through three points in Newton form, evaluated at its vertex.
// Falls back to the middle sample when the points are not strictly concave
// or the vertex escapes the bracket.
Peak refine_three_point(const std::vector<double>& x,
                        const std::vector<double>& y, int i) {
  double x0 = x[i - 1], x1 = x[i], x2 = x[i + 1];
  double d1 = (y[i] - y[i - 1]) / (x1 - x0);
  double d2 = (y[i + 1] - y[i]) / (x2 - x1);
  double a = (d2 - d1) / (x2 - x0);
  Peak p{x1, y[i], i};
  if (a >= 0.0) return p;
  double xs = 0.5 * (x0 + x1) - d1 / (2.0 * a);
  if (xs <= x0 || xs >= x2) return p;
  p.position = xs;
  p.height = y[i - 1] + d1 * (xs - x0) + a * (xs - x0) * (xs - x1);
  return p;
}

}  // namespace

std::vector<Peak> find_peaks(const std::vector<double>& x,
                             const std::vector<double>& y, double min_height) {
  check_series(x, y);
  std::vector<Peak> out;
  for (int i = 1; i + 1 < int(x.size()); ++i) {
    if (y[i] > y[i - 1] && y[i] > y[i + 1] && y[i] >= min_height)
      out.push_back(refine_three_point(x, y, i));
  }
  return out;
}

std::vector<Peak> find_dips(const std::vector<double>& x,
                            const std::vector<double>& y) {
  check_series(x, y);
  std::vector<double> neg(y.size());
  std::transform(y.begin(), y.end(), neg.begin(), [](double v) { return -v; });
  std::vector<Peak> dips = find_peaks(x, neg, -HUGE_VAL);
  for (Peak& p : dips) p.height = -p.height;
  return dips;
}

Peak find_peak_near(const std::vector<double>& x, const std::vector<double>& y,
                    double x0, double radius) {
  std::vector<Peak> all = find_peaks(x, y);
  const Peak* best = nullptr;
  for (const Peak& p : all) {
    if (std::abs(p.position - x0) > radius) continue;
    if (!best || p.height > best->height) best = &p;
  }
  if (!best)
    throw std::invalid_argument("find_peak_near: no local maximum within " +
                                std::to_string(radius) + " of " +
                                std::to_string(x0));
  return *best;
}

double fwhm(const std::vector<double>& x, const std::vector<double>& y,
            int peak_index) {
  check_series(x, y);
  if (peak_index <= 0 || peak_index + 1 >= int(x.size()))
    throw std::invalid_argument("fwhm: peak index must be interior");
  double half = 0.5 * y[peak_index];
  int lo = peak_index;
  while (lo > 0 && y[lo] > half) --lo;
  if (y[lo] > half) throw std::invalid_argument("fwhm: left crossing not bracketed");
  int hi = peak_index;
  while (hi + 1 < int(x.size()) && y[hi] > half) ++hi;
  if (y[hi] > half) throw std::invalid_argument("fwhm: right crossing not bracketed");
  auto cross = [&](int a, int b) {
    // linear interpolation of y = half between samples a and b
    return x[a] + (half - y[a]) * (x[b] - x[a]) / (y[b] - y[a]);
  };
  double left = cross(lo, lo + 1);
  double right = cross(hi - 1, hi);
  return right - left;
}

double integrate(const std::vector<double>& x, const std::vector<double>& y) {
  check_series(x, y);
  size_t n = x.size();
  double h = x[1] - x[0];
  bool uniform = true;
  for (size_t i = 1; i + 1 < n && uniform; ++i)
    if (std::abs((x[i + 1] - x[i]) - h) > 1e-9 * std::abs(h)) uniform = false;

  if (!uniform) {
    double s = 0.0;
    for (size_t i = 0; i + 1 < n; ++i)
      s += 0.5 * (y[i] + y[i + 1]) * (x[i + 1] - x[i]);
    return s;
  }
  // composite Simpson over an even number of intervals; a trailing trapezoid
  // picks up the odd interval when the point count is even
  size_t pairs = (n - 1) / 2;
  double s = 0.0;
  for (size_t p = 0; p < pairs; ++p) {
    size_t i = 2 * p;
    s += h / 3.0 * (y[i] + 4.0 * y[i + 1] + y[i + 2]);
  }
  if ((n - 1) % 2 != 0) s += 0.5 * h * (y[n - 2] + y[n - 1]);
  return s;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (!(hi > lo)) throw std::invalid_argument("uniform_grid: need hi > lo");
  if (points < 2) throw std::invalid_argument("uniform_grid: need >= 2 points");
  std::vector<double> g(points);
  double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) g[i] = lo + h * i;
  g.back() = hi;
  return g;
}

std::vector<double> merge_grids(
    const std::vector<std::vector<double>>& parts) {
  std::vector<double> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  if (all.empty()) throw std::invalid_argument("merge_grids: no points");
  std::sort(all.begin(), all.end());
  double span = all.back() - all.front();
  double tol = span > 0.0 ? 1e-12 * span : 0.0;
  std::vector<double> out;
  out.reserve(all.size());
  for (double v : all)
    if (out.empty() || v - out.back() > tol) out.push_back(v);
  return out;
}

}  // namespace homs
