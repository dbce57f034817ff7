#pragma once

#include <string>
#include <vector>

namespace homs {

// A sampled spectrum: strictly increasing abscissa (detuning from the cavity
// line) and nonnegative values, plus evaluation diagnostics filled in by the
// producing module.
struct SpectrumSeries {
  std::vector<double> grid;
  std::vector<double> value;
  std::string fingerprint;  // parameter summary for reproducibility

  double tail_estimate{0.0};    // truncated-sum remainder bound
  bool tail_warning{false};     // tail_estimate above threshold
  double integral{0.0};         // quadrature over the grid (when meaningful)
  bool coverage_warning{false}; // integral below the completeness threshold
  bool width_warning{false};    // pulse width not small against omega_b
};

struct Peak {
  double position;  // parabolic-refined abscissa
  double height;    // refined ordinate
  int index;        // grid index of the discrete maximum
};

// Interior local maxima of y over x with three-point parabolic refinement
// (exact for non-uniform spacing). Maxima lower than min_height are skipped.
std::vector<Peak> find_peaks(const std::vector<double>& x,
                             const std::vector<double>& y,
                             double min_height = 0.0);

// Largest local maximum with |position - x0| <= radius. Throws
// std::invalid_argument when no interior local maximum lies in the window.
Peak find_peak_near(const std::vector<double>& x, const std::vector<double>& y,
                    double x0, double radius);

// Interior local minima, same refinement.
std::vector<Peak> find_dips(const std::vector<double>& x,
                            const std::vector<double>& y);

// Full width at half maximum of the peak at grid index peak_index, by linear
// interpolation of the half-height crossings on both sides. Throws when a
// crossing is not bracketed within the grid.
double fwhm(const std::vector<double>& x, const std::vector<double>& y,
            int peak_index);

// Quadrature over the sampled curve: composite Simpson when the grid is
// uniform (trapezoid on the last interval for even point counts), trapezoid
// otherwise.
double integrate(const std::vector<double>& x, const std::vector<double>& y);

std::vector<double> uniform_grid(double lo, double hi, int points);

// Sorted union of several grids, deduplicated to within a relative spacing
// tolerance.
std::vector<double> merge_grids(const std::vector<std::vector<double>>& parts);

}  // namespace homs
