#pragma once

#include <string>
#include <vector>

#include "params.hpp"

namespace homs {

// Named parameter sets reproducing the regimes the model was characterised
// in. Each preset also carries the pulse width used for driven spectra
// (ignored by the monochromatic paths).
struct Preset {
  SystemParams params;
  double pulse_width;  // spectral width d of the Gaussian drive
};

// Known names: fig2, fig3, fig4ac, fig4df, fig5, fig6.
// Throws std::invalid_argument for anything else.
Preset preset(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace homs
