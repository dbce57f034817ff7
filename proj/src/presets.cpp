#include "presets.hpp"

#include <stdexcept>

namespace homs {

namespace {

SystemParams base() {
  SystemParams p;
  p.omega_b = 1.0;
  p.omega_c = 10.0;  // only detunings from the cavity line matter
  return p;
}

Preset fig2() {
  Preset r{base(), 0.0};
  r.params.omega_a = 1.0;  // resonant TLS
  r.params.g = 1.2;
  r.params.kappa = 0.01;
  r.params.lambda = 5.0 * r.params.kappa;
  r.params.gamma_a = 1e-4;
  r.params.gamma_b = 1e-5;
  r.params.n_a = 0.1;
  r.params.n_b = 0.1;
  r.pulse_width = r.params.kappa;
  return r;
}

Preset fig3() {
  Preset r{base(), 0.0};
  r.params.omega_a = 1.1;  // detuned TLS, delta_ab = 0.1
  r.params.g = 1.2;
  r.params.kappa = 0.001;
  r.params.lambda = 0.01;  // 0.1 * delta_ab
  r.params.gamma_a = 1e-4;
  r.params.gamma_b = 1e-5;
  r.params.n_a = 0.077;
  r.params.n_b = 0.1;
  r.pulse_width = r.params.kappa;
  return r;
}

Preset fig4ac() {
  Preset r = fig2();
  r.params.g = 0.8;
  r.pulse_width = r.params.kappa;  // d = kappa = 0.01
  return r;
}

Preset fig4df() {
  Preset r = fig3();
  r.params.g = 0.8;
  r.pulse_width = r.params.kappa;  // d = kappa = 0.001
  return r;
}

Preset fig5() {
  Preset r = fig4ac();
  r.params.g = 0.2;
  return r;
}

Preset fig6() {
  Preset r = fig4df();
  r.pulse_width = 0.2 * r.params.kappa;
  return r;
}

}  // namespace

Preset preset(const std::string& name) {
  if (name == "fig2") return fig2();
  if (name == "fig3") return fig3();
  if (name == "fig4ac") return fig4ac();
  if (name == "fig4df") return fig4df();
  if (name == "fig5") return fig5();
  if (name == "fig6") return fig6();
  throw std::invalid_argument("unknown preset \"" + name + "\"");
}

std::vector<std::string> preset_names() {
  return {"fig2", "fig3", "fig4ac", "fig4df", "fig5", "fig6"};
}

}  // namespace homs
