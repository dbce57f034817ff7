#include "params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace homs {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v))
    throw std::invalid_argument(std::string(name) + " must be finite");
}

void require_positive(double v, const char* name) {
  require_finite(v, name);
  if (v <= 0.0)
    throw std::invalid_argument(std::string(name) + " must be positive");
}

void require_nonnegative(double v, const char* name) {
  require_finite(v, name);
  if (v < 0.0)
    throw std::invalid_argument(std::string(name) + " must be nonnegative");
}

}  // namespace

void validate(const SystemParams& p) {
  require_positive(p.omega_c, "omega_c");
  require_positive(p.omega_b, "omega_b");
  require_positive(p.omega_a, "omega_a");
  require_positive(p.kappa, "kappa");
  require_nonnegative(p.g, "g");
  require_nonnegative(p.lambda, "lambda");
  require_nonnegative(p.gamma_a, "gamma_a");
  require_nonnegative(p.gamma_b, "gamma_b");
  require_nonnegative(p.n_a, "n_a");
  require_nonnegative(p.n_b, "n_b");
}

DerivedParams derive_params(const SystemParams& p) {
  validate(p);
  DerivedParams d{};
  d.beta = p.g / p.omega_b;
  d.alpha = d.beta * p.lambda / p.omega_a;
  d.delta1 = p.g * p.g / p.omega_b;
  d.delta2 = d.beta * d.beta * p.lambda * p.lambda / p.omega_a;
  d.delta_ab = p.omega_a - p.omega_b;
  d.alpha_large = d.alpha > 0.1;
  d.lambda_large = p.lambda >= std::min(p.omega_a, p.omega_b) / 10.0;
  d.sideband_unresolved = p.kappa >= p.omega_b;
  return d;
}

double mixing_angle(int n, double lambda, double delta_ab) {
  if (n < 1)
    throw std::invalid_argument("mixing_angle: n must be >= 1");
  if (lambda < 0.0)
    throw std::invalid_argument("mixing_angle: lambda must be nonnegative");
  if (lambda == 0.0 && delta_ab == 0.0) return M_PI / 4.0;
  // atan2 keeps 2*theta in (0, pi) for lambda > 0 and maps the lambda = 0
  // limit to 0 (delta_ab > 0) or pi/2 (delta_ab < 0) continuously.
  return 0.5 * std::atan2(2.0 * lambda * std::sqrt(double(n)), delta_ab);
}

SystemParams params_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") +
                                e.what());
  }
  if (!j.is_object())
    throw std::invalid_argument("config must be a JSON object");

  static const char* keys[] = {"omega_c", "omega_b", "omega_a", "g",
                               "lambda",  "kappa",   "gamma_a", "gamma_b",
                               "n_a",     "n_b"};
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(std::begin(keys), std::end(keys), [&](const char* k) {
          return key == k;
        }) == std::end(keys))
      throw std::invalid_argument("config: unknown key \"" + key + "\"");
    if (!value.is_number())
      throw std::invalid_argument("config: \"" + key + "\" must be a number");
  }
  for (const char* k : keys)
    if (!j.contains(k))
      throw std::invalid_argument("config: missing key \"" + std::string(k) +
                                  "\"");

  SystemParams p;
  p.omega_c = j["omega_c"].get<double>();
  p.omega_b = j["omega_b"].get<double>();
  p.omega_a = j["omega_a"].get<double>();
  p.g = j["g"].get<double>();
  p.lambda = j["lambda"].get<double>();
  p.kappa = j["kappa"].get<double>();
  p.gamma_a = j["gamma_a"].get<double>();
  p.gamma_b = j["gamma_b"].get<double>();
  p.n_a = j["n_a"].get<double>();
  p.n_b = j["n_b"].get<double>();
  validate(p);
  return p;
}

}  // namespace homs
