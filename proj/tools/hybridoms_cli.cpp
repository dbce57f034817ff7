// Command-line front end for the hybrid optomechanics scattering library.
// All physics goes through the C API in hybridoms.h; this file only parses
// flags, shuttles arrays, and writes CSV/JSON.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hybridoms.h"

namespace {

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& msg) {
  throw CliError{code, msg};
}

void check(int rc) {
  if (rc == HOMS_OK) return;
  fail(rc == HOMS_ERR_INVALID_ARGUMENT ? 1 : 2, homs_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(1, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(1, "cannot write " + tmp);
    out << content;
    if (!out.flush()) fail(1, "write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail(1, "cannot rename " + tmp + " to " + path);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Shared parameter flags: --preset / --config plus per-field overrides named
// after the config keys. Precedence: explicit flags > config file > preset.
struct ParamArgs {
  std::string preset;
  std::string config;
  std::optional<double> omega_c, omega_b, omega_a, g, lambda, kappa, gamma_a,
      gamma_b, n_a, n_b;
  double preset_pulse_width{0.0};
  bool has_preset{false};

  void attach(CLI::App* app) {
    app->add_option("--preset", preset,
                    "named parameter set (fig2, fig3, fig4ac, fig4df, fig5, "
                    "fig6)");
    app->add_option("--config", config, "JSON parameter file");
    app->add_option("--omega_c", omega_c, "cavity frequency");
    app->add_option("--omega_b", omega_b, "mechanical frequency");
    app->add_option("--omega_a", omega_a, "TLS frequency");
    app->add_option("--g", g, "optomechanical coupling");
    app->add_option("--lambda", lambda, "TLS-mechanics coupling");
    app->add_option("--kappa", kappa, "cavity decay");
    app->add_option("--gamma_a", gamma_a, "TLS decay");
    app->add_option("--gamma_b", gamma_b, "mechanical damping");
    app->add_option("--n_a", n_a, "TLS thermal occupation");
    app->add_option("--n_b", n_b, "mechanical thermal occupation");
  }

  homs_params resolve() {
    homs_params p;
    check(homs_params_default(&p));
    if (!preset.empty()) {
      check(homs_preset(preset.c_str(), &p, &preset_pulse_width));
      has_preset = true;
    }
    if (!config.empty())
      check(homs_params_from_json_text(read_file(config).c_str(), &p));
    if (omega_c) p.omega_c = *omega_c;
    if (omega_b) p.omega_b = *omega_b;
    if (omega_a) p.omega_a = *omega_a;
    if (g) p.g = *g;
    if (lambda) p.lambda = *lambda;
    if (kappa) p.kappa = *kappa;
    if (gamma_a) p.gamma_a = *gamma_a;
    if (gamma_b) p.gamma_b = *gamma_b;
    if (n_a) p.n_a = *n_a;
    if (n_b) p.n_b = *n_b;
    check(homs_validate(&p));
    return p;
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    fail(1, "cannot parse " + what + " \"" + s + "\" as a number");
  }
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    fail(1, "cannot parse " + what + " \"" + s + "\" as an integer");
  }
}

int branch_from_name(const std::string& s) {
  if (s == "ground") return HOMS_BRANCH_GROUND;
  if (s == "plus" || s == "+") return HOMS_BRANCH_PLUS;
  if (s == "minus" || s == "-") return HOMS_BRANCH_MINUS;
  fail(1, "unknown branch \"" + s + "\" (use ground, plus or minus)");
}

const char* branch_name(int xi) {
  switch (xi) {
    case HOMS_BRANCH_GROUND: return "ground";
    case HOMS_BRANCH_PLUS: return "plus";
    case HOMS_BRANCH_MINUS: return "minus";
  }
  return "?";
}

struct LabelArg {
  int n;
  int xi;
};

LabelArg parse_label(const std::string& s) {
  std::vector<std::string> parts = split(s, ',');
  if (parts.size() != 2) fail(1, "label must be \"n,branch\", got \"" + s + "\"");
  return {parse_int(parts[0], "label n"), branch_from_name(parts[1])};
}

std::vector<double> parse_window(const std::string& s) {
  std::vector<std::string> parts = split(s, ',');
  if (parts.size() != 3)
    fail(1, "window must be \"lo,hi,points\", got \"" + s + "\"");
  double lo = parse_double(parts[0], "window lo");
  double hi = parse_double(parts[1], "window hi");
  int points = parse_int(parts[2], "window points");
  if (!(hi > lo)) fail(1, "window needs hi > lo");
  if (points < 3) fail(1, "window needs at least 3 points");
  std::vector<double> grid(points);
  double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = lo + h * i;
  grid.back() = hi;
  return grid;
}

void warn_spectrum(const homs_spectrum_info& info) {
  if (info.tail_warning)
    std::fprintf(stderr,
                 "warning: truncation tail estimate %.3g above 1e-8; "
                 "consider raising n_trunc\n",
                 info.tail_estimate);
  if (info.coverage_warning)
    std::fprintf(stderr,
                 "warning: spectrum integral %.6f < 0.999; window or "
                 "truncation may be too small\n",
                 info.integral);
  if (info.width_warning)
    std::fprintf(stderr,
                 "warning: pulse width is not small against the mechanical "
                 "frequency\n");
}

std::string csv_two_columns(const char* h1, const char* h2,
                            const std::vector<double>& a,
                            const std::vector<double>& b) {
  std::ostringstream os;
  os << h1 << ',' << h2 << '\n';
  for (size_t i = 0; i < a.size(); ++i)
    os << fmt(a[i]) << ',' << fmt(b[i]) << '\n';
  return os.str();
}

// ---- subcommand state ----

struct LadderCmd {
  ParamArgs params;
  int n_max{6};
  std::string out;
};

struct OverlapsCmd {
  ParamArgs params;
  int n_trunc{0};
  std::string out;
};

struct ExcitationCmd {
  ParamArgs params;
  std::string initial{"0,ground"};
  std::string window;
  int n_trunc{0};
  std::string out;
};

struct TransmitCmd {
  ParamArgs params;
  std::optional<double> pulse_center;  // offset from the cavity frequency
  std::optional<double> pulse_width;
  std::string initial;  // JSON amplitude map over labels
  std::string rho;      // Bloch vector rx,ry,rz
  std::string window;
  int n_show{-1};
  int n_trunc{0};
  std::string out;
};

struct LindbladCmd {
  ParamArgs params;
  std::optional<double> eta;
  std::string window;
  std::string trunc{"3,25"};
  std::string out;
};

struct TomoSimulateCmd {
  ParamArgs params;
  std::string rho;
  std::optional<double> pulse_center;
  std::optional<double> pulse_width;
  int n_trunc{0};
  std::string out;
};

struct TomoReconstructCmd {
  std::string probs;
  std::string truth;
  std::string out;
};

void run_ladder(LadderCmd& cmd) {
  homs_params p = cmd.params.resolve();
  if (cmd.n_max < 1) fail(1, "--n-max must be >= 1");
  std::ostringstream os;
  os << "m,n,xi,energy\n";
  for (int m = 0; m <= 1; ++m)
    for (int n = 0; n <= cmd.n_max; ++n) {
      if (n == 0) {
        double e;
        check(homs_total_energy(&p, m, 0, HOMS_BRANCH_GROUND, &e));
        os << m << ",0,ground," << fmt(e) << '\n';
        continue;
      }
      for (int xi : {HOMS_BRANCH_PLUS, HOMS_BRANCH_MINUS}) {
        double e;
        check(homs_total_energy(&p, m, n, xi, &e));
        os << m << ',' << n << ',' << branch_name(xi) << ',' << fmt(e) << '\n';
      }
    }
  write_atomic(cmd.out, os.str());
}

void run_overlaps(OverlapsCmd& cmd) {
  homs_params p = cmd.params.resolve();
  int n_trunc = cmd.n_trunc;
  if (n_trunc <= 0) {
    homs_derived d;
    check(homs_derive(&p, &d));
    n_trunc = homs_default_overlap_n_trunc(d.beta);
    if (n_trunc < 0) fail(1, homs_last_error());
  }
  homs_system* sys = nullptr;
  check(homs_system_create(&p, n_trunc, &sys));
  std::ostringstream os;
  os << "row_n,row_xi,col_n,col_xi,value\n";
  auto each_label = [n_trunc](auto&& fn) {
    fn(0, HOMS_BRANCH_GROUND);
    for (int n = 1; n <= n_trunc; ++n) {
      fn(n, HOMS_BRANCH_PLUS);
      fn(n, HOMS_BRANCH_MINUS);
    }
  };
  each_label([&](int rn, int rxi) {
    each_label([&](int cn, int cxi) {
      double v;
      check(homs_overlap(sys, rn, rxi, cn, cxi, &v));
      os << rn << ',' << branch_name(rxi) << ',' << cn << ','
         << branch_name(cxi) << ',' << fmt(v) << '\n';
    });
  });
  homs_system_free(sys);
  write_atomic(cmd.out, os.str());
}

void run_excitation(ExcitationCmd& cmd) {
  homs_params p = cmd.params.resolve();
  LabelArg initial = parse_label(cmd.initial);
  homs_system* sys = nullptr;
  check(homs_system_create(&p, cmd.n_trunc, &sys));
  std::vector<double> grid;
  if (!cmd.window.empty()) {
    grid = parse_window(cmd.window);
  } else {
    int count = 0;
    check(homs_default_excitation_grid(sys, initial.n, initial.xi, nullptr, 0,
                                       &count));
    grid.resize(count);
    check(homs_default_excitation_grid(sys, initial.n, initial.xi,
                                       grid.data(), count, &count));
  }
  std::vector<double> values(grid.size());
  homs_spectrum_info info{};
  check(homs_excitation_spectrum(sys, initial.n, initial.xi, grid.data(),
                                 int(grid.size()), values.data(), &info));
  homs_system_free(sys);
  if (info.tail_warning)
    std::fprintf(stderr,
                 "warning: truncation tail estimate %.3g above 1e-8\n",
                 info.tail_estimate);
  write_atomic(cmd.out, csv_two_columns("delta_k", "excitation", grid, values));
}

std::vector<double> coeff_from_json_map(const std::string& text, int n_trunc,
                                        int label_count) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(1, std::string("--initial is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || j.empty())
    fail(1, "--initial must be a JSON object mapping \"n,branch\" to "
            "amplitudes");
  std::vector<double> coeff(2 * label_count, 0.0);
  for (const auto& [key, value] : j.items()) {
    LabelArg l = parse_label(key);
    if (l.n > n_trunc) fail(1, "--initial label beyond truncation: " + key);
    int idx = l.n == 0 ? 0 : (l.xi == HOMS_BRANCH_PLUS ? 2 * l.n - 1 : 2 * l.n);
    double re = 0.0, im = 0.0;
    if (value.is_number()) {
      re = value.get<double>();
    } else if (value.is_array() && value.size() == 2 &&
               value[0].is_number() && value[1].is_number()) {
      re = value[0].get<double>();
      im = value[1].get<double>();
    } else {
      fail(1, "--initial amplitude for " + key +
              " must be a number or [re, im]");
    }
    coeff[2 * idx] = re;
    coeff[2 * idx + 1] = im;
  }
  double norm = 0.0;
  for (int i = 0; i < label_count; ++i)
    norm += coeff[2 * i] * coeff[2 * i] + coeff[2 * i + 1] * coeff[2 * i + 1];
  if (std::abs(norm - 1.0) > 1e-8)
    fail(1, "--initial amplitudes must be normalised (got squared norm " +
            fmt(norm) + ")");
  return coeff;
}

std::vector<double> parse_bloch(const std::string& s) {
  std::vector<std::string> parts = split(s, ',');
  if (parts.size() != 3) fail(1, "--rho must be \"rx,ry,rz\"");
  return {parse_double(parts[0], "rx"), parse_double(parts[1], "ry"),
          parse_double(parts[2], "rz")};
}

void run_transmit(TransmitCmd& cmd) {
  homs_params p = cmd.params.resolve();
  if (!cmd.initial.empty() && !cmd.rho.empty())
    fail(1, "give either --initial or --rho, not both");
  homs_derived d;
  check(homs_derive(&p, &d));

  homs_system* sys = nullptr;
  check(homs_system_create(&p, cmd.n_trunc, &sys));
  int labels = homs_system_label_count(sys);
  int n_trunc = homs_system_n_trunc(sys);

  std::vector<double> coeff;
  std::vector<double> rho;
  double center_weight = -1.0;  // P(ground) - P(excited), for the default center
  if (!cmd.rho.empty()) {
    std::vector<double> r = parse_bloch(cmd.rho);
    rho.resize(8);
    check(homs_bloch_to_rho(r[0], r[1], r[2], rho.data()));
    center_weight = rho[0] - rho[6];  // population difference down - up
  } else if (!cmd.initial.empty()) {
    coeff = coeff_from_json_map(cmd.initial, n_trunc, labels);
    double pg = coeff[0] * coeff[0] + coeff[1] * coeff[1];
    center_weight = pg - (1.0 - pg);
  } else {
    coeff.assign(2 * labels, 0.0);
    coeff[0] = 1.0;
    center_weight = 1.0;
  }

  homs_pulse pulse{};
  pulse.d = cmd.pulse_width ? *cmd.pulse_width
            : cmd.params.has_preset && cmd.params.preset_pulse_width > 0.0
                ? cmd.params.preset_pulse_width
                : p.kappa;
  double center_offset = cmd.pulse_center
                             ? *cmd.pulse_center
                             : -d.delta1 - d.delta2 * center_weight;
  pulse.omega0 = p.omega_c + center_offset;

  std::vector<double> grid;
  if (!cmd.window.empty()) {
    grid = parse_window(cmd.window);
  } else {
    int count = 0;
    const double* cptr = coeff.empty() ? nullptr : coeff.data();
    check(homs_default_transmission_grid(sys, pulse, cptr, cmd.n_show, nullptr,
                                         0, &count));
    grid.resize(count);
    check(homs_default_transmission_grid(sys, pulse, cptr, cmd.n_show,
                                         grid.data(), count, &count));
  }

  std::vector<double> values(grid.size());
  homs_spectrum_info info{};
  if (!rho.empty())
    check(homs_mixed_spectrum(sys, pulse, rho.data(), grid.data(),
                              int(grid.size()), values.data(), &info));
  else
    check(homs_transmission_spectrum(sys, pulse, coeff.data(), grid.data(),
                                     int(grid.size()), values.data(), &info));
  homs_system_free(sys);
  warn_spectrum(info);
  write_atomic(cmd.out, csv_two_columns("delta_k", "s_value", grid, values));
}

void run_lindblad(LindbladCmd& cmd) {
  homs_params p = cmd.params.resolve();
  homs_derived d;
  check(homs_derive(&p, &d));
  std::vector<std::string> tparts = split(cmd.trunc, ',');
  if (tparts.size() != 2) fail(1, "--trunc must be \"nc,nb\"");
  int n_c = parse_int(tparts[0], "trunc nc");
  int n_b = parse_int(tparts[1], "trunc nb");
  double eta = cmd.eta ? *cmd.eta : p.kappa / 50.0;
  std::vector<double> grid;
  if (!cmd.window.empty()) {
    grid = parse_window(cmd.window);
  } else {
    double c0 = -d.delta1 - d.delta2;
    grid = parse_window(fmt(c0 - 5.0 * p.kappa) + "," +
                        fmt(c0 + 5.0 * p.kappa) + ",101");
  }
  std::vector<double> values(grid.size());
  check(homs_lindblad_sweep(&p, eta, n_c, n_b, grid.data(), int(grid.size()),
                            values.data()));
  write_atomic(cmd.out,
               csv_two_columns("delta_l", "mean_photon_number", grid, values));
}

void run_tomo_simulate(TomoSimulateCmd& cmd) {
  homs_params p = cmd.params.resolve();
  homs_derived d;
  check(homs_derive(&p, &d));
  std::vector<double> r = parse_bloch(cmd.rho);
  std::vector<double> rho(8);
  check(homs_bloch_to_rho(r[0], r[1], r[2], rho.data()));

  homs_pulse pulse{};
  pulse.d = cmd.pulse_width ? *cmd.pulse_width
            : cmd.params.has_preset && cmd.params.preset_pulse_width > 0.0
                ? cmd.params.preset_pulse_width
                : 0.2 * p.kappa;
  pulse.omega0 =
      p.omega_c + (cmd.pulse_center ? *cmd.pulse_center : -d.delta1);

  homs_system* sys = nullptr;
  check(homs_system_create(&p, cmd.n_trunc, &sys));
  double probs[6];
  check(homs_tomography_simulate(sys, pulse, rho.data(), probs));
  homs_system_free(sys);

  nlohmann::json j;
  j["p"] = {{probs[0], probs[1]}, {probs[2], probs[3]}, {probs[4], probs[5]}};
  write_atomic(cmd.out, j.dump(2) + "\n");
}

void run_tomo_reconstruct(TomoReconstructCmd& cmd) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(cmd.probs));
  } catch (const nlohmann::json::parse_error& e) {
    fail(1, std::string("probability file is not valid JSON: ") + e.what());
  }
  if (!j.contains("p") || !j["p"].is_array() || j["p"].size() != 3)
    fail(1, "probability file needs a 3x2 array under \"p\"");
  double probs[6];
  for (int s = 0; s < 3; ++s) {
    const auto& row = j["p"][s];
    if (!row.is_array() || row.size() != 2 || !row[0].is_number() ||
        !row[1].is_number())
      fail(1, "probability row " + std::to_string(s + 1) +
              " must be [p_down, p_up]");
    probs[2 * s] = row[0].get<double>();
    probs[2 * s + 1] = row[1].get<double>();
  }
  double rho[8];
  double min_eig = 0.0;
  check(homs_tomography_reconstruct(probs, rho, &min_eig));
  if (min_eig < -1e-3)
    std::fprintf(stderr,
                 "warning: reconstructed state has eigenvalue %.6f; the "
                 "input data is unphysical\n",
                 min_eig);
  nlohmann::json out;
  out["rho"] = {{rho[0], rho[1]}, {rho[2], rho[3]}, {rho[4], rho[5]},
                {rho[6], rho[7]}};
  out["min_eigenvalue"] = min_eig;
  if (!cmd.truth.empty()) {
    std::vector<double> r = parse_bloch(cmd.truth);
    double truth_rho[8];
    check(homs_bloch_to_rho(r[0], r[1], r[2], truth_rho));
    double f = 0.0;
    check(homs_fidelity(truth_rho, rho, &f));
    out["fidelity"] = f;
  }
  write_atomic(cmd.out, out.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-photon spectra of a cavity-mechanics-qubit system"};
  app.require_subcommand(1);

  LadderCmd ladder;
  CLI::App* lad = app.add_subcommand(
      "ladder", "dressed-state energies as CSV (m,n,xi,energy)");
  ladder.params.attach(lad);
  lad->add_option("--n-max", ladder.n_max, "highest doublet (default 6)");
  lad->add_option("--out", ladder.out, "output CSV path")->required();

  OverlapsCmd overlaps;
  CLI::App* ov = app.add_subcommand(
      "overlaps", "displaced-frame overlap matrix as CSV");
  overlaps.params.attach(ov);
  ov->add_option("--n-trunc", overlaps.n_trunc,
                 "ladder truncation (default: Poisson-bound rule)");
  ov->add_option("--out", overlaps.out, "output CSV path")->required();

  ExcitationCmd excitation;
  CLI::App* ex = app.add_subcommand(
      "excitation", "cavity excitation spectrum for a monochromatic photon");
  excitation.params.attach(ex);
  ex->add_option("--initial", excitation.initial,
                 "initial label \"n,branch\" (default 0,ground)");
  ex->add_option("--window", excitation.window,
                 "detuning window \"lo,hi,points\" (default: auto around "
                 "predicted peaks)");
  ex->add_option("--n-trunc", excitation.n_trunc,
                 "ladder truncation (default: flux-conserving rule)");
  ex->add_option("--out", excitation.out, "output CSV path")->required();

  TransmitCmd transmit;
  CLI::App* tr = app.add_subcommand(
      "transmit", "transmitted spectrum of a Gaussian single-photon pulse");
  transmit.params.attach(tr);
  tr->add_option("--pulse-center", transmit.pulse_center,
                 "pulse center as offset from the cavity frequency "
                 "(default: population-weighted polaron shift)");
  tr->add_option("--pulse-width", transmit.pulse_width,
                 "spectral width d (default: preset width, else kappa)");
  tr->add_option("--initial", transmit.initial,
                 "JSON amplitude map over labels, e.g. "
                 "{\"0,ground\":[1,0]}");
  tr->add_option("--rho", transmit.rho,
                 "TLS Bloch vector \"rx,ry,rz\" (x) mechanical vacuum");
  tr->add_option("--window", transmit.window,
                 "detuning window \"lo,hi,points\"");
  tr->add_option("--n-show", transmit.n_show,
                 "red sidebands in the default window (negative = auto)");
  tr->add_option("--n-trunc", transmit.n_trunc, "ladder truncation");
  tr->add_option("--out", transmit.out, "output CSV path")->required();

  LindbladCmd lindblad;
  CLI::App* li = app.add_subcommand(
      "lindblad", "steady-state mean photon number vs drive detuning");
  lindblad.params.attach(li);
  li->add_option("--eta", lindblad.eta, "drive amplitude (default kappa/50)");
  li->add_option("--window", lindblad.window,
                 "drive detuning window \"lo,hi,points\" (default: 5 kappa "
                 "around the first peak, 101 points)");
  li->add_option("--trunc", lindblad.trunc,
                 "Fock cutoffs \"nc,nb\" (default 3,25)");
  li->add_option("--out", lindblad.out, "output CSV path")->required();

  CLI::App* tomo = app.add_subcommand("tomography",
                                      "MUB qubit tomography from spectra");
  tomo->require_subcommand(1);

  TomoSimulateCmd tsim;
  CLI::App* ts = tomo->add_subcommand(
      "simulate", "measured MUB probabilities for a TLS state");
  tsim.params.attach(ts);
  ts->add_option("--rho", tsim.rho, "TLS Bloch vector \"rx,ry,rz\"")
      ->required();
  ts->add_option("--pulse-center", tsim.pulse_center,
                 "pulse center offset (default: -delta1)");
  ts->add_option("--pulse-width", tsim.pulse_width,
                 "spectral width (default: preset width, else 0.2 kappa)");
  ts->add_option("--n-trunc", tsim.n_trunc, "ladder truncation");
  ts->add_option("--out", tsim.out, "output JSON path")->required();

  TomoReconstructCmd trec;
  CLI::App* tc = tomo->add_subcommand(
      "reconstruct", "density matrix from measured probabilities");
  tc->add_option("--probs", trec.probs, "probability JSON from simulate")
      ->required();
  tc->add_option("--truth", trec.truth,
                 "true Bloch vector \"rx,ry,rz\" for a fidelity score");
  tc->add_option("--out", trec.out, "output JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    std::fprintf(stderr, "%s", app.help().c_str());
    return 1;
  }

  try {
    if (lad->parsed()) run_ladder(ladder);
    if (ov->parsed()) run_overlaps(overlaps);
    if (ex->parsed()) run_excitation(excitation);
    if (tr->parsed()) run_transmit(transmit);
    if (li->parsed()) run_lindblad(lindblad);
    if (tomo->parsed()) {
      if (ts->parsed()) run_tomo_simulate(tsim);
      if (tc->parsed()) run_tomo_reconstruct(trec);
    }
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.code;
  }
  return 0;
}
