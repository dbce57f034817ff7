/* C interface to the hybrid optomechanics scattering library.
 *
 * Conventions: hbar = 1, frequencies in units of omega_b unless the caller
 * chooses otherwise, waveguide group velocity 1, cavity-waveguide coupling
 * V = sqrt(kappa). Every function returning int gives a homs_status;
 * homs_last_error() describes the most recent failure on this thread.
 *
 * Dressed labels are (n, xi) pairs: n = 0 with xi = HOMS_BRANCH_GROUND is
 * the unpaired ground label, n >= 1 with plus/minus selects the doublet.
 *
 * Qubit density matrices cross the boundary as 8 doubles, row-major with
 * interleaved real/imaginary parts, basis order (down, up):
 *   [re00, im00, re01, im01, re10, im10, re11, im11].
 */

#ifndef HYBRIDOMS_H
#define HYBRIDOMS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  HOMS_OK = 0,
  HOMS_ERR_INVALID_ARGUMENT = 1,
  HOMS_ERR_NUMERICAL = 2,
  HOMS_ERR_INTERNAL = 3
} homs_status;

typedef enum {
  HOMS_BRANCH_GROUND = 0,
  HOMS_BRANCH_PLUS = 1,
  HOMS_BRANCH_MINUS = 2
} homs_branch;

typedef struct {
  double omega_c;  /* cavity frequency */
  double omega_b;  /* mechanical frequency */
  double omega_a;  /* TLS transition frequency */
  double g;        /* optomechanical coupling */
  double lambda;   /* TLS-mechanics coupling */
  double kappa;    /* cavity decay */
  double gamma_a;  /* TLS decay */
  double gamma_b;  /* mechanical damping */
  double n_a;      /* TLS thermal occupation */
  double n_b;      /* mechanical thermal occupation */
} homs_params;

typedef struct {
  double beta;    /* g/omega_b */
  double alpha;   /* beta*lambda/omega_a */
  double delta1;  /* g^2/omega_b */
  double delta2;  /* beta^2 lambda^2/omega_a */
  double delta_ab; /* omega_a - omega_b */
  int alpha_large;          /* alpha > 0.1 */
  int lambda_large;         /* lambda >= min(omega_a, omega_b)/10 */
  int sideband_unresolved;  /* kappa >= omega_b */
} homs_derived;

typedef struct {
  double omega0;  /* absolute pulse center frequency */
  double d;       /* spectral width */
} homs_pulse;

typedef struct {
  double tail_estimate;   /* truncation remainder bound */
  int tail_warning;       /* tail_estimate > 1e-8 */
  double integral;        /* quadrature over the grid */
  int coverage_warning;   /* integral < 0.999 */
  int width_warning;      /* pulse width not small against omega_b */
} homs_spectrum_info;

/* Message for the most recent failing call on this thread; empty string if
 * none. The pointer stays valid until the next failing call. */
const char* homs_last_error(void);

const char* homs_version(void);

/* ---- parameters ---- */

int homs_params_default(homs_params* out);
int homs_params_from_json_text(const char* text, homs_params* out);
int homs_validate(const homs_params* p);
int homs_derive(const homs_params* p, homs_derived* out);

/* Named parameter sets (fig2, fig3, fig4ac, fig4df, fig5, fig6);
 * pulse_width may be NULL. */
int homs_preset(const char* name, homs_params* out, double* pulse_width);

/* ---- ladder ---- */

int homs_mixing_angle(int n, double lambda, double delta_ab, double* out);
int homs_dressed_energy(const homs_params* p, int n, int xi, double* out);
int homs_total_energy(const homs_params* p, int m, int n, int xi,
                      double* out);
int homs_dressed_state(const homs_params* p, int n, int xi, double* c_up,
                       double* c_down);

/* ---- scattering system (overlaps + energy tables) ---- */

typedef struct homs_system homs_system;

/* n_trunc <= 0 selects the default truncation. */
int homs_system_create(const homs_params* p, int n_trunc, homs_system** out);
void homs_system_free(homs_system* sys);
int homs_system_n_trunc(const homs_system* sys);
int homs_system_label_count(const homs_system* sys);
int homs_default_overlap_n_trunc(double beta);

/* <row| U(1) |col> between dressed labels. */
int homs_overlap(const homs_system* sys, int row_n, int row_xi, int col_n,
                 int col_xi, double* out);

/* Complex transmission amplitude t_{final,initial}(omega_k). */
int homs_transmission_amplitude(const homs_system* sys, double omega_k,
                                int final_n, int final_xi, int initial_n,
                                int initial_xi, double* re, double* im);

/* Sum over final labels of |t|^2 at omega_k (1 for a lossless scatterer). */
int homs_transmission_flux(const homs_system* sys, double omega_k,
                           int initial_n, int initial_xi, double* out);

/* Resonance positions (relative to the cavity line) and Franck-Condon
 * weights for final labels with n <= n_max. Arrays hold `cap` entries;
 * *count receives the total available. Pass cap = 0 to query the size. */
int homs_predict_excitation_peaks(const homs_system* sys, int initial_n,
                                  int initial_xi, int n_max, double* delta_k,
                                  double* weight, int* final_n, int* final_xi,
                                  int cap, int* count);

/* Default detuning grid around the predicted peaks. Two-call protocol as
 * above. */
int homs_default_excitation_grid(const homs_system* sys, int initial_n,
                                 int initial_xi, double* grid, int cap,
                                 int* count);

/* Cavity excitation probability on a detuning grid. info may be NULL. */
int homs_excitation_spectrum(const homs_system* sys, int initial_n,
                             int initial_xi, const double* grid, int npts,
                             double* values, homs_spectrum_info* info);

/* ---- pulse transmission ---- */

/* coeff: interleaved re/im pairs over label_count entries (label order:
 * ground, 1+, 1-, 2+, 2-, ...), normalised. */
int homs_transmission_spectrum(const homs_system* sys, homs_pulse pulse,
                               const double* coeff, const double* grid,
                               int npts, double* values,
                               homs_spectrum_info* info);

/* coeff may be NULL: the grid then covers the full qubit span (mechanical
 * vacuum times any TLS state). n_show is the number of red mechanical
 * sidebands in view; pass a negative value to size the window automatically
 * (keeps 99.9% of the displacement weight, and widens the blue edge when the
 * initial state is excited). */
int homs_default_transmission_grid(const homs_system* sys, homs_pulse pulse,
                                   const double* coeff, int n_show,
                                   double* grid, int cap, int* count);

/* TLS density matrix (x) mechanical vacuum. rho: 8 doubles as documented. */
int homs_mixed_spectrum(const homs_system* sys, homs_pulse pulse,
                        const double* rho, const double* grid, int npts,
                        double* values, homs_spectrum_info* info);

/* ---- steady-state oracle ---- */

/* Mean cavity photon number over a drive-detuning grid at truncation
 * (n_c, n_b). */
int homs_lindblad_sweep(const homs_params* p, double eta, int n_c, int n_b,
                        const double* delta_l, int npts, double* mean_photon);

/* One steady-state solve; any output pointer may be NULL. */
int homs_lindblad_steady_state(const homs_params* p, double eta,
                               double delta_l, int n_c, int n_b,
                               double* mean_photon, double* residual,
                               double* min_eigenvalue);

/* ---- tomography ---- */

int homs_bloch_to_rho(double rx, double ry, double rz, double* rho_out);
int homs_rho_to_bloch(const double* rho, double* rx, double* ry, double* rz);

/* probs: 6 doubles, (p_down, p_up) per basis in order identity, Hadamard,
 * exp(i pi/4 sigma_x). */
int homs_tomography_simulate(const homs_system* sys, homs_pulse pulse,
                             const double* rho, double* probs);

/* min_eigenvalue may be NULL; negative values flag unphysical input. */
int homs_tomography_reconstruct(const double* probs, double* rho_out,
                                double* min_eigenvalue);

int homs_fidelity(const double* rho_a, const double* rho_b, double* out);

#ifdef __cplusplus
}
#endif

#endif /* HYBRIDOMS_H */
