#ifndef PICOLINK_H
#define PICOLINK_H

/*
 * C interface to the picolink optical-beacon link models.
 *
 * Every function returns a pl_status. On failure, pl_last_error() holds a
 * message for the calling thread until its next picolink call. Handles are
 * opaque; free each with its matching *_free function.
 *
 * All quantities are SI (m, W, Hz, rad, s).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PICOLINK_BUILDING_LIBRARY)
#    define PL_API __declspec(dllexport)
#  else
#    define PL_API __declspec(dllimport)
#  endif
#else
#  define PL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum pl_status {
  PL_OK = 0,
  PL_ERR_INTERNAL = 1,
  PL_ERR_VALIDATION = 2,
  PL_ERR_NUMERICAL = 3,
  PL_ERR_IO = 4
} pl_status;

typedef enum pl_snr_model {
  PL_SNR_APD_ELECTRICAL = 0,
  PL_SNR_PHOTOELECTRON_COUNT = 1
} pl_snr_model;

/* One optical terminal. qe and noise_electron_rate are ignored (absent)
 * when <= 0. */
typedef struct pl_terminal {
  double power_w;
  double wavelength_m;
  double waist_m;
  double area_m2;
  double apd_gain;
  double responsivity_a_per_w;
  double excess_noise;
  double bandwidth_hz;
  double qe;
  double noise_electron_rate;
  double control_error_rad;
  double knowledge_error_rad;
  pl_snr_model snr_model;
} pl_terminal;

typedef struct pl_link_budget {
  double space_loss;
  double tx_gain;
  double rx_gain;
  double pointing_loss;
  double received_power_w;
  double snr;
  double snr_tilde;
} pl_link_budget;

typedef struct pl_acq_event {
  uint64_t run_id;
  double t_s;
  double dtheta_a_rad;
  double sigma_a_rad;
  double dtheta_b_rad;
  double sigma_b_rad;
} pl_acq_event;

typedef struct pl_mc_summary {
  uint64_t runs;
  uint64_t acquisitions;
  double acq_fraction;
  double mean_time_s; /* NaN when no run acquired */
} pl_mc_summary;

typedef struct pl_run_options {
  const char* out_dir; /* NULL: current directory */
  int has_seed;
  uint64_t seed;
  int optimize_beamwidth;
  unsigned threads; /* 0 treated as 1 */
} pl_run_options;

typedef struct pl_scenario pl_scenario;
typedef struct pl_report pl_report;
typedef struct pl_mc_result pl_mc_result;

PL_API const char* pl_version(void);
PL_API const char* pl_last_error(void);

/* Terminal physics */
PL_API pl_status pl_terminal_baseline(pl_terminal* out);
PL_API pl_status pl_link_budget_eval(const pl_terminal* tx, const pl_terminal* rx, double distance_m,
                                     double offpoint_rad, pl_link_budget* out);
PL_API pl_status pl_mutual_acq_prob(const pl_terminal* a, const pl_terminal* b, double distance_m,
                                    double snr_star_db, int optimize_beamwidth, double* out);
PL_API pl_status pl_optimal_sigma(const pl_terminal* tx, const pl_terminal* rx, double distance_m,
                                  double snr_star_db, double* out);

/* Constellation */
PL_API pl_status pl_ring_count(double a_m, double spacing_m, uint64_t* out);
PL_API pl_status pl_total_terminals(double a_inner_m, double a_outer_m, double spacing_m,
                                    uint64_t* exact, double* approx);
PL_API pl_status pl_relative_cost(double learning_pct, double units, double* out);

/* Attitude */
PL_API pl_status pl_knowledge_error(double arw, double rrw, double st_noise_rad,
                                    double st_cadence_s, double* out);

/* Scenarios. Sections missing from the document keep the baseline values. */
PL_API pl_status pl_scenario_default(pl_scenario** out);
PL_API pl_status pl_scenario_load_file(const char* path, pl_scenario** out);
PL_API pl_status pl_scenario_parse(const char* json_text, pl_scenario** out);
PL_API void pl_scenario_free(pl_scenario* s);

/* Batch reports; each writes its CSV/JSON files under options->out_dir. */
PL_API pl_status pl_run_link(const pl_scenario* s, const pl_run_options* opts, pl_report** out);
PL_API pl_status pl_run_acquire(const pl_scenario* s, const pl_run_options* opts, pl_report** out);
PL_API pl_status pl_run_mc(const pl_scenario* s, const pl_run_options* opts, pl_report** out);
PL_API pl_status pl_run_constellation(const pl_scenario* s, const pl_run_options* opts,
                                      pl_report** out);
PL_API pl_status pl_run_attitude(const pl_scenario* s, const pl_run_options* opts, pl_report** out);

PL_API const char* pl_report_summary(const pl_report* r);
PL_API size_t pl_report_file_count(const pl_report* r);
PL_API const char* pl_report_file(const pl_report* r, size_t index);
PL_API void pl_report_free(pl_report* r);

/* In-memory Monte Carlo over the scenario's mc section. */
PL_API pl_status pl_mc_simulate(const pl_scenario* s, const pl_run_options* opts,
                                pl_mc_result** out);
PL_API size_t pl_mc_result_event_count(const pl_mc_result* r);
PL_API pl_status pl_mc_result_event(const pl_mc_result* r, size_t index, pl_acq_event* out);
PL_API pl_status pl_mc_result_summary(const pl_mc_result* r, pl_mc_summary* out);
PL_API void pl_mc_result_free(pl_mc_result* r);

#ifdef __cplusplus
}
#endif

#endif /* PICOLINK_H */
