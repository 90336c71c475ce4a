#include "picolink/picolink.h"

#include <cmath>
#include <exception>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "picolink/errors.hpp"
#include "picolink/reports.hpp"
#include "picolink/scenario.hpp"

struct pl_scenario {
  picolink::Scenario value;
};

struct pl_report {
  std::string summary;
  std::vector<std::string> files;
};

struct pl_mc_result {
  picolink::McResult value;
};

namespace {

thread_local std::string g_last_error;

pl_status fail(pl_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
pl_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return PL_OK;
  } catch (const picolink::ParameterError& e) {
    return fail(PL_ERR_VALIDATION, e.what());
  } catch (const picolink::NumericalError& e) {
    return fail(PL_ERR_NUMERICAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PL_ERR_IO, e.what());
  } catch (...) {
    return fail(PL_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw picolink::ParameterError(std::string(name) + " is NULL");
}

picolink::TerminalSpec to_spec(const pl_terminal& t) {
  picolink::TerminalSpec s;
  s.emitter = {t.power_w, t.wavelength_m, t.waist_m};
  s.detector.area_m2 = t.area_m2;
  s.detector.apd_gain = t.apd_gain;
  s.detector.responsivity_a_per_w = t.responsivity_a_per_w;
  s.detector.excess_noise = t.excess_noise;
  s.detector.bandwidth_hz = t.bandwidth_hz;
  if (t.qe > 0.0) s.detector.qe = t.qe;
  if (t.noise_electron_rate > 0.0) s.detector.noise_electron_rate = t.noise_electron_rate;
  s.pointing = {t.control_error_rad, t.knowledge_error_rad};
  switch (t.snr_model) {
    case PL_SNR_APD_ELECTRICAL: s.snr_model = picolink::SnrModel::ApdElectrical; break;
    case PL_SNR_PHOTOELECTRON_COUNT: s.snr_model = picolink::SnrModel::PhotoelectronCount; break;
    default: throw picolink::ParameterError("unknown snr_model");
  }
  s.validate();
  return s;
}

picolink::RunOptions to_options(const pl_run_options* o) {
  picolink::RunOptions r;
  if (o == nullptr) return r;
  if (o->out_dir) r.out_dir = o->out_dir;
  if (o->has_seed) r.seed = o->seed;
  r.optimize_beamwidth = o->optimize_beamwidth != 0;
  r.threads = o->threads == 0 ? 1 : o->threads;
  return r;
}

using ReportFn = picolink::Report (*)(const picolink::Scenario&, const picolink::RunOptions&);

pl_status run_report(ReportFn fn, const pl_scenario* s, const pl_run_options* opts,
                     pl_report** out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    *out = nullptr;
    picolink::Report rep = fn(s->value, to_options(opts));
    auto* r = new pl_report;
    r->summary = std::move(rep.summary);
    for (const auto& f : rep.files) r->files.push_back(f.string());
    *out = r;
  });
}

}  // namespace

extern "C" {

const char* pl_version(void) { return "1.0.0"; }

const char* pl_last_error(void) { return g_last_error.c_str(); }

pl_status pl_terminal_baseline(pl_terminal* out) {
  return guarded([&] {
    require(out, "out");
    const picolink::TerminalSpec t = picolink::baseline_terminal();
    *out = pl_terminal{};
    out->power_w = t.emitter.power_w;
    out->wavelength_m = t.emitter.wavelength_m;
    out->waist_m = t.emitter.waist_m;
    out->area_m2 = t.detector.area_m2;
    out->apd_gain = t.detector.apd_gain;
    out->responsivity_a_per_w = t.detector.responsivity_a_per_w;
    out->excess_noise = t.detector.excess_noise;
    out->bandwidth_hz = t.detector.bandwidth_hz;
    out->control_error_rad = t.pointing.control_rad;
    out->knowledge_error_rad = t.pointing.knowledge_rad;
    out->snr_model = PL_SNR_APD_ELECTRICAL;
  });
}

pl_status pl_link_budget_eval(const pl_terminal* tx, const pl_terminal* rx, double distance_m,
                              double offpoint_rad, pl_link_budget* out) {
  return guarded([&] {
    require(tx, "tx");
    require(rx, "rx");
    require(out, "out");
    const auto t = to_spec(*tx);
    const auto r = to_spec(*rx);
    const picolink::LinkState link{distance_m, offpoint_rad};
    const picolink::LinkBudget b = picolink::received_power(t.emitter, r.detector, link);
    out->space_loss = b.space_loss;
    out->tx_gain = b.tx_gain;
    out->rx_gain = b.rx_gain;
    out->pointing_loss = b.pointing_loss;
    out->received_power_w = b.received_power_w;
    out->snr = picolink::snr_from_power(b.received_power_w, r.detector, r.snr_model);
    out->snr_tilde = picolink::snr_tilde(t.emitter, r.detector, distance_m, r.snr_model);
  });
}

pl_status pl_mutual_acq_prob(const pl_terminal* a, const pl_terminal* b, double distance_m,
                             double snr_star_db, int optimize_beamwidth, double* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    const auto thr = picolink::Threshold::from_db(snr_star_db);
    *out = optimize_beamwidth
               ? picolink::mutual_acq_prob_optimized(to_spec(*a), to_spec(*b), distance_m, thr)
               : picolink::mutual_acq_prob(to_spec(*a), to_spec(*b), distance_m, thr);
  });
}

pl_status pl_optimal_sigma(const pl_terminal* tx, const pl_terminal* rx, double distance_m,
                           double snr_star_db, double* out) {
  return guarded([&] {
    require(tx, "tx");
    require(rx, "rx");
    require(out, "out");
    *out = picolink::optimal_sigma_acquisition(to_spec(*tx), to_spec(*rx), distance_m,
                                               picolink::Threshold::from_db(snr_star_db));
  });
}

pl_status pl_ring_count(double a_m, double spacing_m, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = picolink::ring_count(a_m, spacing_m);
  });
}

pl_status pl_total_terminals(double a_inner_m, double a_outer_m, double spacing_m, uint64_t* exact,
                             double* approx) {
  return guarded([&] {
    const picolink::ConstellationSpec spec{a_inner_m, a_outer_m, spacing_m, {}};
    spec.validate();
    if (exact) *exact = picolink::total_terminals_exact(spec);
    if (approx) *approx = picolink::total_terminals_approx(a_inner_m, a_outer_m, spacing_m);
  });
}

pl_status pl_relative_cost(double learning_pct, double units, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = picolink::relative_cost(learning_pct, units);
  });
}

pl_status pl_knowledge_error(double arw, double rrw, double st_noise_rad, double st_cadence_s,
                             double* out) {
  return guarded([&] {
    require(out, "out");
    *out = picolink::steady_state_knowledge_error({arw, rrw}, {st_noise_rad, st_cadence_s});
  });
}

pl_status pl_scenario_default(pl_scenario** out) {
  return guarded([&] {
    require(out, "out");
    *out = new pl_scenario{picolink::default_scenario()};
  });
}

pl_status pl_scenario_load_file(const char* path, pl_scenario** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    *out = new pl_scenario{picolink::load_scenario(path)};
  });
}

pl_status pl_scenario_parse(const char* json_text, pl_scenario** out) {
  return guarded([&] {
    require(json_text, "json_text");
    require(out, "out");
    *out = nullptr;
    *out = new pl_scenario{picolink::parse_scenario_text(json_text)};
  });
}

void pl_scenario_free(pl_scenario* s) { delete s; }

pl_status pl_run_link(const pl_scenario* s, const pl_run_options* opts, pl_report** out) {
  return run_report(&picolink::report_link, s, opts, out);
}

pl_status pl_run_acquire(const pl_scenario* s, const pl_run_options* opts, pl_report** out) {
  return run_report(&picolink::report_acquire, s, opts, out);
}

pl_status pl_run_mc(const pl_scenario* s, const pl_run_options* opts, pl_report** out) {
  return run_report(&picolink::report_mc, s, opts, out);
}

pl_status pl_run_constellation(const pl_scenario* s, const pl_run_options* opts, pl_report** out) {
  return run_report(&picolink::report_constellation, s, opts, out);
}

pl_status pl_run_attitude(const pl_scenario* s, const pl_run_options* opts, pl_report** out) {
  return run_report(&picolink::report_attitude, s, opts, out);
}

const char* pl_report_summary(const pl_report* r) { return r ? r->summary.c_str() : ""; }

size_t pl_report_file_count(const pl_report* r) { return r ? r->files.size() : 0; }

const char* pl_report_file(const pl_report* r, size_t index) {
  if (r == nullptr || index >= r->files.size()) return nullptr;
  return r->files[index].c_str();
}

void pl_report_free(pl_report* r) { delete r; }

pl_status pl_mc_simulate(const pl_scenario* s, const pl_run_options* opts, pl_mc_result** out) {
  return guarded([&] {
    require(s, "scenario");
    require(out, "out");
    *out = nullptr;
    const picolink::RunOptions o = to_options(opts);
    const picolink::Scenario& sc = s->value;
    picolink::McConfig cfg = sc.mc.config;
    if (o.seed) cfg.seed = *o.seed;
    const auto pa = picolink::resolve_modulation(sc.mc.modulation_a, sc.terminal_a, sc.terminal_b,
                                                 sc.mc.distance_m, sc.threshold, cfg.dt_s,
                                                 o.optimize_beamwidth);
    const auto pb = picolink::resolve_modulation(sc.mc.modulation_b, sc.terminal_b, sc.terminal_a,
                                                 sc.mc.distance_m, sc.threshold, cfg.dt_s,
                                                 o.optimize_beamwidth);
    *out = new pl_mc_result{picolink::run_mc_acquisition(sc.terminal_a, sc.terminal_b,
                                                         sc.mc.distance_m, sc.threshold, pa, pb,
                                                         cfg, o.threads)};
  });
}

size_t pl_mc_result_event_count(const pl_mc_result* r) { return r ? r->value.events.size() : 0; }

pl_status pl_mc_result_event(const pl_mc_result* r, size_t index, pl_acq_event* out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    if (index >= r->value.events.size()) throw picolink::ParameterError("event index out of range");
    const auto& e = r->value.events[index];
    *out = {e.run_id, e.time_s, e.dtheta_a_rad, e.sigma_a_rad, e.dtheta_b_rad, e.sigma_b_rad};
  });
}

pl_status pl_mc_result_summary(const pl_mc_result* r, pl_mc_summary* out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    const auto& s = r->value.summary;
    out->runs = s.runs;
    out->acquisitions = s.acquisitions;
    out->acq_fraction = s.acq_fraction;
    out->mean_time_s = s.mean_time_s.value_or(std::numeric_limits<double>::quiet_NaN());
  });
}

void pl_mc_result_free(pl_mc_result* r) { delete r; }

}  // extern "C"
