#include "picolink/beam_control.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "picolink/errors.hpp"
#include "picolink/rng.hpp"
#include "picolink/units.hpp"

namespace picolink {

using constants::kE;
using constants::kPi;

double optimal_sigma_acquisition(const TerminalSpec& tx, const TerminalSpec& rx,
                                 double distance_m, const Threshold& thr) {
  tx.validate();
  rx.validate();
  const double lambda = tx.emitter.wavelength_m;
  const double ls = space_loss(lambda, distance_m);
  const double g_rx = rx_gain(rx.detector, lambda);
  const double p0 = tx.emitter.power_w;
  const DetectorParams& det = rx.detector;
  switch (rx.snr_model) {
    case SnrModel::ApdElectrical:
      return std::sqrt(p0 * ls * g_rx * det.responsivity_a_per_w /
                       (8.0 * constants::kElementaryCharge * kE * thr.linear() *
                        det.bandwidth_hz * det.excess_noise));
    case SnrModel::PhotoelectronCount:
      return std::sqrt(p0 * ls * g_rx * *det.qe /
                       (4.0 * kE * thr.linear() * *det.noise_electron_rate));
  }
  throw ParameterError("unknown SNR model");
}

double optimal_defocus_active(double offpoint_rad) {
  if (!(offpoint_rad >= 0.0) || !std::isfinite(offpoint_rad)) {
    throw ParameterError("off-pointing must be finite and >= 0");
  }
  return offpoint_rad / std::sqrt(2.0);
}

double defocus_flux_factor(double sigma_rad, double offpoint_rad) {
  if (!(sigma_rad > 0.0)) throw ParameterError("beam divergence must be positive");
  return std::exp(-(offpoint_rad * offpoint_rad) / (2.0 * sigma_rad * sigma_rad)) /
         (sigma_rad * sigma_rad);
}

double directed_snr(const TerminalSpec& tx, const TerminalSpec& rx, double distance_m,
                    double sigma_rad, double offpoint_rad) {
  return snr(tx.emitter.with_divergence(sigma_rad), rx.detector,
             LinkState{distance_m, offpoint_rad}, rx.snr_model);
}

namespace {

double directed_optimized_prob(const TerminalSpec& tx, const TerminalSpec& rx, double distance_m,
                               const Threshold& thr) {
  const double sigma = optimal_sigma_acquisition(tx, rx, distance_m, thr);
  TerminalSpec refocused = tx;
  refocused.emitter = tx.emitter.with_divergence(sigma);
  return directed_acq_prob(refocused, rx, distance_m, thr);
}

}  // namespace

double mutual_acq_prob_optimized(const TerminalSpec& a, const TerminalSpec& b, double distance_m,
                                 const Threshold& thr) {
  return directed_optimized_prob(a, b, distance_m, thr) *
         directed_optimized_prob(b, a, distance_m, thr);
}

std::vector<SweepCell> acquisition_probability_sweep(const TerminalSpec& a, const TerminalSpec& b,
                                                     std::span<const double> distances_m,
                                                     std::span<const double> zetas_rad,
                                                     const Threshold& thr, bool optimize) {
  if (distances_m.empty() || zetas_rad.empty()) {
    throw ParameterError("acquisition sweep needs at least one distance and one zeta");
  }
  std::vector<SweepCell> cells;
  cells.reserve(distances_m.size() * zetas_rad.size());
  TerminalSpec ta = a;
  TerminalSpec tb = b;
  for (double d : distances_m) {
    if (!(d > 0.0)) throw ParameterError("sweep distances must be positive");
    for (double zeta : zetas_rad) {
      if (!(zeta > 0.0)) throw ParameterError("sweep zetas must be positive");
      ta.pointing = PointingError::total(zeta);
      tb.pointing = PointingError::total(zeta);
      const double p = optimize ? mutual_acq_prob_optimized(ta, tb, d, thr)
                                : mutual_acq_prob(ta, tb, d, thr);
      cells.push_back({d, zeta, p});
    }
  }
  return cells;
}

void ModulationPolicy::validate() const {
  if (!(sigma0_rad > 0.0) || !std::isfinite(sigma0_rad)) {
    throw ParameterError("modulation.sigma0_rad must be positive");
  }
  if (!(amplitude_frac >= 0.0 && amplitude_frac < 1.0)) {
    throw ParameterError("modulation.amplitude_frac must lie in [0, 1)");
  }
  if (!(period_s > 0.0) || !std::isfinite(period_s)) {
    throw ParameterError("modulation.period_s must be positive");
  }
  if (phase_rad && !std::isfinite(*phase_rad)) {
    throw ParameterError("modulation.phase_rad must be finite");
  }
}

double ModulationPolicy::width_at(double t_s, double phase) const {
  return sigma0_rad * (1.0 + amplitude_frac * std::sin(2.0 * kPi * t_s / period_s + phase));
}

void McConfig::validate() const {
  if (runs < 1) throw ParameterError("mc.runs must be >= 1");
  if (!(dt_s > 0.0) || !std::isfinite(dt_s)) throw ParameterError("mc.dt_s must be positive");
  if (!(max_time_s >= dt_s) || !std::isfinite(max_time_s)) {
    throw ParameterError("mc.max_time_s must be >= mc.dt_s");
  }
  if (const auto* ou = std::get_if<OrnsteinUhlenbeck>(&pointing_process)) {
    if (!(ou->correlation_time_s > 0.0)) {
      throw ParameterError("mc.pointing_process correlation_time_s must be positive");
    }
  }
}

namespace {

// One terminal's off-pointing sequence.
class PointingSampler {
 public:
  PointingSampler(double zeta, double dt, const PointingProcess& process) : zeta_(zeta) {
    if (const auto* ou = std::get_if<OrnsteinUhlenbeck>(&process)) {
      correlated_ = true;
      rho_ = std::exp(-dt / ou->correlation_time_s);
      innovation_ = std::sqrt(1.0 - rho_ * rho_);
    }
  }

  double next(Rng& rng) {
    const double n = rng.normal();
    if (!correlated_ || first_) {
      state_ = zeta_ * n;
      first_ = false;
    } else {
      state_ = rho_ * state_ + zeta_ * innovation_ * n;
    }
    return std::fabs(state_);
  }

 private:
  double zeta_;
  bool correlated_ = false;
  bool first_ = true;
  double rho_ = 0.0;
  double innovation_ = 0.0;
  double state_ = 0.0;
};

struct RunContext {
  const TerminalSpec& a;
  const TerminalSpec& b;
  double distance_m;
  double snr_star;
  const ModulationPolicy& policy_a;
  const ModulationPolicy& policy_b;
  const McConfig& cfg;
  std::uint64_t max_steps;
};

std::optional<AcquisitionEvent> simulate_run(const RunContext& ctx, std::uint64_t run_id) {
  Rng rng(run_seed(ctx.cfg.seed, run_id));
  const double phase_a = ctx.policy_a.phase_rad ? *ctx.policy_a.phase_rad : 2.0 * kPi * rng.uniform();
  const double phase_b = ctx.policy_b.phase_rad ? *ctx.policy_b.phase_rad : 2.0 * kPi * rng.uniform();
  PointingSampler pa(ctx.a.pointing.combined(), ctx.cfg.dt_s, ctx.cfg.pointing_process);
  PointingSampler pb(ctx.b.pointing.combined(), ctx.cfg.dt_s, ctx.cfg.pointing_process);

  for (std::uint64_t step = 0; step < ctx.max_steps; ++step) {
    const double t = static_cast<double>(step) * ctx.cfg.dt_s;
    const double sigma_a = ctx.policy_a.width_at(t, phase_a);
    const double sigma_b = ctx.policy_b.width_at(t, phase_b);
    const double dtheta_a = pa.next(rng);
    const double dtheta_b = pb.next(rng);
    const bool ab = directed_snr(ctx.a, ctx.b, ctx.distance_m, sigma_a, dtheta_a) >= ctx.snr_star;
    const bool ba = directed_snr(ctx.b, ctx.a, ctx.distance_m, sigma_b, dtheta_b) >= ctx.snr_star;
    if (ab && ba) return AcquisitionEvent{run_id, t, dtheta_a, sigma_a, dtheta_b, sigma_b};
  }
  return std::nullopt;
}

}  // namespace

McResult run_mc_acquisition(const TerminalSpec& a, const TerminalSpec& b, double distance_m,
                            const Threshold& thr, const ModulationPolicy& policy_a,
                            const ModulationPolicy& policy_b, const McConfig& cfg,
                            unsigned threads) {
  a.validate();
  b.validate();
  policy_a.validate();
  policy_b.validate();
  cfg.validate();
  if (!(distance_m > 0.0)) throw ParameterError("mc distance must be positive");

  const auto max_steps = static_cast<std::uint64_t>(std::floor(cfg.max_time_s / cfg.dt_s)) + 1;
  const RunContext ctx{a, b, distance_m, thr.linear(), policy_a, policy_b, cfg, max_steps};

  std::vector<std::optional<AcquisitionEvent>> outcomes(cfg.runs);
  const auto worker_count =
      static_cast<std::uint64_t>(std::clamp<unsigned>(threads, 1U, 256U));
  const std::uint64_t chunk = (cfg.runs + worker_count - 1) / worker_count;
  std::vector<std::exception_ptr> failures(worker_count);
  auto work = [&](std::uint64_t slot, std::uint64_t begin, std::uint64_t end) {
    try {
      for (std::uint64_t r = begin; r < end; ++r) outcomes[r] = simulate_run(ctx, r);
    } catch (...) {
      failures[slot] = std::current_exception();
    }
  };
  if (worker_count == 1) {
    work(0, 0, cfg.runs);
  } else {
    std::vector<std::jthread> pool;
    std::uint64_t slot = 0;
    for (std::uint64_t begin = 0; begin < cfg.runs; begin += chunk, ++slot) {
      pool.emplace_back(work, slot, begin, std::min(cfg.runs, begin + chunk));
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  McResult result;
  double time_sum = 0.0;
  for (const auto& o : outcomes) {
    if (!o) continue;
    result.events.push_back(*o);
    time_sum += o->time_s;
  }
  result.summary.runs = cfg.runs;
  result.summary.acquisitions = result.events.size();
  result.summary.acq_fraction =
      static_cast<double>(result.summary.acquisitions) / static_cast<double>(cfg.runs);
  if (!result.events.empty()) {
    result.summary.mean_time_s = time_sum / static_cast<double>(result.events.size());
  }
  return result;
}

}  // namespace picolink
