#pragma once

// Beam-width optimization and the Monte Carlo mutual-acquisition simulator.

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "picolink/acquisition.hpp"

namespace picolink {

// Beam width that maximizes the directed acquisition probability tx -> rx:
// the width at which Sigma = e. Independent of the pointing error.
[[nodiscard]] double optimal_sigma_acquisition(const TerminalSpec& tx, const TerminalSpec& rx,
                                               double distance_m, const Threshold& thr);

// Beam width maximizing on-detector flux at a known off-pointing.
[[nodiscard]] double optimal_defocus_active(double offpoint_rad);

// exp(-dtheta^2 / (2 sigma^2)) / sigma^2: received flux versus beam width at
// fixed off-pointing, up to a constant.
[[nodiscard]] double defocus_flux_factor(double sigma_rad, double offpoint_rad);

// Mutual acquisition probability with each terminal's beam set to its
// directed optimum.
[[nodiscard]] double mutual_acq_prob_optimized(const TerminalSpec& a, const TerminalSpec& b,
                                               double distance_m, const Threshold& thr);

struct SweepCell {
  double distance_m;
  double zeta_rad;
  double p_ij;
};

// P_ij over distances x zetas, row-major in distance. Each zeta replaces the
// combined pointing error of both terminals. With `optimize` each cell uses
// the optimal beam widths instead of the hardware divergence.
[[nodiscard]] std::vector<SweepCell> acquisition_probability_sweep(
    const TerminalSpec& a, const TerminalSpec& b, std::span<const double> distances_m,
    std::span<const double> zetas_rad, const Threshold& thr, bool optimize);

// sigma(t) = sigma0 (1 + A sin(2 pi t / T + phi)). Without a fixed phase the
// simulator draws one per run per terminal.
struct ModulationPolicy {
  double sigma0_rad = 0.0;
  double amplitude_frac = 0.9;
  double period_s = 200.0;
  std::optional<double> phase_rad;

  void validate() const;
  [[nodiscard]] double width_at(double t_s, double phase_rad) const;
};

struct IidGaussian {};
struct OrnsteinUhlenbeck {
  double correlation_time_s = 0.0;
};
using PointingProcess = std::variant<IidGaussian, OrnsteinUhlenbeck>;

struct McConfig {
  std::uint64_t runs = 3000;
  double dt_s = 1.0;
  double max_time_s = 10000.0;
  std::uint64_t seed = 1;
  PointingProcess pointing_process = IidGaussian{};

  void validate() const;
};

struct AcquisitionEvent {
  std::uint64_t run_id = 0;
  double time_s = 0.0;
  double dtheta_a_rad = 0.0;
  double sigma_a_rad = 0.0;
  double dtheta_b_rad = 0.0;
  double sigma_b_rad = 0.0;

  friend bool operator==(const AcquisitionEvent&, const AcquisitionEvent&) = default;
};

struct McSummary {
  std::uint64_t runs = 0;
  std::uint64_t acquisitions = 0;
  double acq_fraction = 0.0;
  std::optional<double> mean_time_s;  // over acquired runs only
};

struct McResult {
  std::vector<AcquisitionEvent> events;  // ordered by run_id
  McSummary summary;
};

// Both directed links a -> b and b -> a must meet SNR* at the same step.
// Output is identical for any `threads` value.
[[nodiscard]] McResult run_mc_acquisition(const TerminalSpec& a, const TerminalSpec& b,
                                          double distance_m, const Threshold& thr,
                                          const ModulationPolicy& policy_a,
                                          const ModulationPolicy& policy_b, const McConfig& cfg,
                                          unsigned threads = 1);

// SNR of tx -> rx with tx's beam set to `sigma_rad` and off-pointed by
// `offpoint_rad`.
[[nodiscard]] double directed_snr(const TerminalSpec& tx, const TerminalSpec& rx,
                                  double distance_m, double sigma_rad, double offpoint_rad);

}  // namespace picolink
