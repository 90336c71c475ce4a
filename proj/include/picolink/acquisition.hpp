#pragma once

// Closed-form mutual acquisition probability for two Gaussian-beam
// terminals with Gaussian-distributed off-pointing.

#include <optional>

#include "picolink/link_budget.hpp"

namespace picolink {

// 1-sigma pointing error, control and knowledge parts added in quadrature.
struct PointingError {
  double control_rad = 0.0;
  double knowledge_rad = 0.0;

  [[nodiscard]] double combined() const;
  void validate() const;

  // A pointing error known only as a total 1-sigma value.
  static PointingError total(double zeta_rad) { return {zeta_rad, 0.0}; }
};

// Detection floor SNR*, stored linear.
class Threshold {
 public:
  static Threshold from_linear(double snr_star);
  static Threshold from_db(double snr_star_db);

  [[nodiscard]] double linear() const { return snr_star_; }
  [[nodiscard]] double db() const { return snr_star_db_; }

 private:
  Threshold(double snr_star, double snr_star_db) : snr_star_(snr_star), snr_star_db_(snr_star_db) {}
  double snr_star_;
  double snr_star_db_;
};

struct TerminalSpec {
  EmitterParams emitter;
  DetectorParams detector;
  PointingError pointing;
  SnrModel snr_model = SnrModel::ApdElectrical;

  void validate() const;
};

// On-axis SNR of the link tx -> rx over the detection floor. Uses the
// transmitter's beam and the receiver's detector and SNR model.
[[nodiscard]] double sigma_ratio(const TerminalSpec& tx, const TerminalSpec& rx, double distance_m,
                                 const Threshold& thr);

// Largest off-pointing at which SNR >= SNR*: sqrt(2 sigma^2 ln Sigma).
// std::nullopt means the link never closes (Sigma < 1), even on axis.
[[nodiscard]] std::optional<double> max_offpoint(double sigma_rad, double sigma_ratio);

// Probability that a zero-mean Gaussian off-pointing of std `zeta_rad`
// falls inside +-max_offpoint. Zero when Sigma <= 1. zeta must be > 0.
[[nodiscard]] double single_acq_prob(double sigma_rad, double zeta_rad, double sigma_ratio);

// single_acq_prob for the directed link tx -> rx, using tx's beam width
// and tx's pointing error.
[[nodiscard]] double directed_acq_prob(const TerminalSpec& tx, const TerminalSpec& rx,
                                       double distance_m, const Threshold& thr);

// Product of the two directed probabilities (independent pointing).
[[nodiscard]] double mutual_acq_prob(const TerminalSpec& a, const TerminalSpec& b,
                                     double distance_m, const Threshold& thr);

[[nodiscard]] double erf(double x);

}  // namespace picolink
