#pragma once

// Gaussian-beam optical link budget: the four multiplicative factors
// (space loss, Tx gain, Rx gain, pointing loss), received power, and the
// two detector SNR models. All quantities SI.

#include <optional>

namespace picolink {

struct EmitterParams {
  double power_w = 0.0;       // P0
  double wavelength_m = 0.0;  // lambda
  double waist_m = 0.0;       // w0, beam radius at the aperture

  void validate() const;

  // Far-field angular spreading lambda / (2 pi w0).
  [[nodiscard]] double divergence() const;

  // Same laser refocused so that its far-field spreading is `sigma_rad`.
  // Equivalent to changing the effective waist to lambda / (2 pi sigma).
  [[nodiscard]] EmitterParams with_divergence(double sigma_rad) const;
};

struct DetectorParams {
  double area_m2 = 0.0;
  double apd_gain = 1.0;
  double responsivity_a_per_w = 0.0;
  double excess_noise = 1.0;
  double bandwidth_hz = 0.0;
  std::optional<double> qe;
  std::optional<double> noise_electron_rate;  // electrons / s

  void validate() const;
};

enum class SnrModel {
  ApdElectrical,      // P_Rx R_PD / (2 q B F_EN)
  PhotoelectronCount  // P_Rx QE / n_e
};

// Throws ParameterError when `model` needs detector fields that are absent.
void require_snr_model(const DetectorParams& det, SnrModel model);

struct LinkState {
  double distance_m = 0.0;
  double offpoint_rad = 0.0;

  void validate() const;
};

struct LinkBudget {
  double space_loss = 0.0;
  double tx_gain = 0.0;
  double rx_gain = 0.0;
  double pointing_loss = 0.0;
  double received_power_w = 0.0;

  [[nodiscard]] double space_loss_db() const;
  [[nodiscard]] double tx_gain_db() const;
  [[nodiscard]] double rx_gain_db() const;
  [[nodiscard]] double pointing_loss_db() const;
  [[nodiscard]] double received_power_dbw() const;
};

[[nodiscard]] double to_db(double linear);
[[nodiscard]] double from_db(double db);

[[nodiscard]] double diffraction_sigma(const EmitterParams& e);
[[nodiscard]] double space_loss(double wavelength_m, double distance_m);
[[nodiscard]] double tx_gain(const EmitterParams& e);
[[nodiscard]] double rx_gain(const DetectorParams& det, double wavelength_m);
[[nodiscard]] double pointing_loss(double offpoint_rad, double sigma_rad);

// Full budget for emitter `e` illuminating detector `det` across `link`.
// Requires the far-field regime, distance > 100 w0.
[[nodiscard]] LinkBudget received_power(const EmitterParams& e, const DetectorParams& det,
                                        const LinkState& link);

// SNR for a given received optical power.
[[nodiscard]] double snr_from_power(double received_power_w, const DetectorParams& det,
                                    SnrModel model);

[[nodiscard]] double snr(const EmitterParams& e, const DetectorParams& det, const LinkState& link,
                         SnrModel model);

// SNR with the pointing loss removed (on-axis).
[[nodiscard]] double snr_tilde(const EmitterParams& e, const DetectorParams& det,
                               double distance_m, SnrModel model);

}  // namespace picolink
