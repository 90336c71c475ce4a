#include "picolink/link_budget.hpp"

#include <cmath>
#include <string>

#include "picolink/errors.hpp"
#include "picolink/units.hpp"

namespace picolink {

namespace {

using constants::kPi;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ParameterError(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

void EmitterParams::validate() const {
  require_positive(power_w, "emitter.power_w");
  require_positive(wavelength_m, "emitter.wavelength_m");
  require_positive(waist_m, "emitter.waist_m");
  if (!(wavelength_m < waist_m)) {
    throw ParameterError("emitter.wavelength_m must be smaller than emitter.waist_m");
  }
}

double EmitterParams::divergence() const { return wavelength_m / (2.0 * kPi * waist_m); }

EmitterParams EmitterParams::with_divergence(double sigma_rad) const {
  require_positive(sigma_rad, "beam divergence");
  EmitterParams out = *this;
  out.waist_m = wavelength_m / (2.0 * kPi * sigma_rad);
  return out;
}

void DetectorParams::validate() const {
  require_positive(area_m2, "detector.area_m2");
  require_positive(responsivity_a_per_w, "detector.responsivity_a_per_w");
  require_positive(bandwidth_hz, "detector.bandwidth_hz");
  if (!(excess_noise >= 1.0)) throw ParameterError("detector.excess_noise must be >= 1");
  if (!(apd_gain >= 1.0)) throw ParameterError("detector.apd_gain must be >= 1");
  if (qe && !(*qe > 0.0 && *qe <= 1.0)) throw ParameterError("detector.qe must lie in (0, 1]");
  if (noise_electron_rate) require_positive(*noise_electron_rate, "detector.noise_electron_rate");
}

void require_snr_model(const DetectorParams& det, SnrModel model) {
  if (model == SnrModel::PhotoelectronCount && (!det.qe || !det.noise_electron_rate)) {
    throw ParameterError(
        "photoelectron SNR model requires detector.qe and detector.noise_electron_rate");
  }
}

void LinkState::validate() const {
  require_positive(distance_m, "link.distance_m");
  if (!(offpoint_rad >= 0.0) || !std::isfinite(offpoint_rad)) {
    throw ParameterError("link.offpoint_rad must be finite and >= 0");
  }
}

double to_db(double linear) { return 10.0 * std::log10(linear); }
double from_db(double db) { return std::pow(10.0, db / 10.0); }

double LinkBudget::space_loss_db() const { return to_db(space_loss); }
double LinkBudget::tx_gain_db() const { return to_db(tx_gain); }
double LinkBudget::rx_gain_db() const { return to_db(rx_gain); }
double LinkBudget::pointing_loss_db() const { return to_db(pointing_loss); }
double LinkBudget::received_power_dbw() const { return to_db(received_power_w); }

double diffraction_sigma(const EmitterParams& e) {
  e.validate();
  return e.divergence();
}

double space_loss(double wavelength_m, double distance_m) {
  require_positive(wavelength_m, "wavelength_m");
  require_positive(distance_m, "distance_m");
  return wavelength_m * wavelength_m / (4.0 * kPi * distance_m * distance_m);
}

double tx_gain(const EmitterParams& e) {
  e.validate();
  return kPi * kPi * e.waist_m * e.waist_m / (e.wavelength_m * e.wavelength_m);
}

double rx_gain(const DetectorParams& det, double wavelength_m) {
  det.validate();
  require_positive(wavelength_m, "wavelength_m");
  return 4.0 * det.area_m2 / (wavelength_m * wavelength_m);
}

double pointing_loss(double offpoint_rad, double sigma_rad) {
  require_positive(sigma_rad, "beam divergence");
  if (!std::isfinite(offpoint_rad)) throw ParameterError("offpoint must be finite");
  return std::exp(-(offpoint_rad * offpoint_rad) / (2.0 * sigma_rad * sigma_rad));
}

LinkBudget received_power(const EmitterParams& e, const DetectorParams& det,
                          const LinkState& link) {
  e.validate();
  det.validate();
  link.validate();
  if (!(link.distance_m > 100.0 * e.waist_m)) {
    throw ParameterError("link.distance_m must exceed 100 beam waists (far field)");
  }
  LinkBudget b;
  b.space_loss = space_loss(e.wavelength_m, link.distance_m);
  b.tx_gain = tx_gain(e);
  b.rx_gain = rx_gain(det, e.wavelength_m);
  b.pointing_loss = pointing_loss(link.offpoint_rad, e.divergence());
  b.received_power_w = e.power_w * b.space_loss * b.tx_gain * b.rx_gain * b.pointing_loss;
  return b;
}

double snr_from_power(double received_power_w, const DetectorParams& det, SnrModel model) {
  require_snr_model(det, model);
  switch (model) {
    case SnrModel::ApdElectrical:
      return received_power_w * det.responsivity_a_per_w /
             (2.0 * constants::kElementaryCharge * det.bandwidth_hz * det.excess_noise);
    case SnrModel::PhotoelectronCount:
      return received_power_w * *det.qe / *det.noise_electron_rate;
  }
  throw ParameterError("unknown SNR model");
}

double snr(const EmitterParams& e, const DetectorParams& det, const LinkState& link,
           SnrModel model) {
  require_snr_model(det, model);
  return snr_from_power(received_power(e, det, link).received_power_w, det, model);
}

double snr_tilde(const EmitterParams& e, const DetectorParams& det, double distance_m,
                 SnrModel model) {
  return snr(e, det, LinkState{distance_m, 0.0}, model);
}

}  // namespace picolink
