#include "picolink/acquisition.hpp"

#include <algorithm>
#include <cmath>

#include "picolink/errors.hpp"

namespace picolink {

double PointingError::combined() const { return std::hypot(control_rad, knowledge_rad); }

void PointingError::validate() const {
  if (!(control_rad >= 0.0) || !std::isfinite(control_rad)) {
    throw ParameterError("pointing.control_rad must be finite and >= 0");
  }
  if (!(knowledge_rad >= 0.0) || !std::isfinite(knowledge_rad)) {
    throw ParameterError("pointing.knowledge_rad must be finite and >= 0");
  }
}

Threshold Threshold::from_linear(double snr_star) {
  if (!(snr_star > 0.0)) throw ParameterError("threshold SNR* must be positive");
  return Threshold(snr_star, to_db(snr_star));
}

Threshold Threshold::from_db(double snr_star_db) {
  if (!std::isfinite(snr_star_db)) throw ParameterError("threshold SNR*_dB must be finite");
  const Threshold t = from_linear(picolink::from_db(snr_star_db));
  return Threshold(t.snr_star_, snr_star_db);
}

void TerminalSpec::validate() const {
  emitter.validate();
  detector.validate();
  pointing.validate();
  require_snr_model(detector, snr_model);
}

double sigma_ratio(const TerminalSpec& tx, const TerminalSpec& rx, double distance_m,
                   const Threshold& thr) {
  return snr_tilde(tx.emitter, rx.detector, distance_m, rx.snr_model) / thr.linear();
}

std::optional<double> max_offpoint(double sigma_rad, double ratio) {
  if (!(sigma_rad > 0.0)) throw ParameterError("beam divergence must be positive");
  if (!(ratio > 0.0)) throw ParameterError("Sigma must be positive");
  if (ratio < 1.0) return std::nullopt;
  return std::sqrt(2.0 * sigma_rad * sigma_rad * std::log(ratio));
}

double single_acq_prob(double sigma_rad, double zeta_rad, double ratio) {
  if (!(sigma_rad > 0.0)) throw ParameterError("beam divergence must be positive");
  if (!(zeta_rad > 0.0)) {
    throw ParameterError("pointing error zeta must be positive (degenerate distribution)");
  }
  if (!(ratio > 0.0)) throw ParameterError("Sigma must be positive");
  if (ratio <= 1.0) return 0.0;
  // erf rounds to 1.0 once its argument passes ~5.9; keep P < 1 strictly.
  const double p = picolink::erf(sigma_rad / zeta_rad * std::sqrt(std::log(ratio)));
  return std::min(p, std::nextafter(1.0, 0.0));
}

double directed_acq_prob(const TerminalSpec& tx, const TerminalSpec& rx, double distance_m,
                         const Threshold& thr) {
  tx.validate();
  rx.validate();
  return single_acq_prob(tx.emitter.divergence(), tx.pointing.combined(),
                         sigma_ratio(tx, rx, distance_m, thr));
}

double mutual_acq_prob(const TerminalSpec& a, const TerminalSpec& b, double distance_m,
                       const Threshold& thr) {
  return directed_acq_prob(a, b, distance_m, thr) * directed_acq_prob(b, a, distance_m, thr);
}

double erf(double x) { return std::erf(x); }

}  // namespace picolink
