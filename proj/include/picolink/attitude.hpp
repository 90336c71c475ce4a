#pragma once

// Single-axis attitude knowledge error from gyro + star tracker fusion,
// and the thermomechanical noise floor of a MEMS gyro.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "picolink/acquisition.hpp"

namespace picolink {

struct GyroParams {
  double arw = 0.0;  // angle random walk, rad / sqrt(s)
  double rrw = 0.0;  // rate random walk, rad / s^(3/2)

  void validate() const;
};

struct StarTrackerParams {
  double noise_rad = 0.0;  // 1-sigma per measurement
  double cadence_s = 1.0;

  void validate() const;
};

struct MemsThermalParams {
  double temperature_k = 300.0;
  double quality_factor = 1.0;
  double proof_mass_kg = 0.0;
  double drive_amplitude_m = 0.0;
  double resonant_freq_rad_s = 0.0;
  double angular_gain = 1.0;

  void validate() const;
};

// Symmetric 2x2 covariance of (attitude, gyro bias).
struct Covariance2 {
  double aa = 0.0;
  double ab = 0.0;
  double bb = 0.0;
};

enum class KalmanMethod {
  doubling,   // squares the covariance transition each pass; stops on the whole prior
  recursion,  // one filter step per pass; stops on the post-update attitude variance
};

struct KalmanOptions {
  KalmanMethod method = KalmanMethod::doubling;
  std::optional<Covariance2> initial;  // recursion only; default diag(R, R / dt^2)
  double tolerance = 1e-12;            // relative change between passes
  std::uint64_t max_iterations = 1'000'000;
};

struct KalmanSteadyState {
  Covariance2 prior;      // after propagation
  Covariance2 posterior;  // after the star-tracker update
  std::uint64_t iterations = 0;  // passes, doublings or filter steps

  [[nodiscard]] double knowledge_error_rad() const;
};

// Steady-state covariance of the attitude/bias filter updated at the
// star-tracker cadence. Throws NumericalError if it does not settle.
[[nodiscard]] KalmanSteadyState solve_knowledge_covariance(const GyroParams& gyro,
                                                           const StarTrackerParams& tracker,
                                                           const KalmanOptions& opts = {});

// sqrt of the steady-state post-update attitude variance.
[[nodiscard]] double steady_state_knowledge_error(const GyroParams& gyro,
                                                  const StarTrackerParams& tracker);

struct KnowledgeCell {
  GyroParams gyro;
  StarTrackerParams tracker;
  double zeta_kno_rad;
};

// Row-major over gyros, then trackers.
[[nodiscard]] std::vector<KnowledgeCell> knowledge_error_grid(
    std::span<const GyroParams> gyros, std::span<const StarTrackerParams> trackers);

// Thermomechanical rate noise density, rad/s/sqrt(Hz):
// sqrt(4 kB T w0 / (m Q)) / (2 kappa x w0).
[[nodiscard]] double mems_thermal_arw(const MemsThermalParams& p);

[[nodiscard]] PointingError combined_pointing_error(double control_rad, double knowledge_rad);

}  // namespace picolink
