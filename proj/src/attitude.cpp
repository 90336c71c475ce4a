#include "picolink/attitude.hpp"

#include <cmath>
#include <string>

#include "picolink/errors.hpp"
#include "picolink/units.hpp"

namespace picolink {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ParameterError(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

void GyroParams::validate() const {
  if (!(arw >= 0.0) || !std::isfinite(arw)) throw ParameterError("gyro.arw must be >= 0");
  if (!(rrw >= 0.0) || !std::isfinite(rrw)) throw ParameterError("gyro.rrw must be >= 0");
  if (arw == 0.0 && rrw == 0.0) throw ParameterError("gyro.arw and gyro.rrw cannot both be 0");
}

void StarTrackerParams::validate() const {
  require_positive(noise_rad, "star_tracker.noise_rad");
  require_positive(cadence_s, "star_tracker.cadence_s");
}

void MemsThermalParams::validate() const {
  require_positive(temperature_k, "mems.temperature_k");
  require_positive(quality_factor, "mems.quality_factor");
  require_positive(proof_mass_kg, "mems.proof_mass_kg");
  require_positive(drive_amplitude_m, "mems.drive_amplitude_m");
  require_positive(resonant_freq_rad_s, "mems.resonant_freq_rad_s");
  require_positive(angular_gain, "mems.angular_gain");
}

double KalmanSteadyState::knowledge_error_rad() const { return std::sqrt(posterior.aa); }

namespace {

struct Mat2 {
  double m00, m01, m10, m11;
};

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
          x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
  return {x.m00 + y.m00, x.m01 + y.m01, x.m10 + y.m10, x.m11 + y.m11};
}

Mat2 transpose(const Mat2& x) { return {x.m00, x.m10, x.m01, x.m11}; }

Mat2 inverse(const Mat2& x) {
  const double det = x.m00 * x.m11 - x.m01 * x.m10;
  if (!(std::fabs(det) > 0.0) || !std::isfinite(det)) {
    throw NumericalError("attitude covariance doubling hit a singular matrix");
  }
  return {x.m11 / det, -x.m01 / det, -x.m10 / det, x.m00 / det};
}

bool settled(double now, double before, double tol) {
  return std::fabs(now - before) <= tol * std::fabs(now);
}

Covariance2 update(const Covariance2& prior, double r) {
  const double s = prior.aa + r;
  return {prior.aa * r / s, prior.ab * r / s, prior.bb - prior.ab * prior.ab / s};
}

// Structure-preserving doubling on the filter Riccati equation. After pass k
// `h` is the prior covariance 2^k steps on from perfect knowledge.
KalmanSteadyState solve_doubling(double dt, double r, double q_att, double q_bias,
                                 const KalmanOptions& opts) {
  KalmanSteadyState out;
  if (q_bias == 0.0) {
    double a = 1.0, g = 1.0 / r, h = q_att;
    for (std::uint64_t k = 1; k <= opts.max_iterations; ++k) {
      const double w = 1.0 / (1.0 + g * h);
      const double h_next = h + a * a * h * w;
      g += a * a * g * w;
      a = a * a * w;
      const bool done = settled(h_next, h, opts.tolerance);
      h = h_next;
      if (!std::isfinite(h)) break;
      if (done) {
        out.prior = {h, 0.0, 0.0};
        out.posterior = update(out.prior, r);
        out.iterations = k;
        return out;
      }
    }
    throw NumericalError("attitude covariance doubling did not converge");
  }

  const Mat2 eye{1.0, 0.0, 0.0, 1.0};
  Mat2 a{1.0, 0.0, -dt, 1.0};
  Mat2 g{1.0 / r, 0.0, 0.0, 0.0};
  Mat2 h{q_att, 0.0, 0.0, q_bias};
  for (std::uint64_t k = 1; k <= opts.max_iterations; ++k) {
    const Mat2 w = inverse(eye + g * h);
    const Mat2 aw = a * w;
    const Mat2 h_next = h + transpose(a) * h * w * a;
    g = g + aw * g * transpose(a);
    a = aw * a;
    // The attitude variance alone swings through turning points on its way
    // in, so require every entry to have stopped moving.
    const bool done = settled(h_next.m00, h.m00, opts.tolerance) &&
                      settled(h_next.m01, h.m01, opts.tolerance) &&
                      settled(h_next.m11, h.m11, opts.tolerance);
    h = h_next;
    if (!std::isfinite(h.m00) || !std::isfinite(h.m01) || !std::isfinite(h.m11)) break;
    if (done) {
      out.prior = {h.m00, 0.5 * (h.m01 + h.m10), h.m11};
      out.posterior = update(out.prior, r);
      out.iterations = k;
      return out;
    }
  }
  throw NumericalError("attitude covariance doubling did not converge");
}

KalmanSteadyState solve_recursion(double dt, double r, double q_att, double q_bias,
                                  const KalmanOptions& opts) {
  const bool track_bias = q_bias > 0.0;
  Covariance2 post = opts.initial.value_or(Covariance2{r, 0.0, track_bias ? r / (dt * dt) : 0.0});
  if (!track_bias) post.ab = post.bb = 0.0;

  KalmanSteadyState out;
  double previous = post.aa;
  for (std::uint64_t k = 1; k <= opts.max_iterations; ++k) {
    Covariance2 prior;
    prior.aa = post.aa - 2.0 * dt * post.ab + dt * dt * post.bb + q_att;
    prior.ab = post.ab - dt * post.bb;
    prior.bb = post.bb + q_bias;
    post = update(prior, r);

    if (settled(post.aa, previous, opts.tolerance)) {
      out.prior = prior;
      out.posterior = post;
      out.iterations = k;
      return out;
    }
    previous = post.aa;
  }
  throw NumericalError("attitude covariance recursion did not converge");
}

}  // namespace

KalmanSteadyState solve_knowledge_covariance(const GyroParams& gyro,
                                             const StarTrackerParams& tracker,
                                             const KalmanOptions& opts) {
  gyro.validate();
  tracker.validate();
  if (!(opts.tolerance > 0.0)) throw ParameterError("kalman tolerance must be positive");
  const double dt = tracker.cadence_s;
  const double r = tracker.noise_rad * tracker.noise_rad;
  const double q_att = gyro.arw * gyro.arw * dt;
  // Without rate random walk the bias becomes perfectly known in the limit;
  // drop it rather than wait out its 1/k decay.
  const double q_bias = gyro.rrw * gyro.rrw * dt;
  if (opts.method == KalmanMethod::recursion) return solve_recursion(dt, r, q_att, q_bias, opts);
  return solve_doubling(dt, r, q_att, q_bias, opts);
}

double steady_state_knowledge_error(const GyroParams& gyro, const StarTrackerParams& tracker) {
  return solve_knowledge_covariance(gyro, tracker).knowledge_error_rad();
}

std::vector<KnowledgeCell> knowledge_error_grid(std::span<const GyroParams> gyros,
                                                std::span<const StarTrackerParams> trackers) {
  if (gyros.empty() || trackers.empty()) {
    throw ParameterError("knowledge grid needs at least one gyro and one star tracker");
  }
  std::vector<KnowledgeCell> cells;
  cells.reserve(gyros.size() * trackers.size());
  for (const GyroParams& g : gyros) {
    for (const StarTrackerParams& st : trackers) {
      cells.push_back({g, st, steady_state_knowledge_error(g, st)});
    }
  }
  return cells;
}

double mems_thermal_arw(const MemsThermalParams& p) {
  p.validate();
  const double w0 = p.resonant_freq_rad_s;
  return std::sqrt(4.0 * constants::kBoltzmann * p.temperature_k * w0 /
                   (p.proof_mass_kg * p.quality_factor)) /
         (2.0 * p.angular_gain * p.drive_amplitude_m * w0);
}

PointingError combined_pointing_error(double control_rad, double knowledge_rad) {
  PointingError e{control_rad, knowledge_rad};
  e.validate();
  return e;
}

}  // namespace picolink
