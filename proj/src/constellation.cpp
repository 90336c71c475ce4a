#include "picolink/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "picolink/errors.hpp"
#include "picolink/units.hpp"

namespace picolink {

using constants::kPi;

namespace {

constexpr double kTwoPi = 2.0 * kPi;

// Guards ceil/floor against representation error in values that are
// integers in exact arithmetic.
constexpr double kIntegerSlack = 1e-9;

double reduce_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double omega_gap(const Ring& ring_k, const Ring& ring_k1) {
  const double gap = ring_k.mean_motion_rad_s - ring_k1.mean_motion_rad_s;
  if (gap == 0.0) throw ParameterError("rings have equal mean motion; they never realign");
  return gap;
}

// Fraction of a turn in [0, 1) covered by Delta + 2 pi (i / n_k + j / n_k1).
// The index part is reduced in integers so equal pairs give equal bits.
double bracket_turns(const Ring& ring_k, const Ring& ring_k1, double delta_rad,
                     std::uint64_t i, std::uint64_t j) {
  const std::uint64_t nk = ring_k.count;
  const std::uint64_t nk1 = ring_k1.count;
  const std::uint64_t den = nk * nk1;
  const std::uint64_t num = (i * nk1 + j * nk) % den;
  double f = reduce_angle(delta_rad) / kTwoPi + static_cast<double>(num) / static_cast<double>(den);
  if (f >= 1.0) f -= 1.0;
  return f;
}

void check_index(const Ring& ring, std::uint64_t i) {
  if (i >= ring.count) throw ParameterError("terminal index out of range for ring");
}

}  // namespace

void ConstellationSpec::validate() const {
  if (!(a_inner_m > 0.0) || !std::isfinite(a_inner_m)) {
    throw ParameterError("constellation.a_inner must be positive");
  }
  if (!(a_outer_m >= a_inner_m) || !std::isfinite(a_outer_m)) {
    throw ParameterError("constellation.a_outer must be >= constellation.a_inner");
  }
  if (!(spacing_m > 0.0 && spacing_m < 2.0 * a_inner_m)) {
    throw ParameterError("constellation.spacing must lie in (0, 2 a_inner)");
  }
  for (double p : phase_offsets_rad) {
    if (!std::isfinite(p)) throw ParameterError("constellation.phase_offsets must be finite");
  }
}

double ConstellationSpec::phase_offset(std::size_t ring_index) const {
  if (ring_index == 0 || ring_index > phase_offsets_rad.size()) return 0.0;
  return phase_offsets_rad[ring_index - 1];
}

double Ring::period_s() const { return kTwoPi / mean_motion_rad_s; }

void CostModel::validate() const {
  if (!(tfu > 0.0) || !std::isfinite(tfu)) throw ParameterError("cost.tfu must be positive");
  if (!(learning_pct > 0.5 && learning_pct <= 1.0)) {
    throw ParameterError("cost.learning_pct must lie in (0.5, 1]");
  }
}

std::uint64_t ring_count(double a_m, double spacing_m) {
  if (!(a_m > 0.0)) throw ParameterError("ring semimajor axis must be positive");
  if (!(spacing_m > 0.0 && spacing_m < 2.0 * a_m)) {
    throw ParameterError("terminal spacing must lie in (0, 2a)");
  }
  const double x = kPi / std::asin(spacing_m / (2.0 * a_m));
  const auto n = static_cast<std::uint64_t>(std::ceil(x * (1.0 - kIntegerSlack)));
  return std::max<std::uint64_t>(n, 3);
}

double mean_motion(double a_m) {
  if (!(a_m > 0.0)) throw ParameterError("semimajor axis must be positive");
  return std::sqrt(constants::kGmSun / (a_m * a_m * a_m));
}

std::vector<Ring> build_rings(const ConstellationSpec& spec) {
  spec.validate();
  const double span = (spec.a_outer_m - spec.a_inner_m) / spec.spacing_m;
  const auto extra = static_cast<std::uint64_t>(std::floor(span * (1.0 + kIntegerSlack) + kIntegerSlack));
  std::vector<Ring> rings;
  rings.reserve(extra + 1);
  for (std::uint64_t k = 0; k <= extra; ++k) {
    Ring r;
    r.index = k + 1;
    r.semimajor_axis_m = spec.a_inner_m + static_cast<double>(k) * spec.spacing_m;
    r.count = ring_count(r.semimajor_axis_m, spec.spacing_m);
    r.mean_motion_rad_s = mean_motion(r.semimajor_axis_m);
    rings.push_back(r);
  }
  return rings;
}

std::uint64_t total_terminals_exact(const ConstellationSpec& spec) {
  std::uint64_t total = 0;
  for (const Ring& r : build_rings(spec)) total += r.count;
  return total;
}

double total_terminals_approx(double a_i_m, double a_f_m, double spacing_m, ApproxForm form) {
  if (!(a_i_m > 0.0) || !(a_f_m >= a_i_m)) throw ParameterError("require 0 < a_i <= a_f");
  if (!(spacing_m > 0.0 && spacing_m < 2.0 * a_i_m)) {
    throw ParameterError("spacing must lie in (0, 2 a_i)");
  }
  const double m = (a_f_m - a_i_m) / spacing_m;
  const double growth = form == ApproxForm::Linear ? m * (m + 1.0) : m * m;
  return (kTwoPi * a_i_m / spacing_m) * (m + spacing_m / (2.0 * a_i_m) * growth);
}

double terminal_angle(const Ring& ring, std::uint64_t i, double theta0_rad, double t_s) {
  check_index(ring, i);
  return reduce_angle(theta0_rad + kTwoPi * static_cast<double>(i) / static_cast<double>(ring.count) +
                      ring.mean_motion_rad_s * t_s);
}

double alignment_time(const Ring& ring_k, const Ring& ring_k1, double delta_rad, std::uint64_t i,
                      std::uint64_t j) {
  check_index(ring_k, i);
  check_index(ring_k1, j);
  const double gap = omega_gap(ring_k, ring_k1);
  const double bracket =
      delta_rad + kTwoPi * (static_cast<double>(i) / static_cast<double>(ring_k.count) +
                            static_cast<double>(j) / static_cast<double>(ring_k1.count));
  return bracket / gap;
}

double earliest_alignment_time(const Ring& ring_k, const Ring& ring_k1, double delta_rad,
                               std::uint64_t i, std::uint64_t j) {
  check_index(ring_k, i);
  check_index(ring_k1, j);
  const double gap = omega_gap(ring_k, ring_k1);
  double f = bracket_turns(ring_k, ring_k1, delta_rad, i, j);
  // A slower inner ring runs the bracket backwards.
  if (gap < 0.0 && f > 0.0) f = 1.0 - f;
  return kTwoPi * f / std::fabs(gap);
}

AlignmentPair min_alignment_pair(const Ring& ring_k, const Ring& ring_k1, double delta_rad) {
  AlignmentPair best{0, 0, std::numeric_limits<double>::infinity()};
  for (std::uint64_t i = 0; i < ring_k.count; ++i) {
    for (std::uint64_t j = 0; j < ring_k1.count; ++j) {
      const double t = earliest_alignment_time(ring_k, ring_k1, delta_rad, i, j);
      if (t < best.time_s) best = {i, j, t};
    }
  }
  return best;
}

double learning_exponent(double learning_pct) {
  if (!(learning_pct > 0.5 && learning_pct <= 1.0)) {
    throw ParameterError("learning_pct must lie in (0.5, 1]");
  }
  return 1.0 - std::log2(1.0 / learning_pct);
}

double relative_cost(double learning_pct, double units) {
  if (!(units >= 1.0)) throw ParameterError("unit count must be >= 1");
  return std::pow(units, learning_exponent(learning_pct));
}

double production_cost(const CostModel& model, double units) {
  model.validate();
  return model.tfu * relative_cost(model.learning_pct, units);
}

std::uint64_t max_route_hops(const std::vector<Ring>& rings) {
  if (rings.empty()) return 0;
  return rings.front().count / 2 + (rings.size() - 1) + rings.back().count / 2;
}

}  // namespace picolink
