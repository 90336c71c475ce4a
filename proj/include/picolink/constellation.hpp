#pragma once

// Concentric circular heliocentric rings of equally spaced terminals, their
// phasing, and learning-curve production cost.

#include <cstdint>
#include <vector>

namespace picolink {

struct ConstellationSpec {
  double a_inner_m = 0.0;
  double a_outer_m = 0.0;
  double spacing_m = 0.0;  // inter-terminal and inter-ring distance
  std::vector<double> phase_offsets_rad;  // per ring, missing entries are 0

  void validate() const;
  [[nodiscard]] double phase_offset(std::size_t ring_index) const;
};

struct Ring {
  std::size_t index = 1;  // 1-based, innermost first
  double semimajor_axis_m = 0.0;
  std::uint64_t count = 0;
  double mean_motion_rad_s = 0.0;

  [[nodiscard]] double period_s() const;
};

struct CostModel {
  double tfu = 1.0;
  double learning_pct = 0.8;  // S as a fraction

  void validate() const;
};

// Smallest n >= 3 with adjacent-terminal chord 2 a sin(pi / n) <= spacing.
[[nodiscard]] std::uint64_t ring_count(double a_m, double spacing_m);

[[nodiscard]] double mean_motion(double a_m);

// Rings a_inner, a_inner + d, ... while a_k <= a_outer.
[[nodiscard]] std::vector<Ring> build_rings(const ConstellationSpec& spec);

[[nodiscard]] std::uint64_t total_terminals_exact(const ConstellationSpec& spec);

enum class ApproxForm {
  Linear,    // (2 pi a_i / d) [m + (d / 2 a_i) m (m + 1)]
  Quadratic  // (2 pi a_i / d) [m + (d / 2 a_i) m^2]
};

// Continuum estimate of the total count with m = (a_f - a_i) / d. Counts
// rings 1..m past the innermost one, so a_f = a_i gives 0.
[[nodiscard]] double total_terminals_approx(double a_i_m, double a_f_m, double spacing_m,
                                            ApproxForm form = ApproxForm::Linear);

// theta_0 + 2 pi i / n + Omega t, reduced to [0, 2 pi).
[[nodiscard]] double terminal_angle(const Ring& ring, std::uint64_t i, double theta0_rad,
                                    double t_s);

// [Delta + 2 pi (i / n_k + j / n_{k+1})] / (Omega_k - Omega_{k+1}), as written.
[[nodiscard]] double alignment_time(const Ring& ring_k, const Ring& ring_k1, double delta_rad,
                                    std::uint64_t i, std::uint64_t j);

// First non-negative time at which the bracket above is aligned, using its
// 2 pi periodicity.
[[nodiscard]] double earliest_alignment_time(const Ring& ring_k, const Ring& ring_k1,
                                             double delta_rad, std::uint64_t i, std::uint64_t j);

struct AlignmentPair {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  double time_s = 0.0;
};

// Minimizes earliest_alignment_time over all index pairs; ties go to the
// lexicographically smallest (i, j).
[[nodiscard]] AlignmentPair min_alignment_pair(const Ring& ring_k, const Ring& ring_k1,
                                               double delta_rad);

// B = 1 - log2(1 / S).
[[nodiscard]] double learning_exponent(double learning_pct);

[[nodiscard]] double relative_cost(double learning_pct, double units);
[[nodiscard]] double production_cost(const CostModel& model, double units);

// Worst-case hops between a terminal on the innermost ring and one on the
// outermost: half-way around each end ring plus one bridge per ring gap.
[[nodiscard]] std::uint64_t max_route_hops(const std::vector<Ring>& rings);

}  // namespace picolink
