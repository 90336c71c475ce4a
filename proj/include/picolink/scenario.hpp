#pragma once

// Batch run definition. Loaded from a JSON document whose sections overlay
// the built-in CubeSat baseline; every key present must be known.
//
// Quantities are either plain numbers in SI units or strings carrying a
// unit suffix, e.g. "1 arcsec", "2 GEO", "1.52 AU", "1.55 um".
// Value lists are JSON arrays or {"from", "to", "points", "spacing"} ranges
// with spacing "log" or "linear".

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "picolink/acquisition.hpp"
#include "picolink/attitude.hpp"
#include "picolink/beam_control.hpp"
#include "picolink/constellation.hpp"

namespace picolink {

enum class Dimension { Dimensionless, Angle, Length, Time, Power, Area, Frequency, Rate };

// Converts a scenario quantity to SI. `path` prefixes error messages.
[[nodiscard]] double parse_quantity(const nlohmann::json& value, Dimension dim,
                                    std::string_view path);

// Where the Monte Carlo modulation centers its beam width.
enum class BeamCenter { Hardware, Optimal, Explicit };

struct ModulationSpec {
  BeamCenter center = BeamCenter::Hardware;
  double sigma0_rad = 0.0;  // only for Explicit
  double amplitude_frac = 0.9;
  std::optional<double> period_s;  // default 200 dt
  std::optional<double> phase_rad;  // default random per run
};

struct LinkSection {
  double distance_m = 0.0;
  double offpoint_rad = 0.0;
  std::vector<double> sweep_distances_m;
  std::vector<double> sweep_offpoints_rad;
};

struct AcquireSection {
  std::vector<double> distances_m;
  std::vector<double> zetas_rad;
  bool optimize_beamwidth = false;
};

struct McSection {
  double distance_m = 0.0;
  McConfig config;
  ModulationSpec modulation_a;
  ModulationSpec modulation_b;
};

struct ConstellationSection {
  ConstellationSpec spec;
  CostModel cost;
  std::vector<double> grid_spacings_m;
  std::vector<double> grid_outer_radii_m;
};

struct AttitudeSection {
  std::vector<GyroParams> gyros;
  std::vector<StarTrackerParams> trackers;
  MemsThermalParams mems;
  std::vector<double> mems_temperatures_k;
  std::vector<double> mems_quality_factors;
};

struct Scenario {
  TerminalSpec terminal_a;
  TerminalSpec terminal_b;
  Threshold threshold = Threshold::from_db(3.0);
  LinkSection link;
  AcquireSection acquire;
  McSection mc;
  ConstellationSection constellation;
  AttitudeSection attitude;

  void validate() const;
};

// Hardware baseline of a CubeSat optical terminal with SNR*_dB = 3.
[[nodiscard]] TerminalSpec baseline_terminal();
[[nodiscard]] Scenario default_scenario();

[[nodiscard]] Scenario parse_scenario(const nlohmann::json& doc);
[[nodiscard]] Scenario parse_scenario_text(std::string_view text);
[[nodiscard]] Scenario load_scenario(const std::filesystem::path& path);

// Resolves a value list section (array or range object).
[[nodiscard]] std::vector<double> parse_value_list(const nlohmann::json& value, Dimension dim,
                                                   std::string_view path);

// The modulation policy a terminal uses for the Monte Carlo run.
[[nodiscard]] ModulationPolicy resolve_modulation(const ModulationSpec& spec, const TerminalSpec& tx,
                                                  const TerminalSpec& rx, double distance_m,
                                                  const Threshold& thr, double dt_s,
                                                  bool force_optimal);

}  // namespace picolink
