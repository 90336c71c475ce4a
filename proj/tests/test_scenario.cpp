#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "picolink/errors.hpp"
#include "picolink/scenario.hpp"
#include "support/oracles.hpp"

using namespace picolink;
using nlohmann::json;

namespace {

std::string error_of(const std::string& text) {
  try {
    (void)parse_scenario_text(text);
  } catch (const ParameterError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("quantities with units") {
  CHECK(parse_quantity(json(1.5), Dimension::Length, "x") == 1.5);
  CHECK(parse_quantity(json("2 GEO"), Dimension::Length, "x") == 2.0 * oracle::kGeo);
  CHECK(parse_quantity(json("1 arcsec"), Dimension::Angle, "x") == doctest::Approx(oracle::kArcsec));
  CHECK(parse_quantity(json("1.55 um"), Dimension::Length, "x") == doctest::Approx(1.55e-6));
  CHECK(parse_quantity(json("1 AU"), Dimension::Length, "x") == 1.495978707e11);
  CHECK(parse_quantity(json("300 MHz"), Dimension::Frequency, "x") == doctest::Approx(3e8));
  CHECK(parse_quantity(json("25 cm2"), Dimension::Area, "x") == doctest::Approx(2.5e-3));
  CHECK(parse_quantity(json("  3   s "), Dimension::Time, "x") == 3.0);
  CHECK_THROWS_WITH_AS((void)parse_quantity(json("1 AU"), Dimension::Angle, "a.b"),
                       doctest::Contains("a.b: unit \"AU\""), ParameterError);
  CHECK_THROWS_AS((void)parse_quantity(json("fast"), Dimension::Time, "x"), ParameterError);
  CHECK_THROWS_AS((void)parse_quantity(json(true), Dimension::Time, "x"), ParameterError);
}

TEST_CASE("value lists") {
  const auto a = parse_value_list(json::parse(R"(["1 s", 2])"), Dimension::Time, "x");
  CHECK(a == std::vector<double>{1.0, 2.0});
  const auto lg = parse_value_list(json::parse(R"({"from": 1, "to": 100, "points": 3})"),
                                   Dimension::Dimensionless, "x");
  REQUIRE(lg.size() == 3);
  CHECK(lg[1] == doctest::Approx(10.0));
  CHECK(lg[2] == 100.0);
  const auto li = parse_value_list(
      json::parse(R"({"from": 0, "to": 1, "points": 5, "spacing": "linear"})"),
      Dimension::Dimensionless, "x");
  CHECK(li[2] == 0.5);
  CHECK_THROWS_WITH_AS((void)parse_value_list(json::array(), Dimension::Time, "r"),
                       doctest::Contains("range is empty"), ParameterError);
  CHECK_THROWS_WITH_AS(
      (void)parse_value_list(json::parse(R"({"from": 1, "to": 2, "points": 0})"),
                             Dimension::Time, "r"),
      doctest::Contains("range is empty"), ParameterError);
  CHECK_THROWS_AS((void)parse_value_list(json::parse(R"({"from": 0, "to": 2, "points": 3})"),
                                         Dimension::Time, "r"),
                  ParameterError);
}

TEST_CASE("empty document gives the baseline") {
  const Scenario s = parse_scenario_text("{}");
  const Scenario d = default_scenario();
  CHECK(s.terminal_a.emitter.power_w == 2.02);
  CHECK(s.threshold.db() == 3.0);
  CHECK(s.mc.config.runs == 3000);
  CHECK(s.link.distance_m == d.link.distance_m);
  CHECK(s.acquire.zetas_rad == d.acquire.zetas_rad);
}

TEST_CASE("shipped scenario equals the built-in default") {
  const Scenario f = load_scenario(PICOLINK_SOURCE_DIR "/scenarios/baseline.json");
  const Scenario d = default_scenario();
  CHECK(f.terminal_a.emitter.wavelength_m == doctest::Approx(d.terminal_a.emitter.wavelength_m));
  CHECK(f.terminal_b.detector.area_m2 == doctest::Approx(d.terminal_b.detector.area_m2));
  CHECK(f.terminal_a.pointing.combined() == doctest::Approx(d.terminal_a.pointing.combined()));
  CHECK(f.link.sweep_distances_m.size() == d.link.sweep_distances_m.size());
  for (std::size_t k = 0; k < d.acquire.zetas_rad.size(); ++k)
    CHECK(f.acquire.zetas_rad[k] == doctest::Approx(d.acquire.zetas_rad[k]));
  CHECK(f.mc.config.max_time_s == d.mc.config.max_time_s);
  CHECK(*f.mc.modulation_a.period_s == 200.0);
  CHECK(f.constellation.spec.a_outer_m == doctest::Approx(d.constellation.spec.a_outer_m));
  CHECK(f.attitude.gyros.size() == d.attitude.gyros.size());
  CHECK(f.attitude.mems.drive_amplitude_m == doctest::Approx(d.attitude.mems.drive_amplitude_m));
  CHECK(f.attitude.mems_quality_factors.size() == 9);
}

TEST_CASE("unknown keys are rejected with their path") {
  CHECK(contains(error_of(R"({"bogus": 1})"), "bogus: unknown key"));
  CHECK(contains(error_of(R"({"terminals": {"a": {"emitter": {"powr": 1}}}})"),
                 "terminals.a.emitter.powr: unknown key"));
  CHECK(contains(error_of(R"({"mc": {"modulation": {"amp": 0.2}}})"),
                 "mc.modulation.amp: unknown key"));
  CHECK(contains(error_of(R"({"attitude": {"gyros": [{"arw": 1e-6, "x": 1}]}})"),
                 "attitude.gyros[0].x: unknown key"));
}

TEST_CASE("module invariants are checked at load with field paths") {
  CHECK(contains(error_of(R"({"terminals": {"a": {"emitter": {"power": -1}}}})"),
                 "terminals.a.emitter"));
  CHECK(contains(error_of(R"({"mc": {"runs": 0}})"), "mc.runs"));
  CHECK(contains(error_of(R"({"mc": {"runs": -3}})"), "mc.runs"));
  CHECK(contains(error_of(R"({"constellation": {"spacing": "3 AU"}})"), "constellation"));
  CHECK(contains(error_of(R"({"constellation": {"cost": {"learning_pct": 0.4}}})"),
                 "constellation.cost"));
  CHECK(contains(error_of(R"({"terminals": {"a": {"snr_model": "photoelectron_count"}}})"),
                 "terminals.a"));
  CHECK(contains(error_of(R"({"acquire": {"zetas": []}})"), "acquire.zetas"));
  CHECK(contains(error_of(R"({"link": {"sweep": {"distances": []}}})"), "range is empty"));
  CHECK(contains(error_of("{not json"), "malformed JSON"));
  CHECK_THROWS_AS((void)load_scenario("/nonexistent/file.json"), ParameterError);
}

TEST_CASE("terminal b defaults to terminal a and can be overridden") {
  const Scenario s = parse_scenario_text(R"({
    "terminals": {"a": {"emitter": {"power": "1 W"}},
                  "b": {"pointing": {"knowledge": "2 arcsec"}}}})");
  CHECK(s.terminal_a.emitter.power_w == 1.0);
  CHECK(s.terminal_b.emitter.power_w == 1.0);
  CHECK(s.terminal_a.pointing.knowledge_rad == doctest::Approx(oracle::kArcsec));
  CHECK(s.terminal_b.pointing.knowledge_rad == doctest::Approx(2.0 * oracle::kArcsec));
}

TEST_CASE("mc section") {
  const Scenario s = parse_scenario_text(R"({"mc": {
    "pointing_process": {"kind": "ornstein_uhlenbeck", "correlation_time": "30 s"},
    "modulation": {"sigma0": "optimal", "amplitude_frac": 0.5, "phase": "90 deg"},
    "modulation_b": {"sigma0": "3 urad"}}})");
  REQUIRE(std::holds_alternative<OrnsteinUhlenbeck>(s.mc.config.pointing_process));
  CHECK(std::get<OrnsteinUhlenbeck>(s.mc.config.pointing_process).correlation_time_s == 30.0);
  CHECK(s.mc.modulation_a.center == BeamCenter::Optimal);
  CHECK(*s.mc.modulation_a.phase_rad == doctest::Approx(M_PI / 2));
  CHECK(s.mc.modulation_b.center == BeamCenter::Explicit);
  CHECK(s.mc.modulation_b.sigma0_rad == doctest::Approx(3e-6));

  const ModulationPolicy p = resolve_modulation(s.mc.modulation_b, s.terminal_b, s.terminal_a,
                                                s.mc.distance_m, s.threshold, 2.0, false);
  CHECK(p.sigma0_rad == doctest::Approx(3e-6));
  CHECK(p.period_s == 400.0);
  CHECK(p.amplitude_frac == 0.5);
  const ModulationPolicy forced = resolve_modulation(s.mc.modulation_b, s.terminal_b,
                                                     s.terminal_a, s.mc.distance_m, s.threshold,
                                                     2.0, true);
  CHECK(forced.sigma0_rad == doctest::Approx(optimal_sigma_acquisition(
                                 s.terminal_b, s.terminal_a, s.mc.distance_m, s.threshold)));
}
