#include "picolink/scenario.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "picolink/errors.hpp"
#include "picolink/units.hpp"

namespace picolink {

using nlohmann::json;

namespace {

using constants::kArcsec;
using constants::kAu;
using constants::kGeoRadius;
using constants::kPi;

[[noreturn]] void fail(std::string_view path, const std::string& msg) {
  throw ParameterError(std::string(path) + ": " + msg);
}

std::string join(std::string_view base, std::string_view key) {
  if (base.empty()) return std::string(key);
  return std::string(base) + "." + std::string(key);
}

const std::map<std::string, double, std::less<>>& units_for(Dimension dim) {
  static const std::map<std::string, double, std::less<>> kNone{{"", 1.0}};
  static const std::map<std::string, double, std::less<>> kAngle{
      {"rad", 1.0},       {"mrad", 1e-3},     {"urad", 1e-6},
      {"nrad", 1e-9},     {"deg", kPi / 180}, {"arcsec", kArcsec},
      {"mas", kArcsec * 1e-3}};
  static const std::map<std::string, double, std::less<>> kLength{
      {"m", 1.0},  {"km", 1e3}, {"mm", 1e-3}, {"um", 1e-6},
      {"nm", 1e-9}, {"AU", kAu}, {"GEO", kGeoRadius}};
  static const std::map<std::string, double, std::less<>> kTime{
      {"s", 1.0}, {"ms", 1e-3}, {"min", 60.0}, {"h", 3600.0}, {"day", 86400.0}};
  static const std::map<std::string, double, std::less<>> kPower{
      {"W", 1.0}, {"mW", 1e-3}, {"uW", 1e-6}};
  static const std::map<std::string, double, std::less<>> kArea{
      {"m2", 1.0}, {"cm2", 1e-4}, {"mm2", 1e-6}};
  static const std::map<std::string, double, std::less<>> kFrequency{
      {"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}};
  static const std::map<std::string, double, std::less<>> kRate{{"1/s", 1.0}};
  switch (dim) {
    case Dimension::Dimensionless: return kNone;
    case Dimension::Angle: return kAngle;
    case Dimension::Length: return kLength;
    case Dimension::Time: return kTime;
    case Dimension::Power: return kPower;
    case Dimension::Area: return kArea;
    case Dimension::Frequency: return kFrequency;
    case Dimension::Rate: return kRate;
  }
  return kNone;
}

// Object reader that remembers which keys were consumed so that leftovers
// can be reported as unknown.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "expected an object");
  }

  [[nodiscard]] const std::string& path() const { return path_; }

  const json* find(std::string_view key) {
    auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    seen_.emplace(key);
    return &*it;
  }

  bool quantity(std::string_view key, Dimension dim, double& out) {
    if (const json* v = find(key)) {
      out = parse_quantity(*v, dim, join(path_, key));
      return true;
    }
    return false;
  }

  bool optional_quantity(std::string_view key, Dimension dim, std::optional<double>& out) {
    if (const json* v = find(key)) {
      if (v->is_null()) {
        out.reset();
      } else {
        out = parse_quantity(*v, dim, join(path_, key));
      }
      return true;
    }
    return false;
  }

  bool list(std::string_view key, Dimension dim, std::vector<double>& out) {
    if (const json* v = find(key)) {
      out = parse_value_list(*v, dim, join(path_, key));
      return true;
    }
    return false;
  }

  bool boolean(std::string_view key, bool& out) {
    if (const json* v = find(key)) {
      if (!v->is_boolean()) fail(join(path_, key), "expected true or false");
      out = v->get<bool>();
      return true;
    }
    return false;
  }

  bool count(std::string_view key, std::uint64_t& out) {
    if (const json* v = find(key)) {
      if (v->is_number_unsigned()) {
        out = v->get<std::uint64_t>();
      } else if (v->is_number_integer() && v->get<std::int64_t>() >= 0) {
        out = static_cast<std::uint64_t>(v->get<std::int64_t>());
      } else {
        fail(join(path_, key), "expected a non-negative integer");
      }
      return true;
    }
    return false;
  }

  bool text(std::string_view key, std::string& out) {
    if (const json* v = find(key)) {
      if (!v->is_string()) fail(join(path_, key), "expected a string");
      out = v->get<std::string>();
      return true;
    }
    return false;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.contains(it.key())) fail(join(path_, it.key()), "unknown key");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string, std::less<>> seen_;
};

// Runs a module validator and prefixes its message with the scenario path.
template <typename F>
void validated(std::string_view path, F&& check) {
  try {
    check();
  } catch (const ParameterError& e) {
    fail(path, e.what());
  }
}

void parse_terminal(const json& j, const std::string& path, TerminalSpec& t) {
  Section s(j, path);
  if (const json* e = s.find("emitter")) {
    Section es(*e, join(path, "emitter"));
    es.quantity("power", Dimension::Power, t.emitter.power_w);
    es.quantity("wavelength", Dimension::Length, t.emitter.wavelength_m);
    es.quantity("waist", Dimension::Length, t.emitter.waist_m);
    es.finish();
    validated(es.path(), [&] { t.emitter.validate(); });
  }
  if (const json* d = s.find("detector")) {
    Section ds(*d, join(path, "detector"));
    ds.quantity("area", Dimension::Area, t.detector.area_m2);
    ds.quantity("apd_gain", Dimension::Dimensionless, t.detector.apd_gain);
    ds.quantity("responsivity", Dimension::Dimensionless, t.detector.responsivity_a_per_w);
    ds.quantity("excess_noise", Dimension::Dimensionless, t.detector.excess_noise);
    ds.quantity("bandwidth", Dimension::Frequency, t.detector.bandwidth_hz);
    ds.optional_quantity("qe", Dimension::Dimensionless, t.detector.qe);
    ds.optional_quantity("noise_electron_rate", Dimension::Rate, t.detector.noise_electron_rate);
    ds.finish();
    validated(ds.path(), [&] { t.detector.validate(); });
  }
  if (const json* p = s.find("pointing")) {
    Section ps(*p, join(path, "pointing"));
    ps.quantity("control", Dimension::Angle, t.pointing.control_rad);
    ps.quantity("knowledge", Dimension::Angle, t.pointing.knowledge_rad);
    ps.finish();
    validated(ps.path(), [&] { t.pointing.validate(); });
  }
  std::string model;
  if (s.text("snr_model", model)) {
    if (model == "apd_electrical") {
      t.snr_model = SnrModel::ApdElectrical;
    } else if (model == "photoelectron_count") {
      t.snr_model = SnrModel::PhotoelectronCount;
    } else {
      fail(join(path, "snr_model"), "expected \"apd_electrical\" or \"photoelectron_count\"");
    }
  }
  s.finish();
  validated(path, [&] { t.validate(); });
}

void parse_modulation(const json& j, const std::string& path, ModulationSpec& m) {
  Section s(j, path);
  if (const json* c = s.find("sigma0")) {
    if (c->is_string() && c->get<std::string>() == "hardware") {
      m.center = BeamCenter::Hardware;
    } else if (c->is_string() && c->get<std::string>() == "optimal") {
      m.center = BeamCenter::Optimal;
    } else {
      m.center = BeamCenter::Explicit;
      m.sigma0_rad = parse_quantity(*c, Dimension::Angle, join(path, "sigma0"));
      if (!(m.sigma0_rad > 0.0)) fail(join(path, "sigma0"), "must be positive");
    }
  }
  s.quantity("amplitude_frac", Dimension::Dimensionless, m.amplitude_frac);
  s.optional_quantity("period", Dimension::Time, m.period_s);
  if (const json* p = s.find("phase")) {
    if (p->is_string() && p->get<std::string>() == "random") {
      m.phase_rad.reset();
    } else {
      m.phase_rad = parse_quantity(*p, Dimension::Angle, join(path, "phase"));
    }
  }
  s.finish();
  if (!(m.amplitude_frac >= 0.0 && m.amplitude_frac < 1.0)) {
    fail(join(path, "amplitude_frac"), "must lie in [0, 1)");
  }
  if (m.period_s && !(*m.period_s > 0.0)) fail(join(path, "period"), "must be positive");
}

void parse_mc(const json& j, McSection& mc) {
  Section s(j, "mc");
  s.quantity("distance", Dimension::Length, mc.distance_m);
  s.count("runs", mc.config.runs);
  s.quantity("dt", Dimension::Time, mc.config.dt_s);
  s.quantity("max_time", Dimension::Time, mc.config.max_time_s);
  s.count("seed", mc.config.seed);
  if (const json* p = s.find("pointing_process")) {
    if (p->is_string() && p->get<std::string>() == "iid_gaussian") {
      mc.config.pointing_process = IidGaussian{};
    } else if (p->is_object()) {
      Section ps(*p, "mc.pointing_process");
      std::string kind;
      if (!ps.text("kind", kind) || kind != "ornstein_uhlenbeck") {
        fail("mc.pointing_process.kind", "expected \"ornstein_uhlenbeck\"");
      }
      OrnsteinUhlenbeck ou;
      if (!ps.quantity("correlation_time", Dimension::Time, ou.correlation_time_s)) {
        fail("mc.pointing_process.correlation_time", "required");
      }
      ps.finish();
      mc.config.pointing_process = ou;
    } else {
      fail("mc.pointing_process",
           "expected \"iid_gaussian\" or {\"kind\": \"ornstein_uhlenbeck\", ...}");
    }
  }
  if (const json* m = s.find("modulation")) {
    parse_modulation(*m, "mc.modulation", mc.modulation_a);
    mc.modulation_b = mc.modulation_a;
  }
  if (const json* m = s.find("modulation_b")) parse_modulation(*m, "mc.modulation_b", mc.modulation_b);
  s.finish();
  if (mc.config.runs < 1) fail("mc.runs", "must be >= 1");
  if (!(mc.distance_m > 0.0)) fail("mc.distance", "must be positive");
  validated("mc", [&] { mc.config.validate(); });
}

void parse_constellation(const json& j, ConstellationSection& c) {
  Section s(j, "constellation");
  s.quantity("a_inner", Dimension::Length, c.spec.a_inner_m);
  s.quantity("a_outer", Dimension::Length, c.spec.a_outer_m);
  s.quantity("spacing", Dimension::Length, c.spec.spacing_m);
  if (const json* p = s.find("phase_offsets")) {
    if (!p->is_array()) fail("constellation.phase_offsets", "expected an array");
    c.spec.phase_offsets_rad.clear();
    for (std::size_t i = 0; i < p->size(); ++i) {
      c.spec.phase_offsets_rad.push_back(parse_quantity(
          (*p)[i], Dimension::Angle, "constellation.phase_offsets[" + std::to_string(i) + "]"));
    }
  }
  if (const json* cost = s.find("cost")) {
    Section cs(*cost, "constellation.cost");
    cs.quantity("tfu", Dimension::Dimensionless, c.cost.tfu);
    cs.quantity("learning_pct", Dimension::Dimensionless, c.cost.learning_pct);
    cs.finish();
    validated(cs.path(), [&] { c.cost.validate(); });
  }
  if (const json* g = s.find("grid")) {
    Section gs(*g, "constellation.grid");
    gs.list("spacings", Dimension::Length, c.grid_spacings_m);
    gs.list("outer_radii", Dimension::Length, c.grid_outer_radii_m);
    gs.finish();
  }
  s.finish();
  validated("constellation", [&] { c.spec.validate(); });
  for (double d : c.grid_spacings_m) {
    if (!(d > 0.0 && d < 2.0 * c.spec.a_inner_m)) {
      fail("constellation.grid.spacings", "each spacing must lie in (0, 2 a_inner)");
    }
  }
  for (double a : c.grid_outer_radii_m) {
    if (!(a >= c.spec.a_inner_m)) fail("constellation.grid.outer_radii", "must be >= a_inner");
  }
}

void parse_attitude(const json& j, AttitudeSection& a) {
  Section s(j, "attitude");
  if (const json* g = s.find("gyros")) {
    if (!g->is_array() || g->empty()) fail("attitude.gyros", "expected a non-empty array");
    a.gyros.clear();
    for (std::size_t i = 0; i < g->size(); ++i) {
      const std::string path = "attitude.gyros[" + std::to_string(i) + "]";
      Section gs((*g)[i], path);
      GyroParams gp;
      gs.quantity("arw", Dimension::Dimensionless, gp.arw);
      gs.quantity("rrw", Dimension::Dimensionless, gp.rrw);
      gs.finish();
      validated(path, [&] { gp.validate(); });
      a.gyros.push_back(gp);
    }
  }
  if (const json* t = s.find("star_trackers")) {
    if (!t->is_array() || t->empty()) fail("attitude.star_trackers", "expected a non-empty array");
    a.trackers.clear();
    for (std::size_t i = 0; i < t->size(); ++i) {
      const std::string path = "attitude.star_trackers[" + std::to_string(i) + "]";
      Section ts((*t)[i], path);
      StarTrackerParams st;
      ts.quantity("noise", Dimension::Angle, st.noise_rad);
      ts.quantity("cadence", Dimension::Time, st.cadence_s);
      ts.finish();
      validated(path, [&] { st.validate(); });
      a.trackers.push_back(st);
    }
  }
  if (const json* m = s.find("mems")) {
    Section ms(*m, "attitude.mems");
    ms.quantity("temperature_k", Dimension::Dimensionless, a.mems.temperature_k);
    ms.quantity("quality_factor", Dimension::Dimensionless, a.mems.quality_factor);
    ms.quantity("proof_mass_kg", Dimension::Dimensionless, a.mems.proof_mass_kg);
    ms.quantity("drive_amplitude", Dimension::Length, a.mems.drive_amplitude_m);
    ms.quantity("resonant_freq_rad_s", Dimension::Dimensionless, a.mems.resonant_freq_rad_s);
    ms.quantity("angular_gain", Dimension::Dimensionless, a.mems.angular_gain);
    ms.list("temperatures_k", Dimension::Dimensionless, a.mems_temperatures_k);
    ms.list("quality_factors", Dimension::Dimensionless, a.mems_quality_factors);
    ms.finish();
    validated(ms.path(), [&] { a.mems.validate(); });
    for (double t : a.mems_temperatures_k) {
      if (!(t > 0.0)) fail("attitude.mems.temperatures_k", "must be positive");
    }
    for (double q : a.mems_quality_factors) {
      if (!(q > 0.0)) fail("attitude.mems.quality_factors", "must be positive");
    }
  }
  s.finish();
}

std::vector<double> log_range(double from, double to, std::uint64_t n) {
  std::vector<double> v(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double f = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    v[i] = from * std::pow(to / from, f);
  }
  if (n > 1) v.back() = to;
  return v;
}

}  // namespace

double parse_quantity(const json& value, Dimension dim, std::string_view path) {
  if (value.is_number()) {
    const double v = value.get<double>();
    if (!std::isfinite(v)) fail(path, "must be finite");
    return v;
  }
  if (!value.is_string()) fail(path, "expected a number or a \"<value> <unit>\" string");
  const std::string s = value.get<std::string>();
  const char* begin = s.c_str();
  char* end = nullptr;
  const double magnitude = std::strtod(begin, &end);
  if (end == begin || !std::isfinite(magnitude)) fail(path, "cannot parse \"" + s + "\"");
  std::string unit(end);
  while (!unit.empty() && std::isspace(static_cast<unsigned char>(unit.front()))) unit.erase(0, 1);
  while (!unit.empty() && std::isspace(static_cast<unsigned char>(unit.back()))) unit.pop_back();
  const auto& table = units_for(dim);
  auto it = table.find(unit);
  if (it == table.end()) {
    std::string allowed;
    for (const auto& [name, factor] : table) {
      if (!allowed.empty()) allowed += ", ";
      allowed += name.empty() ? "(none)" : name;
    }
    fail(path, "unit \"" + unit + "\" not accepted here (allowed: " + allowed + ")");
  }
  return magnitude * it->second;
}

std::vector<double> parse_value_list(const json& value, Dimension dim, std::string_view path) {
  std::vector<double> out;
  if (value.is_array()) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      out.push_back(parse_quantity(value[i], dim, std::string(path) + "[" + std::to_string(i) + "]"));
    }
  } else if (value.is_object()) {
    Section s(value, std::string(path));
    double from = 0.0;
    double to = 0.0;
    std::uint64_t points = 0;
    std::string spacing = "log";
    if (!s.quantity("from", dim, from)) fail(path, "range needs \"from\"");
    if (!s.quantity("to", dim, to)) fail(path, "range needs \"to\"");
    if (!s.count("points", points)) fail(path, "range needs \"points\"");
    s.text("spacing", spacing);
    s.finish();
    if (points == 0) fail(path, "range is empty");
    if (spacing == "log") {
      if (!(from > 0.0 && to > 0.0)) fail(path, "log range needs positive bounds");
      out = log_range(from, to, points);
    } else if (spacing == "linear") {
      out.resize(points);
      for (std::uint64_t i = 0; i < points; ++i) {
        const double f = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
        out[i] = from + (to - from) * f;
      }
      if (points > 1) out.back() = to;
    } else {
      fail(std::string(path) + ".spacing", "expected \"log\" or \"linear\"");
    }
  } else {
    fail(path, "expected an array or a {from, to, points} range");
  }
  if (out.empty()) fail(path, "range is empty");
  return out;
}

TerminalSpec baseline_terminal() {
  TerminalSpec t;
  t.emitter = EmitterParams{2.02, 1.55e-6, 0.05};
  t.detector.area_m2 = 0.05 * 0.05;
  t.detector.apd_gain = 10.0;
  t.detector.responsivity_a_per_w = 0.99;
  t.detector.excess_noise = 4.3;
  t.detector.bandwidth_hz = 300e6;
  t.pointing = PointingError{0.0, kArcsec};
  t.snr_model = SnrModel::ApdElectrical;
  return t;
}

Scenario default_scenario() {
  Scenario s;
  s.terminal_a = baseline_terminal();
  s.terminal_b = baseline_terminal();
  s.threshold = Threshold::from_db(3.0);

  s.link.distance_m = 2.0 * kGeoRadius;
  s.link.offpoint_rad = 0.0;
  s.link.sweep_distances_m = log_range(1.0 * kGeoRadius, 200.0 * kGeoRadius, 61);
  s.link.sweep_offpoints_rad = {0.0, 0.5 * kArcsec, 1.0 * kArcsec};

  for (double m : {2.0, 5.0, 10.0, 20.0, 50.0, 100.0, 200.0}) {
    s.acquire.distances_m.push_back(m * kGeoRadius);
  }
  s.acquire.zetas_rad = log_range(0.01 * kArcsec, 10.0 * kArcsec, 31);

  s.mc.distance_m = 2.0 * kGeoRadius;
  s.mc.config.runs = 3000;
  s.mc.config.dt_s = 1.0;
  s.mc.config.max_time_s = 2000.0;
  s.mc.config.seed = 1;
  s.mc.config.pointing_process = IidGaussian{};

  s.constellation.spec = ConstellationSpec{kAu, 1.52 * kAu, 0.05 * kAu, {}};
  s.constellation.cost = CostModel{1e5, 0.8};
  s.constellation.grid_spacings_m = log_range(0.01 * kAu, 0.5 * kAu, 12);
  for (double a : {1.1, 1.25, 1.52, 2.0, 2.5}) s.constellation.grid_outer_radii_m.push_back(a * kAu);

  s.attitude.gyros = {{1e-7, 1e-10}, {1e-6, 1e-9}, {1e-5, 1e-8}, {1e-4, 1e-7}, {1e-3, 1e-6}};
  for (double arcsec : {0.5, 1.0, 3.0, 10.0, 30.0}) {
    s.attitude.trackers.push_back({arcsec * kArcsec, 1.0});
  }
  s.attitude.mems = MemsThermalParams{300.0, 1e4, 1e-9, 1e-5, 2.0 * kPi * 1e4, 0.8};
  s.attitude.mems_temperatures_k = {77.0, 150.0, 200.0, 250.0, 300.0, 350.0};
  s.attitude.mems_quality_factors = log_range(1e2, 1e6, 9);
  return s;
}

void Scenario::validate() const {
  validated("terminals.a", [&] { terminal_a.validate(); });
  validated("terminals.b", [&] { terminal_b.validate(); });
  validated("constellation", [&] {
    constellation.spec.validate();
    constellation.cost.validate();
  });
  validated("mc", [&] { mc.config.validate(); });
}

Scenario parse_scenario(const json& doc) {
  Scenario s = default_scenario();
  Section root(doc, "");
  if (const json* t = root.find("terminals")) {
    Section ts(*t, "terminals");
    if (const json* a = ts.find("a")) parse_terminal(*a, "terminals.a", s.terminal_a);
    s.terminal_b = s.terminal_a;
    if (const json* b = ts.find("b")) parse_terminal(*b, "terminals.b", s.terminal_b);
    ts.finish();
  }
  double snr_star_db = s.threshold.db();
  if (root.quantity("snr_star_db", Dimension::Dimensionless, snr_star_db)) {
    validated("snr_star_db", [&] { s.threshold = Threshold::from_db(snr_star_db); });
  }
  if (const json* l = root.find("link")) {
    Section ls(*l, "link");
    ls.quantity("distance", Dimension::Length, s.link.distance_m);
    ls.quantity("offpoint", Dimension::Angle, s.link.offpoint_rad);
    if (const json* sw = ls.find("sweep")) {
      Section ss(*sw, "link.sweep");
      ss.list("distances", Dimension::Length, s.link.sweep_distances_m);
      ss.list("offpoints", Dimension::Angle, s.link.sweep_offpoints_rad);
      ss.finish();
    }
    ls.finish();
    validated("link", [&] { LinkState{s.link.distance_m, s.link.offpoint_rad}.validate(); });
  }
  if (const json* a = root.find("acquire")) {
    Section as(*a, "acquire");
    as.list("distances", Dimension::Length, s.acquire.distances_m);
    as.list("zetas", Dimension::Angle, s.acquire.zetas_rad);
    as.boolean("optimize_beamwidth", s.acquire.optimize_beamwidth);
    as.finish();
    for (double d : s.acquire.distances_m) {
      if (!(d > 0.0)) fail("acquire.distances", "must be positive");
    }
    for (double z : s.acquire.zetas_rad) {
      if (!(z > 0.0)) fail("acquire.zetas", "must be positive");
    }
  }
  if (const json* m = root.find("mc")) parse_mc(*m, s.mc);
  if (const json* c = root.find("constellation")) parse_constellation(*c, s.constellation);
  if (const json* a = root.find("attitude")) parse_attitude(*a, s.attitude);
  root.finish();
  s.validate();
  return s;
}

Scenario parse_scenario_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ParameterError(std::string("scenario: malformed JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("scenario: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

ModulationPolicy resolve_modulation(const ModulationSpec& spec, const TerminalSpec& tx,
                                    const TerminalSpec& rx, double distance_m,
                                    const Threshold& thr, double dt_s, bool force_optimal) {
  ModulationPolicy p;
  const BeamCenter center = force_optimal ? BeamCenter::Optimal : spec.center;
  switch (center) {
    case BeamCenter::Hardware: p.sigma0_rad = tx.emitter.divergence(); break;
    case BeamCenter::Optimal: p.sigma0_rad = optimal_sigma_acquisition(tx, rx, distance_m, thr); break;
    case BeamCenter::Explicit: p.sigma0_rad = spec.sigma0_rad; break;
  }
  p.amplitude_frac = spec.amplitude_frac;
  p.period_s = spec.period_s.value_or(200.0 * dt_s);
  p.phase_rad = spec.phase_rad;
  return p;
}

}  // namespace picolink
