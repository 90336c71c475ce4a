#include "picolink/reports.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "picolink/errors.hpp"

namespace picolink {

using nlohmann::ordered_json;

namespace {

// RFC 4180 writer; every field here is numeric or a bare identifier, so
// nothing needs quoting. LF line endings.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
      : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot write " + path.string());
    row(header);
  }

  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ',';
      out_ << fields[i];
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

std::string num(double v) { return format_number(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }

void write_json(const std::filesystem::path& path, const ordered_json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::filesystem::path prepare(const RunOptions& opts, const char* name) {
  std::error_code ec;
  std::filesystem::create_directories(opts.out_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + opts.out_dir.string() + ": " + ec.message());
  return opts.out_dir / name;
}

struct Direction {
  const char* name;
  const TerminalSpec* tx;
  const TerminalSpec* rx;
};

std::vector<Direction> directions(const Scenario& s) {
  return {{"a_to_b", &s.terminal_a, &s.terminal_b}, {"b_to_a", &s.terminal_b, &s.terminal_a}};
}

// Transmitter as flown, or refocused to its acquisition optimum.
TerminalSpec effective_tx(const Direction& dir, double distance_m, const Threshold& thr,
                          bool optimize) {
  TerminalSpec tx = *dir.tx;
  if (optimize) {
    tx.emitter =
        tx.emitter.with_divergence(optimal_sigma_acquisition(*dir.tx, *dir.rx, distance_m, thr));
  }
  return tx;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

Report report_link(const Scenario& s, const RunOptions& opts) {
  Report rep;
  std::ostringstream text;
  const auto budget_path = prepare(opts, "link_budget.csv");
  {
    CsvWriter csv(budget_path,
                  {"direction", "distance_m", "offpoint_rad", "sigma_rad", "space_loss",
                   "space_loss_db", "tx_gain", "tx_gain_db", "rx_gain", "rx_gain_db",
                   "pointing_loss", "pointing_loss_db", "received_power_w", "received_power_dbw",
                   "snr", "snr_db", "snr_tilde", "snr_tilde_db", "snr_star_db"});
    for (const Direction& dir : directions(s)) {
      const TerminalSpec tx = effective_tx(dir, s.link.distance_m, s.threshold, opts.optimize_beamwidth);
      const LinkState link{s.link.distance_m, s.link.offpoint_rad};
      const LinkBudget b = received_power(tx.emitter, dir.rx->detector, link);
      const double value = snr_from_power(b.received_power_w, dir.rx->detector, dir.rx->snr_model);
      const double tilde = snr_tilde(tx.emitter, dir.rx->detector, link.distance_m, dir.rx->snr_model);
      csv.row({dir.name, num(link.distance_m), num(link.offpoint_rad), num(tx.emitter.divergence()),
               num(b.space_loss), num(b.space_loss_db()), num(b.tx_gain), num(b.tx_gain_db()),
               num(b.rx_gain), num(b.rx_gain_db()), num(b.pointing_loss), num(b.pointing_loss_db()),
               num(b.received_power_w), num(b.received_power_dbw()), num(value), num(to_db(value)),
               num(tilde), num(to_db(tilde)), num(s.threshold.db())});
      text << dir.name << ": L_s " << b.space_loss_db() << " dB, G_Tx " << b.tx_gain_db()
           << " dB, G_Rx " << b.rx_gain_db() << " dB, L_p " << b.pointing_loss_db()
           << " dB, P_Rx " << b.received_power_w << " W, SNR " << to_db(value)
           << " dB (threshold " << s.threshold.db() << " dB)\n";
    }
  }
  rep.files.push_back(budget_path);

  if (!s.link.sweep_distances_m.empty()) {
    if (s.link.sweep_offpoints_rad.empty()) throw ParameterError("link.sweep.offpoints: range is empty");
    const auto sweep_path = prepare(opts, "link_sweep.csv");
    CsvWriter csv(sweep_path, {"direction", "distance_m", "offpoint_rad", "snr", "snr_db",
                               "snr_star_db"});
    for (const Direction& dir : directions(s)) {
      for (double d : s.link.sweep_distances_m) {
        const TerminalSpec tx = effective_tx(dir, d, s.threshold, opts.optimize_beamwidth);
        for (double off : s.link.sweep_offpoints_rad) {
          const double v = snr(tx.emitter, dir.rx->detector, LinkState{d, off}, dir.rx->snr_model);
          csv.row({dir.name, num(d), num(off), num(v), num(to_db(v)), num(s.threshold.db())});
        }
      }
    }
    rep.files.push_back(sweep_path);
    text << "sweep: " << s.link.sweep_distances_m.size() << " distances x "
         << s.link.sweep_offpoints_rad.size() << " off-pointings\n";
  }
  rep.summary = text.str();
  return rep;
}

Report report_acquire(const Scenario& s, const RunOptions& opts) {
  const auto& ds = s.acquire.distances_m;
  const auto& zs = s.acquire.zetas_rad;
  const auto plain = acquisition_probability_sweep(s.terminal_a, s.terminal_b, ds, zs, s.threshold, false);
  const auto optimized = acquisition_probability_sweep(s.terminal_a, s.terminal_b, ds, zs, s.threshold, true);

  Report rep;
  const auto path = prepare(opts, "acquire.csv");
  CsvWriter csv(path, {"d_m", "zeta_rad", "p_ij", "p_ij_optimized"});
  double best_gain = 0.0;
  for (std::size_t i = 0; i < plain.size(); ++i) {
    csv.row({num(plain[i].distance_m), num(plain[i].zeta_rad), num(plain[i].p_ij),
             num(optimized[i].p_ij)});
    if (plain[i].p_ij > 0.0) best_gain = std::max(best_gain, optimized[i].p_ij / plain[i].p_ij);
  }
  rep.files.push_back(path);
  std::ostringstream text;
  text << plain.size() << " cells (" << ds.size() << " distances x " << zs.size()
       << " zetas); largest optimized/baseline ratio among closable cells " << best_gain << "\n";
  rep.summary = text.str();
  return rep;
}

Report report_mc(const Scenario& s, const RunOptions& opts) {
  McConfig cfg = s.mc.config;
  if (opts.seed) cfg.seed = *opts.seed;
  const bool force = opts.optimize_beamwidth;
  const ModulationPolicy pa = resolve_modulation(s.mc.modulation_a, s.terminal_a, s.terminal_b,
                                                 s.mc.distance_m, s.threshold, cfg.dt_s, force);
  const ModulationPolicy pb = resolve_modulation(s.mc.modulation_b, s.terminal_b, s.terminal_a,
                                                 s.mc.distance_m, s.threshold, cfg.dt_s, force);
  const McResult res = run_mc_acquisition(s.terminal_a, s.terminal_b, s.mc.distance_m, s.threshold,
                                          pa, pb, cfg, opts.threads);

  Report rep;
  const auto events_path = prepare(opts, "mc_events.csv");
  {
    CsvWriter csv(events_path, {"run_id", "t_s", "dtheta_a_rad", "sigma_a_rad", "dtheta_b_rad",
                                "sigma_b_rad"});
    for (const AcquisitionEvent& e : res.events) {
      csv.row({num(e.run_id), num(e.time_s), num(e.dtheta_a_rad), num(e.sigma_a_rad),
               num(e.dtheta_b_rad), num(e.sigma_b_rad)});
    }
  }
  rep.files.push_back(events_path);

  ordered_json j;
  j["runs"] = res.summary.runs;
  j["acquisitions"] = res.summary.acquisitions;
  j["acq_fraction"] = res.summary.acq_fraction;
  j["mean_time_s"] = res.summary.mean_time_s ? ordered_json(*res.summary.mean_time_s) : ordered_json();
  j["seed"] = cfg.seed;
  j["distance_m"] = s.mc.distance_m;
  j["dt_s"] = cfg.dt_s;
  j["max_time_s"] = cfg.max_time_s;
  j["sigma0_a_rad"] = pa.sigma0_rad;
  j["sigma0_b_rad"] = pb.sigma0_rad;
  j["snr_star_db"] = s.threshold.db();
  const auto summary_path = prepare(opts, "mc_summary.json");
  write_json(summary_path, j);
  rep.files.push_back(summary_path);

  std::ostringstream text;
  text << res.summary.acquisitions << " / " << res.summary.runs << " runs acquired (fraction "
       << res.summary.acq_fraction << ")";
  if (res.summary.mean_time_s) text << ", mean time " << *res.summary.mean_time_s << " s";
  text << "\n";
  rep.summary = text.str();
  return rep;
}

Report report_constellation(const Scenario& s, const RunOptions& opts) {
  const auto& c = s.constellation;
  const std::vector<Ring> rings = build_rings(c.spec);
  Report rep;
  const auto rings_path = prepare(opts, "rings.csv");
  {
    CsvWriter csv(rings_path, {"ring_index", "a_m", "n_k", "omega_rad_s", "theta0_rad"});
    for (const Ring& r : rings) {
      csv.row({num(static_cast<std::uint64_t>(r.index)), num(r.semimajor_axis_m), num(r.count),
               num(r.mean_motion_rad_s), num(c.spec.phase_offset(r.index))});
    }
  }
  rep.files.push_back(rings_path);

  const std::uint64_t n_exact = total_terminals_exact(c.spec);
  const double n_approx = total_terminals_approx(c.spec.a_inner_m, c.spec.a_outer_m, c.spec.spacing_m);
  const double n_quad = total_terminals_approx(c.spec.a_inner_m, c.spec.a_outer_m, c.spec.spacing_m,
                                               ApproxForm::Quadratic);

  ordered_json grid = ordered_json::array();
  const auto grid_path = prepare(opts, "cost_grid.csv");
  {
    CsvWriter csv(grid_path, {"spacing_m", "a_outer_m", "extent_m", "n_exact", "n_approx",
                              "cost_rel_tfu"});
    for (double d : c.grid_spacings_m) {
      for (double a_out : c.grid_outer_radii_m) {
        ConstellationSpec cell{c.spec.a_inner_m, a_out, d, {}};
        const std::uint64_t n = total_terminals_exact(cell);
        const double approx = total_terminals_approx(cell.a_inner_m, a_out, d);
        const double rel = relative_cost(c.cost.learning_pct, static_cast<double>(n));
        csv.row({num(d), num(a_out), num(a_out - c.spec.a_inner_m), num(n), num(approx), num(rel)});
        ordered_json row;
        row["spacing_m"] = d;
        row["a_outer_m"] = a_out;
        row["n_exact"] = n;
        row["n_approx"] = approx;
        row["cost_rel_tfu"] = rel;
        grid.push_back(row);
      }
    }
  }
  rep.files.push_back(grid_path);

  ordered_json j;
  j["a_inner_m"] = c.spec.a_inner_m;
  j["a_outer_m"] = c.spec.a_outer_m;
  j["spacing_m"] = c.spec.spacing_m;
  j["rings"] = rings.size();
  j["n_exact"] = n_exact;
  j["n_approx"] = n_approx;
  j["n_approx_quadratic"] = n_quad;
  j["learning_pct"] = c.cost.learning_pct;
  j["learning_exponent"] = learning_exponent(c.cost.learning_pct);
  j["tfu"] = c.cost.tfu;
  j["cost_rel_tfu"] = relative_cost(c.cost.learning_pct, static_cast<double>(n_exact));
  j["cost"] = production_cost(c.cost, static_cast<double>(n_exact));
  j["max_route_hops"] = max_route_hops(rings);
  if (rings.size() >= 2) {
    const AlignmentPair p = min_alignment_pair(rings[0], rings[1],
                                               c.spec.phase_offset(2) - c.spec.phase_offset(1));
    j["first_alignment"] = {{"i", p.i}, {"j", p.j}, {"time_s", p.time_s}};
  } else {
    j["first_alignment"] = nullptr;
  }
  j["cost_grid"] = grid;
  const auto summary_path = prepare(opts, "constellation_summary.json");
  write_json(summary_path, j);
  rep.files.push_back(summary_path);

  std::ostringstream text;
  text << rings.size() << " rings, " << n_exact << " terminals (approx " << n_approx
       << "), cost/TFU " << j["cost_rel_tfu"].get<double>() << "\n";
  rep.summary = text.str();
  return rep;
}

Report report_attitude(const Scenario& s, const RunOptions& opts) {
  const auto& a = s.attitude;
  const auto cells = knowledge_error_grid(a.gyros, a.trackers);
  Report rep;
  const auto grid_path = prepare(opts, "knowledge_grid.csv");
  {
    CsvWriter csv(grid_path, {"gyro_arw_rad_rts", "gyro_rrw_rad_s_rts", "st_noise_rad",
                              "st_cadence_s", "zeta_kno_rad"});
    for (const KnowledgeCell& k : cells) {
      csv.row({num(k.gyro.arw), num(k.gyro.rrw), num(k.tracker.noise_rad), num(k.tracker.cadence_s),
               num(k.zeta_kno_rad)});
    }
  }
  rep.files.push_back(grid_path);

  const auto mems_path = prepare(opts, "mems_arw.csv");
  {
    CsvWriter csv(mems_path, {"temperature_k", "quality_factor", "arw_rad_s_rthz"});
    for (double t : a.mems_temperatures_k) {
      for (double q : a.mems_quality_factors) {
        MemsThermalParams p = a.mems;
        p.temperature_k = t;
        p.quality_factor = q;
        csv.row({num(t), num(q), num(mems_thermal_arw(p))});
      }
    }
  }
  rep.files.push_back(mems_path);

  double best = cells.front().zeta_kno_rad;
  for (const auto& k : cells) best = std::min(best, k.zeta_kno_rad);
  std::ostringstream text;
  text << cells.size() << " gyro/tracker cells, best knowledge error " << best << " rad\n";
  rep.summary = text.str();
  return rep;
}

}  // namespace picolink
