// picolink: batch front-end over the picolink C API.
//
//   picolink <link|acquire|mc|constellation|attitude> [--scenario FILE]
//            [--out DIR] [--seed N] [--optimize-beamwidth] [--threads N]
//
// Exit codes: 0 success, 2 validation or usage error, 3 numerical error,
// 1 anything else (I/O, internal).

#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "picolink/picolink.h"

namespace {

struct Flags {
  std::string scenario;
  std::string out = ".";
  std::uint64_t seed = 0;
  bool optimize = false;
  unsigned threads = 1;
};

using RunFn = pl_status (*)(const pl_scenario*, const pl_run_options*, pl_report**);

int exit_code(pl_status st) {
  switch (st) {
    case PL_OK: return 0;
    case PL_ERR_VALIDATION: return 2;
    case PL_ERR_NUMERICAL: return 3;
    default: return 1;
  }
}

int report_error(pl_status st) {
  std::fprintf(stderr, "picolink: error: %s\n", pl_last_error());
  return exit_code(st);
}

int run(RunFn fn, const Flags& f, bool has_seed) {
  pl_scenario* sc = nullptr;
  pl_status st = f.scenario.empty() ? pl_scenario_default(&sc)
                                    : pl_scenario_load_file(f.scenario.c_str(), &sc);
  if (st != PL_OK) return report_error(st);

  const pl_run_options opts{f.out.c_str(), has_seed ? 1 : 0, f.seed, f.optimize ? 1 : 0,
                            f.threads};
  pl_report* rep = nullptr;
  st = fn(sc, &opts, &rep);
  pl_scenario_free(sc);
  if (st != PL_OK) return report_error(st);

  std::fputs(pl_report_summary(rep), stdout);
  for (size_t i = 0; i < pl_report_file_count(rep); ++i)
    std::printf("wrote %s\n", pl_report_file(rep, i));
  pl_report_free(rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optical beacon link, acquisition, constellation and attitude models"};
  app.set_version_flag("--version", pl_version());
  app.require_subcommand(1);

  Flags flags;
  const struct {
    const char* name;
    const char* help;
    RunFn fn;
  } commands[] = {
      {"link", "Link budget at one geometry plus an SNR-vs-distance sweep", &pl_run_link},
      {"acquire", "Mutual acquisition probability over distance and pointing error",
       &pl_run_acquire},
      {"mc", "Monte Carlo acquisition with sinusoidal beam-width modulation", &pl_run_mc},
      {"constellation", "Ring constellation layout, terminal counts and cost grid",
       &pl_run_constellation},
      {"attitude", "Attitude knowledge error grid and MEMS gyro thermal noise", &pl_run_attitude},
  };

  RunFn selected = nullptr;
  std::vector<CLI::Option*> seed_opts;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--scenario", flags.scenario, "Scenario JSON file (default: built-in baseline)")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", flags.out, "Output directory")->capture_default_str();
    seed_opts.push_back(sub->add_option("--seed", flags.seed, "Override the Monte Carlo seed"));
    sub->add_flag("--optimize-beamwidth", flags.optimize, "Use the optimal acquisition beam width");
    sub->add_option("--threads", flags.threads, "Worker threads")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
    sub->callback([&selected, fn = c.fn] { selected = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  bool has_seed = false;
  for (CLI::Option* o : seed_opts) has_seed = has_seed || o->count() > 0;
  return run(selected, flags, has_seed);
}
