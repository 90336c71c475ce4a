#pragma once

// Batch reports behind the CLI subcommands. Each writes its tables into
// `out_dir` and returns a short human-readable summary. Column headers
// and JSON keys are part of the public contract.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "picolink/scenario.hpp"

namespace picolink {

struct RunOptions {
  std::filesystem::path out_dir = ".";
  std::optional<std::uint64_t> seed;  // overrides mc.seed
  bool optimize_beamwidth = false;
  unsigned threads = 1;
};

struct Report {
  std::string summary;
  std::vector<std::filesystem::path> files;
};

// Shortest round-trip decimal form, '.' separator.
[[nodiscard]] std::string format_number(double v);

[[nodiscard]] Report report_link(const Scenario& s, const RunOptions& opts);
[[nodiscard]] Report report_acquire(const Scenario& s, const RunOptions& opts);
[[nodiscard]] Report report_mc(const Scenario& s, const RunOptions& opts);
[[nodiscard]] Report report_constellation(const Scenario& s, const RunOptions& opts);
[[nodiscard]] Report report_attitude(const Scenario& s, const RunOptions& opts);

}  // namespace picolink
