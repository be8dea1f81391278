#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "gruss/dataset.hpp"
#include "gruss/fuzz.hpp"
#include "gruss/measure.hpp"
#include "gruss/report_json.hpp"

namespace gruss {

inline constexpr const char* kToolName = "gruss";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Everything the CLI can ask for, resolved into one plain struct so the
// orchestration is testable without spawning a process.
struct RunConfig {
  enum class Command { check, estimate, fuzz, sharpness };
  enum class MetricKind { mean, weights, grid };

  Command command = Command::check;
  std::filesystem::path input;
  Field field = Field::real;
  MetricKind metric_kind = MetricKind::mean;
  std::filesystem::path weights_path;
  GridSpec grid;
  std::optional<Bracket> bracket_x;
  std::optional<Bracket> bracket_y;
  bool estimate_brackets = false;
  bool strict = true;
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  double tolerance = -1.0;  // < 0 picks the library defaults
  std::vector<std::size_t> dims = {1, 2, 4, 8, 16};
  SearchKind kind = SearchKind::classic;
  bool complex_pairs = false;
  bool serial = false;
};

struct RunResult {
  Json document;
  // 0: everything requested was certified; 1: a certification failed in
  // strict mode; 2: the input could not be used at all.
  int exit_code;
};

// Dispatch on cfg.command; any input problem becomes a document with an
// "error" entry and exit code 2.
RunResult run(const RunConfig& cfg);

RunResult run_check(const RunConfig& cfg);
RunResult run_estimate(const RunConfig& cfg);
RunResult run_fuzz(const RunConfig& cfg);
RunResult run_sharpness(const RunConfig& cfg);

}  // namespace gruss
