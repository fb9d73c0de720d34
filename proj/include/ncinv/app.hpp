#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ncinv::app {

using Json = nlohmann::json;

// Command line values that take precedence over the config file.
struct Overrides {
  std::optional<std::string> task;
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> degree_cap;
};

// Runs one task and returns the report object
//   {"task", "inputs", "results", "conclusive", "verified_up_to", "timings_ms"}.
// Configuration problems raise UsageError naming the offending field.
// Non-fatal notices (for example an unvalidated group table) are appended
// to `warnings` when it is given.
Json run_task(const Json& config, const Overrides& overrides = {},
              std::vector<std::string>* warnings = nullptr);

// Reads and parses a JSON config file.
Json load_config(const std::string& path);

// The report with timings removed; the part covered by determinism.
Json strip_timings(Json report);

// Aligned two-column text rendering of a report.
std::string render_table(const Json& report);

// 0 success, 1 usage or config error, 2 resource limit, 3 internal error.
int exit_code(const std::exception& error);

}  // namespace ncinv::app
