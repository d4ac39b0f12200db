#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tanscroll/curves.hpp"
#include "tanscroll/parallel.hpp"

namespace tanscroll {

inline constexpr const char* kToolkitVersion = "0.1.0";

enum class Format { text, json };
enum class Status { pass, fail, degenerate };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<int> genus;  // nullopt runs every genus
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  int series_order = 10;
  Format format = Format::text;
  std::string out;  // empty: standard output
};

// Throws ConfigError on trials < 1, series order < 8 or a genus outside 3..9.
void validate(const RunConfig& config);
// "3".."9" or "all"; throws ConfigError otherwise.
std::optional<int> parse_genus(const std::string& text);

struct CheckRecord {
  int genus = 0;
  std::string id;
  std::string anchor;
  Status status = Status::fail;
  std::vector<std::string> witnesses;
  std::vector<std::string> scalars;
  long ms = 0;
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct RunReport {
  std::string version = kToolkitVersion;
  RunConfig config;
  std::vector<CheckRecord> checks;
  // Degenerate records never fail a run.
  bool overall() const;
};

struct CheckSpec {
  int genus;
  std::string id;
  std::string anchor;
  // Fills status, witnesses and scalars.
  std::function<void(const RunConfig&, Execution, CheckRecord&)> run;
};

// Every check in a fixed order; reports list records in this order.
const std::vector<CheckSpec>& dispatch_table();

// Runs every check of the selected genus, continuing after failures; an
// exception inside a check turns into a failed record.
RunReport run_suite(const RunConfig& config, Execution exec = Execution::parallel);

nlohmann::ordered_json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const GenusCase& c);

// One line per check, "[PASS] g=6 F6-special (anchor) 12ms", then a summary.
std::string to_text(const RunReport& report);
std::string render(const RunReport& report, Format format);
// Writes to `path`, or standard output when it is empty; throws IoError.
void emit_report(const RunReport& report, Format format, const std::string& path);

}  // namespace tanscroll
