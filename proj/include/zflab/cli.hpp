#pragma once

// Batch front end: `verify`, `enumerate`, `fuzz` and `intervals`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zflab/construction.hpp"
#include "zflab/random.hpp"
#include "zflab/report.hpp"

namespace zflab::cli {

enum class Command { Verify, Enumerate, Fuzz, Intervals };
enum class OutputFormat { Json, Text };

struct RunConfig {
  Command command = Command::Verify;
  std::string family_path;
  U2Variant variant = U2Variant::UnionOfProducts;
  OrderKind kind = OrderKind::WellOrder;
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  bool allow_empty = false;
  std::string out_path;  // empty: stdout
  OutputFormat format = OutputFormat::Json;
  Caps caps;
};

// Parses "powerset,product". Throws InvalidArgument.
Caps parse_caps(const std::string& text);

// Reads the command line; ZFLAB_CAPS, when set, replaces the default caps and
// explicit --powerset-cap / --product-cap flags win over it. Returns nullopt
// after printing help or a usage error (exit code in `exit_code`).
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, int& exit_code);

struct Outcome {
  int exit_code = 0;  // 0 iff no assertion failed
  Json report;
};

// Runs the command and returns its report. Library errors become a report
// with an "error" record and exit code 2.
Outcome execute(const RunConfig& cfg);

// Random family for fuzzing: 1–3 members of 1–3 (0–3 with allow_empty)
// elements drawn from the four sets of rank ≤ 2.
HfSet random_family(Rng& rng, bool allow_empty);

// Parse, execute, and write the rendered report to --out or stdout.
int run(int argc, const char* const* argv);

}  // namespace zflab::cli
