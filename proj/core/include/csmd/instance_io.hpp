#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "csmd/instance.hpp"

namespace csmd {

// Instance files are UTF-8 key-value text; '#' starts a comment.
//
//   [instance]
//   name = heart-case1
//   K = 3
//   mode = cascade                    # or combinatorial; default cascade
//   costs = 32, 397, 601
//   costs_are_cumulative = true       # cascade only; default false
//   lambda = 0.0001, 0.0008, 0.001    # K entries, or 2^K - 1 by bitmask
//
//   [env]
//   variant = independent             # pmf | independent | trace
//   p0 = 0.5
//   rates = 0.29292, 0.20202, 0.14815
//   # pmf rows: bitstring "y y1 .. yn" then probability; unlisted rows have mass 0
//   0111 0.25
//   trace_path = rounds.csv           # relative to the instance file
//   resample = false
//
// Trace files: header "Y,Y1,...,Yn", then one comma-separated binary row per round.

/// Parses an instance. `base_dir` resolves relative trace paths. Throws ParseError
/// (with line numbers) or ConfigError (failed invariants).
Instance parse_instance(std::istream& in, const std::filesystem::path& base_dir = {},
                        const std::string& default_name = "instance");

Instance load_instance(const std::filesystem::path& path);

Trace parse_trace(std::istream& in, const std::string& source = "trace");
Trace load_trace(const std::filesystem::path& path);

struct WriteOptions {
  /// Write cascade costs as running totals with costs_are_cumulative = true.
  bool cumulative_costs = false;
  /// Comment lines emitted before the first section (without the leading '#').
  std::string header;
  /// For trace environments: where the trace file lives, as written into trace_path.
  std::string trace_path;
};

void write_instance(std::ostream& out, const Instance& instance, const WriteOptions& options = {});
void write_trace(std::ostream& out, const Trace& trace);

}  // namespace csmd
