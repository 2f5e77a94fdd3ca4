#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pscore/records.hpp"
#include "pscore/report.hpp"

namespace pscore::cli {

enum class Command { venues, groups, authors, validate };

struct RunConfig {
  Command command = Command::venues;
  std::vector<std::string> inputs;
  /// Unset: decided per file by extension (.csv, otherwise JSONL).
  std::optional<RecordFormat> input_format;
  std::string groups_file;
  std::vector<std::string> groups;
  double d = 0.5;
  std::string author_counts;
  YearRange years;
  std::string venue_scores;
  std::string author_pubs;
  /// Empty writes to the output stream.
  std::string output;
  OutputFormat format = OutputFormat::tsv;
  bool emit_debug_matrices = false;
  bool allow_largest_component = false;
};

/// Throws pscore::ParameterError when a command is missing a required input.
void validate_config(const RunConfig& config);

/// Executes one command. Reports go to files or `out`, warnings and errors
/// to `err`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Argument parsing plus run().
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

/// "0.5", "1/3".
double parse_damping(const std::string& text);
/// "2001:2010", "2001:", ":2010".
YearRange parse_year_range(const std::string& text);

}  // namespace pscore::cli
