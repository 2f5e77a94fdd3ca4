#include "pscore/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "pscore/counts.hpp"
#include "pscore/names.hpp"
#include "pscore/pipeline.hpp"

namespace pscore::cli {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path + ": cannot open for reading");
  return in;
}

template <typename Fn>
auto with_file_context(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw Error(path + ": " + e.what());
  }
}

RecordFormat format_for(const std::string& path,
                        const std::optional<RecordFormat>& forced) {
  if (forced) return *forced;
  std::string ext = std::filesystem::path(path).extension().string();
  return fold_key(ext) == ".csv" ? RecordFormat::csv : RecordFormat::jsonl;
}

void warn(std::ostream& err, const Warnings& warnings) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

// Writes to `path`, or to `fallback` when the path is empty.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(path + ": cannot open for writing");
  write(file);
  file.flush();
  if (!file) throw Error(path + ": write failed");
}

struct Loaded {
  BuildStats stats;
  CountsTable counts;
  Warnings warnings;
};

Loaded load(const RunConfig& config) {
  std::vector<std::string> groups;
  if (!config.groups_file.empty()) {
    auto in = open_input(config.groups_file);
    groups = parse_group_list(in);
  }
  groups.insert(groups.end(), config.groups.begin(), config.groups.end());
  if (groups.empty()) throw ParameterError("no reference groups given");

  std::vector<PublicationRecord> records;
  for (const auto& path : config.inputs) {
    auto in = open_input(path);
    auto part = with_file_context(path, [&] {
      return parse_records(in, format_for(path, config.input_format));
    });
    records.insert(records.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  }

  Loaded loaded;
  BuildResult built = build_dataset(records, groups, config.years);
  loaded.stats = built.stats;
  Dataset dataset = std::move(built.dataset);
  if (!config.author_counts.empty()) {
    auto in = open_input(config.author_counts);
    auto overrides = with_file_context(config.author_counts, [&] {
      return parse_author_count_overrides(in);
    });
    dataset = dataset.with_corpus_author_counts(std::move(overrides));
  }
  if (config.author_counts.empty())
    loaded.counts = aggregate(dataset, &loaded.warnings);
  else
    loaded.counts = with_file_context(
        config.author_counts, [&] { return aggregate(dataset, &loaded.warnings); });
  return loaded;
}

ReportPreamble preamble_for(const char* command, const PipelineResult& r) {
  ReportPreamble lines;
  lines.push_back(std::string("pscore ") + command);
  lines.push_back("d=" + format_sig12(r.chain.d) +
                  " groups=" + std::to_string(r.counts.group_count()) +
                  " venues=" + std::to_string(r.counts.venue_count()));
  if (r.largest_component_only)
    lines.push_back("solved on largest component: groups=" +
                    std::to_string(r.chain.group_names.size()) +
                    " venues=" + std::to_string(r.chain.venue_names.size()));
  return lines;
}

void emit_debug(const RunConfig& config, const PipelineResult& r) {
  const std::string prefix = config.output.empty() ? "pscore" : config.output;
  std::ostringstream unused;
  emit(prefix + ".alpha.tsv", unused, [&](std::ostream& os) {
    write_matrix_tsv(os, r.chain.alpha, r.chain.venue_names, r.chain.group_names);
  });
  emit(prefix + ".beta.tsv", unused, [&](std::ostream& os) {
    write_matrix_tsv(os, r.chain.beta, r.chain.group_names, r.chain.venue_names);
  });
  emit(prefix + ".reduced.tsv", unused, [&](std::ostream& os) {
    write_matrix_tsv(os, r.reduced, r.chain.group_names, r.chain.group_names);
  });
}

PipelineResult solve(const RunConfig& config, std::ostream& err) {
  Loaded loaded = load(config);
  warn(err, loaded.warnings);
  PipelineResult r = run_pipeline(
      loaded.counts, {.d = config.d,
                      .allow_largest_component = config.allow_largest_component});
  warn(err, r.warnings);
  if (config.emit_debug_matrices) emit_debug(config, r);
  return r;
}

int run_venues(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const PipelineResult r = solve(config, err);
  emit(config.output, out, [&](std::ostream& os) {
    write_venue_scores(os, r.venues_raw, r.venues_normalized, config.format,
                       preamble_for("venues", r));
  });
  return 0;
}

int run_groups(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const PipelineResult r = solve(config, err);
  const Ranking ranking = make_ranking(r.counts.group_names, r.group_scores);
  emit(config.output, out, [&](std::ostream& os) {
    write_ranking(os, ranking, config.format, preamble_for("groups", r));
  });
  return 0;
}

int run_authors(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto vin = open_input(config.venue_scores);
  const ScoreVector nu =
      with_file_context(config.venue_scores, [&] { return read_venue_scores(vin); });
  auto pin = open_input(config.author_pubs);
  const auto pubs =
      with_file_context(config.author_pubs, [&] { return parse_author_pubs(pin); });
  const AuthorRanking ranked = rank_authors(pubs, nu);
  warn(err, ranked.warnings);
  const ReportPreamble preamble = {
      "pscore authors",
      "authors=" + std::to_string(pubs.size()) +
          " venues=" + std::to_string(nu.names.size())};
  emit(config.output, out, [&](std::ostream& os) {
    write_ranking(os, ranked.ranking, config.format, preamble);
  });
  return 0;
}

int run_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Loaded loaded = load(config);
  warn(err, loaded.warnings);
  const CountsTable& c = loaded.counts;
  long long attributions = 0;
  for (long long n : c.n_group) attributions += n;

  const ReputationChain chain = build_chain(c, config.d);
  const Connectivity conn = check_irreducible(chain);
  std::string status = "yes";
  if (!conn.irreducible) {
    status = "no:";
    for (const auto& comp : conn.components) {
      status += " {";
      for (std::size_t i = 0; i < comp.size(); ++i)
        status += (i ? ", " : "") + c.group_names[comp[i]];
      status += "}";
    }
    err << "warning: chain is reducible at d=" << format_sig12(config.d)
        << "; venues/groups would fail without --allow-largest-component\n";
  }

  emit(config.output, out, [&](std::ostream& os) {
    os << "# pscore validate\n";
    os << "d\t" << format_sig12(config.d) << '\n';
    os << "input_records\t" << loaded.stats.input_records << '\n';
    os << "dropped_non_reference\t" << loaded.stats.dropped_non_reference << '\n';
    os << "dropped_by_year\t" << loaded.stats.dropped_by_year << '\n';
    os << "merged_duplicates\t" << loaded.stats.merged_duplicates << '\n';
    os << "groups\t" << c.group_count() << '\n';
    os << "venues\t" << c.venue_count() << '\n';
    os << "attributions\t" << attributions << '\n';
    for (std::size_t w = 0; w < c.group_count(); ++w)
      os << "group\t" << c.group_names[w] << '\t' << c.n_group[w] << '\n';
    os << "irreducible\t" << status << '\n';
  });
  return 0;
}

}  // namespace

double parse_damping(const std::string& text) {
  auto parse_number = [&](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw ParameterError("invalid value for d: '" + text + "'");
    return v;
  };
  double d = 0.0;
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const double num = parse_number(std::string_view(text).substr(0, slash));
    const double den = parse_number(std::string_view(text).substr(slash + 1));
    if (den == 0.0) throw ParameterError("invalid value for d: '" + text + "'");
    d = num / den;
  } else {
    d = parse_number(text);
  }
  if (!(d >= 0.0 && d <= 1.0))
    throw ParameterError("d must lie in [0, 1], got '" + text + "'");
  return d;
}

YearRange parse_year_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParameterError("year range must look like A:B, got '" + text + "'");
  auto part = [&](std::string_view s) -> std::optional<int> {
    if (s.empty()) return std::nullopt;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw ParameterError("invalid year in range '" + text + "'");
    return v;
  };
  YearRange range{part(std::string_view(text).substr(0, colon)),
                  part(std::string_view(text).substr(colon + 1))};
  if (range.first && range.last && *range.first > *range.last)
    throw ParameterError("empty year range '" + text + "'");
  return range;
}

void validate_config(const RunConfig& config) {
  if (!(config.d >= 0.0 && config.d <= 1.0))
    throw ParameterError("d must lie in [0, 1]");
  if (config.command == Command::authors) {
    if (config.venue_scores.empty())
      throw ParameterError("authors requires --venue-scores");
    if (config.author_pubs.empty())
      throw ParameterError("authors requires --author-pubs");
    return;
  }
  if (config.inputs.empty()) throw ParameterError("--input is required");
  if (config.groups_file.empty() && config.groups.empty())
    throw ParameterError("--groups-file or --group is required");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate_config(config);
    switch (config.command) {
      case Command::venues: return run_venues(config, out, err);
      case Command::groups: return run_groups(config, out, err);
      case Command::authors: return run_authors(config, out, err);
      case Command::validate: return run_validate(config, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"pscore: publication-based venue, group and author reputation"};
  app.require_subcommand(1);

  RunConfig config;
  std::string d_text = "0.5";
  std::string years_text;
  std::string input_format_text;
  std::string format_text = "tsv";

  const std::map<std::string, OutputFormat> formats{
      {"tsv", OutputFormat::tsv}, {"json", OutputFormat::json}};

  auto add_dataset_options = [&](CLI::App* sub) {
    sub->add_option("--input", config.inputs, "Publication records (JSONL or CSV)")
        ->required();
    sub->add_option("--input-format", input_format_text,
                    "Record format; default by extension")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    sub->add_option("--groups-file", config.groups_file,
                    "Reference groups, one per line");
    sub->add_option("--group", config.groups, "Reference group (repeatable)");
    sub->add_option("--d", d_text, "Volume vs breadth weight in [0,1] (default 0.5)");
    sub->add_option("--author-counts", config.author_counts,
                    "Per-venue distinct-author counts (venue,count)");
    sub->add_option("--years", years_text, "Inclusive year filter A:B");
  };
  auto add_output_options = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("-o,--output", config.output, "Output path (default stdout)");
  };

  CLI::App* venues = app.add_subcommand("venues", "Venue P-scores");
  add_dataset_options(venues);
  add_output_options(venues);
  CLI::App* groups = app.add_subcommand("groups", "Reference group ranking");
  add_dataset_options(groups);
  add_output_options(groups);
  for (CLI::App* sub : {venues, groups}) {
    sub->add_flag("--emit-debug-matrices", config.emit_debug_matrices,
                  "Write alpha, beta and reduced matrices as TSV next to the output");
    sub->add_flag("--allow-largest-component", config.allow_largest_component,
                  "At d=1, solve on the largest connected component");
  }

  CLI::App* authors = app.add_subcommand("authors", "Author ranking from venue scores");
  authors->add_option("--venue-scores", config.venue_scores, "Venue-score file")
      ->required();
  authors->add_option("--author-pubs", config.author_pubs, "Author publications (JSONL)")
      ->required();
  add_output_options(authors);

  CLI::App* validate = app.add_subcommand("validate", "Check inputs and print statistics");
  add_dataset_options(validate);
  validate->add_option("-o,--output", config.output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? 0 : 2;
  }

  if (venues->parsed()) config.command = Command::venues;
  if (groups->parsed()) config.command = Command::groups;
  if (authors->parsed()) config.command = Command::authors;
  if (validate->parsed()) config.command = Command::validate;
  config.format = formats.at(format_text);

  try {
    config.d = parse_damping(d_text);
    if (!years_text.empty()) config.years = parse_year_range(years_text);
    if (!input_format_text.empty())
      config.input_format =
          input_format_text == "csv" ? RecordFormat::csv : RecordFormat::jsonl;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return run(config, out, err);
}

}  // namespace pscore::cli
