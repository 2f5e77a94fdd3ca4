#include "pscore/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "pscore/names.hpp"

namespace pscore {

namespace {

using ojson = nlohmann::ordered_json;

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto stop = line.find('\t', start);
    out.push_back(line.substr(start, stop - start));
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  if (!out.empty() && !out.back().empty() && out.back().back() == '\r')
    out.back().pop_back();
  return out;
}

double parse_score(const std::string& text, std::size_t line, const char* field) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ValidationError(line, field, "not a number: '" + text + "'");
  if (!std::isfinite(value) || value < 0.0)
    throw ValidationError(line, field, "must be finite and nonnegative");
  return value;
}

double round6(double x) { return std::round(x * 1e6) / 1e6; }

double round_sig12(double x) { return std::stod(format_sig12(x)); }

void write_preamble(std::ostream& out, const ReportPreamble& preamble) {
  for (const auto& line : preamble) out << "# " << line << '\n';
}

}  // namespace

std::string format_sig12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

void write_ranking(std::ostream& out, const Ranking& ranking,
                   OutputFormat format, const ReportPreamble& preamble) {
  if (format == OutputFormat::json) {
    ojson arr = ojson::array();
    for (const auto& e : ranking.entries)
      arr.push_back({{"rank", e.rank}, {"name", e.name}, {"score", round6(e.score)}});
    out << arr.dump(2) << '\n';
    return;
  }
  write_preamble(out, preamble);
  out << "rank\tname\tscore\n";
  for (const auto& e : ranking.entries)
    out << e.rank << '\t' << e.name << '\t' << format_fixed6(e.score) << '\n';
}

void write_venue_scores(std::ostream& out, const ScoreVector& raw,
                        const ScoreVector& normalized, OutputFormat format,
                        const ReportPreamble& preamble) {
  if (raw.names != normalized.names)
    throw InternalError("raw and normalized venue lists differ");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < raw.names.size(); ++j) index.emplace(raw.names[j], j);
  const Ranking ranking = make_ranking(normalized);

  if (format == OutputFormat::json) {
    ojson arr = ojson::array();
    for (const auto& e : ranking.entries) {
      const std::size_t j = index.at(e.name);
      arr.push_back({{"rank", e.rank},
                     {"name", e.name},
                     {"score", round_sig12(normalized.scores[j])},
                     {"raw_score", round_sig12(raw.scores[j])}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  write_preamble(out, preamble);
  out << "venue\traw_score\tnormalized_score\n";
  for (const auto& e : ranking.entries) {
    const std::size_t j = index.at(e.name);
    out << e.name << '\t' << format_sig12(raw.scores[j]) << '\t'
        << format_sig12(normalized.scores[j]) << '\n';
  }
}

ScoreVector read_venue_scores(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  ScoreVector nu;
  nu.kind = EntityKind::venue;
  nu.normalization = Normalization::raw;
  std::set<std::string> seen;
  auto add = [&](const std::string& raw_name, double score, std::size_t line) {
    std::string name = normalize_name(raw_name);
    if (name.empty()) throw ValidationError(line, "venue", "must not be empty");
    if (!seen.insert(fold_key(name)).second)
      throw ValidationError(line, "venue", "duplicate venue '" + name + "'");
    nu.names.push_back(std::move(name));
    nu.scores.push_back(score);
  };

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json arr;
    try {
      arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, std::string("invalid venue-score JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError(0, "expected a JSON array");
    std::size_t item = 0;
    for (const auto& obj : arr) {
      ++item;
      if (!obj.is_object() || !obj.contains("name") || !obj["name"].is_string())
        throw ValidationError(item, "name", "missing or not a string");
      if (!obj.contains("raw_score") || !obj["raw_score"].is_number())
        throw ValidationError(item, "raw_score", "missing or not a number");
      const double score = obj["raw_score"].get<double>();
      if (!std::isfinite(score) || score < 0.0)
        throw ValidationError(item, "raw_score", "must be finite and nonnegative");
      add(obj["name"].get<std::string>(), score, item);
    }
    return nu;
  }

  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    if (!have_header) {
      if (fields.size() != 3 || fold_key(fields[0]) != "venue" ||
          fold_key(fields[1]) != "raw_score" ||
          fold_key(fields[2]) != "normalized_score")
        throw ParseError(lineno,
                         "expected header venue\\traw_score\\tnormalized_score");
      have_header = true;
      continue;
    }
    if (fields.size() != 3)
      throw ParseError(lineno, "expected 3 tab-separated fields");
    add(fields[0], parse_score(fields[1], lineno, "raw_score"), lineno);
    parse_score(fields[2], lineno, "normalized_score");
  }
  if (!have_header) throw ParseError(lineno, "venue-score file has no header");
  return nu;
}

void write_matrix_tsv(std::ostream& out, const Matrix& m,
                      const std::vector<std::string>& row_labels,
                      const std::vector<std::string>& col_labels) {
  if (row_labels.size() != m.rows() || col_labels.size() != m.cols())
    throw InternalError("matrix labels do not match dimensions");
  out << "label";
  for (const auto& c : col_labels) out << '\t' << c;
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << row_labels[r];
    for (double x : m.row(r)) out << '\t' << format_sig12(x);
    out << '\n';
  }
}

std::map<std::string, std::vector<VenueCount>> parse_author_pubs(
    std::istream& in) {
  // Accumulate under folded keys, keep first-seen spelling for display.
  struct AuthorEntry {
    std::string display;
    std::vector<std::string> venue_order;
    std::unordered_map<std::string, std::pair<std::string, long long>> venues;
  };
  std::map<std::string, AuthorEntry> authors;
  std::set<std::string> seen_papers;

  auto credit = [&](const std::string& author, const std::string& venue,
                    long long count) {
    AuthorEntry& entry = authors[fold_key(author)];
    if (entry.display.empty()) entry.display = author;
    const std::string vkey = fold_key(venue);
    auto [it, inserted] = entry.venues.emplace(vkey, std::make_pair(venue, 0LL));
    if (inserted) entry.venue_order.push_back(vkey);
    it->second.second += count;
  };

  auto required_string = [](const nlohmann::json& obj, const char* key,
                            std::size_t line) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string())
      throw ValidationError(line, key, "missing or not a string");
    std::string name = normalize_name(it->get_ref<const std::string&>());
    if (name.empty()) throw ValidationError(line, key, "must not be empty");
    return name;
  };

  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (normalize_name(text).empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(line, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) throw ParseError(line, "expected a JSON object");

    if (obj.contains("author")) {
      const std::string author = required_string(obj, "author", line);
      const std::string venue = required_string(obj, "venue", line);
      auto c = obj.find("count");
      if (c == obj.end() || !c->is_number_integer())
        throw ValidationError(line, "count", "missing or not an integer");
      const long long count = c->get<long long>();
      if (count < 1) throw ValidationError(line, "count", "must be positive");
      credit(author, venue, count);
      continue;
    }
    if (!obj.contains("authors"))
      throw ValidationError(line, "author",
                            "line has neither 'author' nor 'authors'");
    const std::string venue = required_string(obj, "venue", line);
    const auto& list = obj["authors"];
    if (!list.is_array() || list.empty())
      throw ValidationError(line, "authors", "expected a nonempty array of strings");

    std::string paper_key = "line:" + std::to_string(line);
    if (auto id = obj.find("id"); id != obj.end() && !id->is_null())
      paper_key = "id:" + (id->is_string() ? id->get<std::string>() : id->dump());
    else if (auto t = obj.find("title"); t != obj.end() && t->is_string() &&
                                         !fold_key(t->get<std::string>()).empty())
      paper_key = "title:" + fold_key(t->get<std::string>());

    for (const auto& a : list) {
      if (!a.is_string())
        throw ValidationError(line, "authors", "expected an array of strings");
      const std::string author = normalize_name(a.get<std::string>());
      if (author.empty()) throw ValidationError(line, "authors", "empty name");
      if (!seen_papers.insert(paper_key + '\0' + fold_key(author)).second) continue;
      credit(author, venue, 1);
    }
  }

  std::map<std::string, std::vector<VenueCount>> out;
  for (auto& [key, entry] : authors) {
    auto& pubs = out[entry.display];
    for (const auto& vkey : entry.venue_order) pubs.push_back(entry.venues.at(vkey));
  }
  return out;
}

}  // namespace pscore
