#include "pscore/records.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "csv.hpp"
#include "pscore/names.hpp"

namespace pscore {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<std::string> optional_text(std::string_view raw, bool collapse) {
  std::string value = collapse ? normalize_name(raw) : trim(raw);
  if (value.empty()) return std::nullopt;
  return value;
}

std::string required_name(std::string_view raw, std::size_t line,
                          const char* field) {
  std::string value = normalize_name(raw);
  if (value.empty()) throw ValidationError(line, field, "must not be empty");
  return value;
}

int parse_year(std::string_view raw, std::size_t line) {
  const std::string text = trim(raw);
  int year = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), year);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ValidationError(line, "year", "not an integer: '" + text + "'");
  return year;
}

std::vector<std::string> split_authors(std::string_view raw, std::size_t line) {
  std::vector<std::string> authors;
  std::size_t start = 0;
  while (start <= raw.size()) {
    const auto stop = std::min(raw.find(';', start), raw.size());
    std::string name = normalize_name(raw.substr(start, stop - start));
    if (!name.empty()) authors.push_back(std::move(name));
    start = stop + 1;
  }
  if (authors.empty()) throw ValidationError(line, "authors", "must not be empty");
  return authors;
}

PublicationRecord record_from_json(const json& obj, std::size_t line) {
  if (!obj.is_object()) throw ParseError(line, "expected a JSON object");
  PublicationRecord rec;

  auto string_field = [&](const char* key) -> const json* {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return nullptr;
    if (!it->is_string())
      throw ValidationError(line, key, "expected a string");
    return &*it;
  };

  if (auto it = obj.find("id"); it != obj.end() && !it->is_null()) {
    if (it->is_string())
      rec.paper_id = optional_text(it->get_ref<const std::string&>(), false);
    else if (it->is_number_integer())
      rec.paper_id = it->dump();
    else
      throw ValidationError(line, "id", "expected a string or integer");
  }
  if (const json* title = string_field("title"))
    rec.title = optional_text(title->get_ref<const std::string&>(), true);

  const json* group = string_field("group");
  if (!group) throw ValidationError(line, "group", "missing");
  rec.group = required_name(group->get_ref<const std::string&>(), line, "group");

  auto authors = obj.find("authors");
  if (authors == obj.end() || authors->is_null())
    throw ValidationError(line, "authors", "missing");
  if (!authors->is_array())
    throw ValidationError(line, "authors", "expected an array of strings");
  for (const auto& a : *authors) {
    if (!a.is_string())
      throw ValidationError(line, "authors", "expected an array of strings");
    rec.authors.push_back(
        required_name(a.get_ref<const std::string&>(), line, "authors"));
  }
  if (rec.authors.empty())
    throw ValidationError(line, "authors", "must not be empty");

  const json* venue = string_field("venue");
  if (!venue) throw ValidationError(line, "venue", "missing");
  rec.venue = required_name(venue->get_ref<const std::string&>(), line, "venue");

  if (auto it = obj.find("year"); it != obj.end() && !it->is_null()) {
    if (!it->is_number_integer())
      throw ValidationError(line, "year", "expected an integer");
    rec.year = it->get<int>();
  }
  return rec;
}

std::vector<PublicationRecord> parse_jsonl(std::istream& in) {
  std::vector<PublicationRecord> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (trim(text).empty()) continue;
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(line, std::string("invalid JSON: ") + e.what());
    }
    out.push_back(record_from_json(obj, line));
  }
  return out;
}

std::map<std::string, std::size_t> header_index(const csv::Row& header) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < header.fields.size(); ++i) {
    const std::string name = fold_key(header.fields[i]);
    if (!index.emplace(name, i).second)
      throw ParseError(header.line, "duplicate column '" + name + "'");
  }
  return index;
}

std::vector<PublicationRecord> parse_csv(std::istream& in) {
  const auto rows = csv::read_all(in);
  std::vector<PublicationRecord> out;
  if (rows.empty()) return out;

  const auto index = header_index(rows.front());
  for (const char* col : {"group", "authors", "venue"})
    if (!index.contains(col))
      throw ValidationError(rows.front().line, col, "missing CSV column");
  auto column = [&](const char* name) -> std::optional<std::size_t> {
    auto it = index.find(name);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  const auto id_col = column("id");
  const auto title_col = column("title");
  const auto year_col = column("year");
  const std::size_t group_col = *column("group");
  const std::size_t authors_col = *column("authors");
  const std::size_t venue_col = *column("venue");

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() != rows.front().fields.size())
      throw ParseError(row.line, "expected " +
                                     std::to_string(rows.front().fields.size()) +
                                     " fields, got " +
                                     std::to_string(row.fields.size()));
    PublicationRecord rec;
    if (id_col) rec.paper_id = optional_text(row.fields[*id_col], false);
    if (title_col) rec.title = optional_text(row.fields[*title_col], true);
    rec.group = required_name(row.fields[group_col], row.line, "group");
    rec.authors = split_authors(row.fields[authors_col], row.line);
    rec.venue = required_name(row.fields[venue_col], row.line, "venue");
    if (year_col && !trim(row.fields[*year_col]).empty())
      rec.year = parse_year(row.fields[*year_col], row.line);
    out.push_back(std::move(rec));
  }
  return out;
}

void check_record(const PublicationRecord& rec, std::size_t position) {
  const std::string where = "record #" + std::to_string(position + 1) + " ";
  if (normalize_name(rec.group).empty())
    throw ValidationError(0, "group", where + "must not be empty");
  if (normalize_name(rec.venue).empty())
    throw ValidationError(0, "venue", where + "must not be empty");
  if (rec.authors.empty())
    throw ValidationError(0, "authors", where + "must not be empty");
}

}  // namespace

std::string dedup_key(const PublicationRecord& record, std::size_t position) {
  if (record.paper_id) return "id:" + *record.paper_id;
  if (record.title) return "title:" + fold_key(*record.title);
  return "pos:" + std::to_string(position);
}

std::vector<PublicationRecord> parse_records(std::istream& in,
                                             RecordFormat format) {
  return format == RecordFormat::csv ? parse_csv(in) : parse_jsonl(in);
}

void write_records(std::ostream& out, std::span<const PublicationRecord> records,
                   RecordFormat format) {
  if (format == RecordFormat::jsonl) {
    for (const auto& rec : records) {
      nlohmann::ordered_json obj;
      if (rec.paper_id) obj["id"] = *rec.paper_id;
      if (rec.title) obj["title"] = *rec.title;
      obj["group"] = rec.group;
      obj["authors"] = rec.authors;
      obj["venue"] = rec.venue;
      if (rec.year) obj["year"] = *rec.year;
      out << obj.dump() << '\n';
    }
    return;
  }
  csv::write_row(out, {"id", "title", "group", "authors", "venue", "year"});
  for (const auto& rec : records) {
    std::string authors;
    for (const auto& a : rec.authors) {
      if (a.find(';') != std::string::npos)
        throw ValidationError(0, "authors",
                              "name '" + a + "' contains ';' and cannot be written as CSV");
      if (!authors.empty()) authors += ';';
      authors += a;
    }
    csv::write_row(out, {rec.paper_id.value_or(""), rec.title.value_or(""),
                         rec.group, authors, rec.venue,
                         rec.year ? std::to_string(*rec.year) : ""});
  }
}

bool YearRange::contains(std::optional<int> year) const {
  if (!first && !last) return true;
  if (!year) return false;
  if (first && *year < *first) return false;
  if (last && *year > *last) return false;
  return true;
}

std::vector<std::string> Dataset::venues_of_group(std::size_t group_index) const {
  const std::string group = fold_key(groups_.at(group_index));
  std::set<std::string> present;
  for (const auto& rec : records_)
    if (fold_key(rec.group) == group) present.insert(fold_key(rec.venue));
  std::vector<std::string> out;
  for (const auto& v : venues_)
    if (present.contains(fold_key(v))) out.push_back(v);
  return out;
}

Dataset Dataset::with_corpus_author_counts(
    std::map<std::string, long long> counts) const {
  Dataset copy = *this;
  copy.corpus_author_counts_ = std::move(counts);
  return copy;
}

struct DatasetBuilder {
  static BuildResult build(std::span<const PublicationRecord> records,
                           std::span<const std::string> reference_groups,
                           const YearRange& years) {
    if (reference_groups.empty())
      throw ParameterError("at least one reference group is required");

    BuildResult result;
    Dataset& ds = result.dataset;
    std::unordered_map<std::string, std::size_t> group_index;
    for (const auto& raw : reference_groups) {
      std::string name = normalize_name(raw);
      if (name.empty()) throw ParameterError("empty reference group name");
      if (!group_index.emplace(fold_key(name), ds.groups_.size()).second)
        throw ParameterError("duplicate reference group '" + name + "'");
      ds.groups_.push_back(std::move(name));
    }

    std::unordered_set<std::string> seen;  // dedup key + '\0' + group index
    std::unordered_map<std::string, std::string> venue_display;
    std::vector<std::size_t> per_group(ds.groups_.size(), 0);

    result.stats.input_records = records.size();
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& rec = records[i];
      check_record(rec, i);
      auto g = group_index.find(fold_key(rec.group));
      if (g == group_index.end()) {
        ++result.stats.dropped_non_reference;
        continue;
      }
      if (!years.contains(rec.year)) {
        ++result.stats.dropped_by_year;
        continue;
      }
      const std::string key =
          dedup_key(rec, i) + '\0' + std::to_string(g->second);
      if (!seen.insert(key).second) {
        ++result.stats.merged_duplicates;
        continue;
      }
      PublicationRecord kept = rec;
      kept.group = ds.groups_[g->second];
      kept.venue = normalize_name(rec.venue);
      const auto [v, inserted] =
          venue_display.emplace(fold_key(kept.venue), kept.venue);
      kept.venue = v->second;
      ++per_group[g->second];
      ds.records_.push_back(std::move(kept));
    }

    if (ds.records_.empty())
      throw EmptyDatasetError("no publication records survive filtering");
    for (std::size_t w = 0; w < per_group.size(); ++w)
      if (per_group[w] == 0) throw EmptyGroupError(ds.groups_[w]);

    std::vector<std::pair<std::string, std::string>> venues(
        venue_display.begin(), venue_display.end());
    std::sort(venues.begin(), venues.end());
    for (auto& [fold, display] : venues) ds.venues_.push_back(std::move(display));
    return result;
  }
};

BuildResult build_dataset(std::span<const PublicationRecord> records,
                          std::span<const std::string> reference_groups,
                          const YearRange& years) {
  return DatasetBuilder::build(records, reference_groups, years);
}

std::vector<std::string> parse_group_list(std::istream& in) {
  std::vector<std::string> groups;
  std::string line;
  while (std::getline(in, line)) {
    std::string name = normalize_name(line);
    if (!name.empty()) groups.push_back(std::move(name));
  }
  return groups;
}

std::map<std::string, long long> parse_author_count_overrides(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  std::map<std::string, long long> out;
  std::set<std::string> folded;
  auto add = [&](std::string_view venue_raw, long long count, std::size_t line) {
    std::string venue = required_name(venue_raw, line, "venue");
    if (!folded.insert(fold_key(venue)).second)
      throw ValidationError(line, "venue", "duplicate override for '" + venue + "'");
    out.emplace(std::move(venue), count);
  };

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    std::size_t line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto stop = std::min(text.find('\n', pos), text.size());
      const std::string_view row(text.data() + pos, stop - pos);
      ++line;
      pos = stop + 1;
      if (trim(row).empty()) continue;
      json obj;
      try {
        obj = json::parse(row);
      } catch (const json::parse_error& e) {
        throw ParseError(line, std::string("invalid JSON: ") + e.what());
      }
      if (!obj.is_object()) throw ParseError(line, "expected a JSON object");
      auto v = obj.find("venue");
      if (v == obj.end() || !v->is_string())
        throw ValidationError(line, "venue", "missing or not a string");
      auto c = obj.find("count");
      if (c == obj.end() || !c->is_number_integer())
        throw ValidationError(line, "count", "missing or not an integer");
      add(v->get_ref<const std::string&>(), c->get<long long>(), line);
    }
    return out;
  }

  std::istringstream csv_in(text);
  const auto rows = csv::read_all(csv_in);
  if (rows.empty()) return out;
  const auto index = header_index(rows.front());
  for (const char* col : {"venue", "count"})
    if (!index.contains(col))
      throw ValidationError(rows.front().line, col, "missing CSV column");
  const std::size_t venue_col = index.at("venue");
  const std::size_t count_col = index.at("count");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() != rows.front().fields.size())
      throw ParseError(row.line, "wrong number of fields");
    const std::string raw = trim(row.fields[count_col]);
    long long count = 0;
    const auto [ptr, ec] =
        std::from_chars(raw.data(), raw.data() + raw.size(), count);
    if (ec != std::errc() || ptr != raw.data() + raw.size())
      throw ValidationError(row.line, "count", "not an integer: '" + raw + "'");
    add(row.fields[venue_col], count, row.line);
  }
  return out;
}

}  // namespace pscore
