#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pscore/error.hpp"

namespace pscore {

enum class RecordFormat { jsonl, csv };

/// One paper as seen by one group. Names are already normalized.
struct PublicationRecord {
  std::optional<std::string> paper_id;
  std::optional<std::string> title;
  std::string group;
  std::vector<std::string> authors;
  std::string venue;
  std::optional<int> year;

  friend bool operator==(const PublicationRecord&,
                         const PublicationRecord&) = default;
};

/// Identity used for the distinct-papers rule. Records with neither id nor
/// title get a key unique to their position, so they never merge.
std::string dedup_key(const PublicationRecord& record, std::size_t position);

/// Reads records; one per JSONL line or CSV row, in input order.
std::vector<PublicationRecord> parse_records(std::istream& in,
                                             RecordFormat format);

/// Inverse of parse_records for the same format.
void write_records(std::ostream& out, std::span<const PublicationRecord> records,
                   RecordFormat format);

/// Inclusive year filter. An open end is unbounded.
struct YearRange {
  std::optional<int> first;
  std::optional<int> last;

  bool contains(std::optional<int> year) const;
};

/// Publications of the reference groups, ready for counting. Immutable once
/// built; see build_dataset().
class Dataset {
 public:
  const std::vector<std::string>& groups() const noexcept { return groups_; }
  const std::vector<std::string>& venues() const noexcept { return venues_; }
  const std::vector<PublicationRecord>& records() const noexcept {
    return records_;
  }
  /// Externally supplied distinct-author counts per venue, keyed by the venue
  /// name as written in the override file.
  const std::optional<std::map<std::string, long long>>& corpus_author_counts()
      const noexcept {
    return corpus_author_counts_;
  }

  /// Venues where a given group published (the per-group venue subset).
  std::vector<std::string> venues_of_group(std::size_t group_index) const;

  Dataset with_corpus_author_counts(std::map<std::string, long long> counts) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  friend struct DatasetBuilder;

  std::vector<std::string> groups_;
  std::vector<std::string> venues_;
  std::vector<PublicationRecord> records_;
  std::optional<std::map<std::string, long long>> corpus_author_counts_;
};

struct BuildStats {
  std::size_t input_records = 0;
  std::size_t dropped_non_reference = 0;
  std::size_t dropped_by_year = 0;
  std::size_t merged_duplicates = 0;
};

struct BuildResult {
  Dataset dataset;
  BuildStats stats;
};

/// Filters records to the reference groups, deduplicates per (key, group)
/// and fixes the venue index space (sorted by case-folded name). Groups keep
/// caller order and spelling.
BuildResult build_dataset(std::span<const PublicationRecord> records,
                          std::span<const std::string> reference_groups,
                          const YearRange& years = {});

/// Reference-group list: one name per line, blank lines skipped.
std::vector<std::string> parse_group_list(std::istream& in);

/// Override file with columns venue,count (CSV with header, or JSONL).
std::map<std::string, long long> parse_author_count_overrides(std::istream& in);

}  // namespace pscore
