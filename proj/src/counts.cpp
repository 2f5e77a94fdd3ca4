#include "pscore/counts.hpp"

#include <set>
#include <unordered_map>

#include "pscore/names.hpp"

namespace pscore {

namespace {

void derive_marginals(CountsTable& c) {
  const std::size_t t = c.group_count();
  const std::size_t v = c.venue_count();
  c.n_group.assign(t, 0);
  c.n_venue.assign(v, 0);
  for (std::size_t w = 0; w < t; ++w) {
    for (std::size_t j = 0; j < v; ++j) {
      c.n_group[w] += c.at(w, j);
      c.n_venue[j] += c.at(w, j);
    }
  }
}

}  // namespace

CountsTable aggregate(const Dataset& dataset, Warnings* warnings) {
  CountsTable c;
  c.group_names = dataset.groups();
  c.venue_names = dataset.venues();
  const std::size_t t = c.group_count();
  const std::size_t v = c.venue_count();

  std::unordered_map<std::string, std::size_t> group_index, venue_index;
  for (std::size_t w = 0; w < t; ++w) group_index.emplace(fold_key(c.group_names[w]), w);
  for (std::size_t j = 0; j < v; ++j) venue_index.emplace(fold_key(c.venue_names[j]), j);

  c.n_group_venue.assign(t * v, 0);
  std::vector<std::set<std::string>> authors(v);
  for (const auto& rec : dataset.records()) {
    const std::size_t w = group_index.at(fold_key(rec.group));
    const std::size_t j = venue_index.at(fold_key(rec.venue));
    ++c.n_group_venue[w * v + j];
    for (const auto& a : rec.authors) authors[j].insert(fold_key(a));
  }
  derive_marginals(c);

  c.d_venue.resize(v);
  for (std::size_t j = 0; j < v; ++j)
    c.d_venue[j] = static_cast<long long>(authors[j].size());

  if (const auto& overrides = dataset.corpus_author_counts()) {
    for (const auto& [venue, count] : *overrides)
      if (count < 1)
        throw ValidationError(0, "count",
                              "author count for venue '" + venue +
                                  "' must be at least 1, got " +
                                  std::to_string(count));
    for (const auto& [venue, count] : *overrides) {
      auto it = venue_index.find(fold_key(venue));
      if (it == venue_index.end()) {
        if (warnings)
          warnings->push_back("author-count override for unknown venue '" +
                              venue + "' ignored");
        continue;
      }
      c.d_venue[it->second] = count;
    }
  }

  validate_counts(c);
  return c;
}

CountsTable make_counts(std::vector<std::string> group_names,
                        std::vector<std::string> venue_names,
                        std::vector<long long> n_group_venue,
                        std::vector<long long> d_venue) {
  CountsTable c;
  c.group_names = std::move(group_names);
  c.venue_names = std::move(venue_names);
  if (n_group_venue.size() != c.group_count() * c.venue_count())
    throw ValidationError(0, "n_group_venue", "size does not match T x V");
  c.n_group_venue = std::move(n_group_venue);
  c.d_venue = std::move(d_venue);
  derive_marginals(c);
  validate_counts(c);
  return c;
}

void validate_counts(const CountsTable& c) {
  const std::size_t t = c.group_count();
  const std::size_t v = c.venue_count();
  if (t == 0) throw ValidationError(0, "groups", "at least one group required");
  if (v == 0) throw ValidationError(0, "venues", "at least one venue required");
  if (c.n_group_venue.size() != t * v || c.n_group.size() != t ||
      c.n_venue.size() != v || c.d_venue.size() != v)
    throw ValidationError(0, "counts", "inconsistent dimensions");
  for (long long n : c.n_group_venue)
    if (n < 0) throw ValidationError(0, "n_group_venue", "negative count");
  for (std::size_t w = 0; w < t; ++w) {
    long long sum = 0;
    for (std::size_t j = 0; j < v; ++j) sum += c.at(w, j);
    if (sum != c.n_group[w])
      throw ValidationError(0, "n_group", "marginal mismatch for group '" +
                                              c.group_names[w] + "'");
    if (c.n_group[w] < 1)
      throw ValidationError(0, "n_group",
                            "group '" + c.group_names[w] + "' has no papers");
  }
  for (std::size_t j = 0; j < v; ++j) {
    long long sum = 0;
    for (std::size_t w = 0; w < t; ++w) sum += c.at(w, j);
    if (sum != c.n_venue[j])
      throw ValidationError(0, "n_venue", "marginal mismatch for venue '" +
                                              c.venue_names[j] + "'");
    if (c.n_venue[j] < 1)
      throw ValidationError(0, "n_venue",
                            "venue '" + c.venue_names[j] + "' has no papers");
    if (c.d_venue[j] < 1)
      throw ValidationError(0, "d_venue",
                            "venue '" + c.venue_names[j] + "' has no authors");
  }
}

CountsTable restrict_counts(const CountsTable& counts,
                            const std::vector<std::size_t>& groups,
                            const std::vector<std::size_t>& venues) {
  std::vector<std::string> gn, vn;
  std::vector<long long> n, d;
  for (std::size_t w : groups) gn.push_back(counts.group_names.at(w));
  for (std::size_t j : venues) {
    vn.push_back(counts.venue_names.at(j));
    d.push_back(counts.d_venue.at(j));
  }
  for (std::size_t w : groups)
    for (std::size_t j : venues) n.push_back(counts.at(w, j));
  return make_counts(std::move(gn), std::move(vn), std::move(n), std::move(d));
}

}  // namespace pscore
