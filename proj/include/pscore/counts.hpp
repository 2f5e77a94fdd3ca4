#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pscore/error.hpp"
#include "pscore/records.hpp"

namespace pscore {

/// Integer publication statistics over fixed group and venue index spaces.
struct CountsTable {
  std::vector<std::string> group_names;
  std::vector<std::string> venue_names;
  /// T x V, row-major: papers of group w at venue j.
  std::vector<long long> n_group_venue;
  /// Papers at venue j, summed over groups.
  std::vector<long long> n_venue;
  /// Papers of group w, summed over venues.
  std::vector<long long> n_group;
  /// Distinct authors publishing at venue j.
  std::vector<long long> d_venue;

  std::size_t group_count() const noexcept { return group_names.size(); }
  std::size_t venue_count() const noexcept { return venue_names.size(); }

  long long at(std::size_t group, std::size_t venue) const {
    return n_group_venue[group * venue_names.size() + venue];
  }

  friend bool operator==(const CountsTable&, const CountsTable&) = default;
};

CountsTable aggregate(const Dataset& dataset, Warnings* warnings = nullptr);

/// Builds a table from a raw T x V count matrix; marginals are derived.
/// Throws ValidationError when a marginal or breadth count is < 1.
CountsTable make_counts(std::vector<std::string> group_names,
                        std::vector<std::string> venue_names,
                        std::vector<long long> n_group_venue,
                        std::vector<long long> d_venue);

/// Checks every CountsTable invariant; throws ValidationError on failure.
void validate_counts(const CountsTable& counts);

/// Restriction of the table to a subset of groups and venues (indices in
/// increasing order). Marginals are recomputed.
CountsTable restrict_counts(const CountsTable& counts,
                            const std::vector<std::size_t>& groups,
                            const std::vector<std::size_t>& venues);

}  // namespace pscore
