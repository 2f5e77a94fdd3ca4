#include "pscore/pipeline.hpp"

#include <string>

#include "pscore/report.hpp"

namespace pscore {

namespace {

std::string describe_components(const std::vector<std::vector<std::string>>& comps) {
  std::string text;
  for (const auto& comp : comps) {
    text += " {";
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i) text += ", ";
      text += comp[i];
    }
    text += "}";
  }
  return text;
}

// Most groups first, then most attributed papers, then earliest group.
std::size_t pick_largest(const std::vector<Component>& comps,
                         const CountsTable& counts) {
  std::size_t best = 0;
  long long best_papers = -1;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    long long papers = 0;
    for (std::size_t w : comps[c].groups) papers += counts.n_group[w];
    const bool more_groups = comps[c].groups.size() > comps[best].groups.size();
    const bool same_groups = comps[c].groups.size() == comps[best].groups.size();
    if (more_groups || (same_groups && papers > best_papers)) {
      best = c;
      best_papers = papers;
    }
  }
  return best;
}

}  // namespace

PipelineResult run_pipeline(const CountsTable& counts,
                            const PipelineOptions& options) {
  validate_counts(counts);
  PipelineResult result;
  result.counts = counts;

  ReputationChain full = build_chain(counts, options.d);
  const Connectivity connectivity = check_irreducible(full);

  std::vector<std::size_t> kept_groups, kept_venues;
  if (connectivity.irreducible) {
    result.chain = std::move(full);
  } else {
    const auto comps = bipartite_components(counts);
    std::vector<std::vector<std::string>> named;
    for (const auto& comp : comps) {
      named.emplace_back();
      for (std::size_t w : comp.groups) named.back().push_back(counts.group_names[w]);
    }
    if (!options.allow_largest_component)
      throw DisconnectedError(
          named, "at d = 1 the reference groups split into " +
                     std::to_string(comps.size()) +
                     " disconnected components:" + describe_components(named));
    const Component& largest = comps[pick_largest(comps, counts)];
    kept_groups = largest.groups;
    kept_venues = largest.venues;
    result.largest_component_only = true;
    result.warnings.push_back(
        "group/venue graph is disconnected:" + describe_components(named) +
        "; solving on the largest component only, other groups and venues score 0");
    result.chain = build_chain(restrict_counts(counts, kept_groups, kept_venues),
                               options.d);
  }

  result.reduced = build_reduced(result.chain);
  result.gamma = gth_steady_state(result.reduced);
  if (!(result.gamma.residual <= kFixedPointTolerance))
    throw InternalError("stationarity residual " + format_sig12(result.gamma.residual) +
                        " exceeds tolerance");

  const ScoreVector nu = venue_scores(result.gamma, result.chain);
  result.consistency_residual = group_consistency_check(result.gamma, nu, result.chain);
  if (!(result.consistency_residual <= kFixedPointTolerance))
    throw InternalError("group consistency residual " +
                        format_sig12(result.consistency_residual) +
                        " exceeds tolerance");

  result.venues_raw.kind = EntityKind::venue;
  result.venues_raw.names = counts.venue_names;
  if (result.largest_component_only) {
    result.group_scores.assign(counts.group_count(), 0.0);
    for (std::size_t i = 0; i < kept_groups.size(); ++i)
      result.group_scores[kept_groups[i]] = result.gamma.gamma[i];
    result.venues_raw.scores.assign(counts.venue_count(), 0.0);
    for (std::size_t i = 0; i < kept_venues.size(); ++i)
      result.venues_raw.scores[kept_venues[i]] = nu.scores[i];
  } else {
    result.group_scores = result.gamma.gamma;
    result.venues_raw.scores = nu.scores;
  }
  result.venues_normalized = normalize_max_one(result.venues_raw);
  return result;
}

}  // namespace pscore
