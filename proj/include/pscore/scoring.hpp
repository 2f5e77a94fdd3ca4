#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pscore/chain.hpp"
#include "pscore/error.hpp"
#include "pscore/solver.hpp"

namespace pscore {

enum class EntityKind { venue, group, author };
enum class Normalization { raw, max_one };

struct ScoreVector {
  EntityKind kind = EntityKind::venue;
  std::vector<std::string> names;
  std::vector<double> scores;
  Normalization normalization = Normalization::raw;

  /// Index of a name by case-folded comparison, or npos.
  std::size_t find(const std::string& name) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct RankEntry {
  std::size_t rank = 0;
  std::string name;
  double score = 0.0;

  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

/// Competition ranking ("1224"): scores descending, equal scores share a
/// rank, ties listed by case-folded name.
struct Ranking {
  std::vector<RankEntry> entries;
  static constexpr const char* tie_rule =
      "competition ranking; exact-equal scores tied, ordered by case-folded name";
};

Ranking make_ranking(const std::vector<std::string>& names,
                     const std::vector<double>& scores);
Ranking make_ranking(const ScoreVector& scores);

/// nu = gamma * beta.
ScoreVector venue_scores(const StationaryDistribution& gamma,
                         const ReputationChain& chain);

/// Divides by the maximum; throws DegenerateInputError when all are zero.
ScoreVector normalize_max_one(const ScoreVector& scores);

/// max-norm of gamma - nu * alpha.
double group_consistency_check(const StationaryDistribution& gamma,
                               const ScoreVector& nu,
                               const ReputationChain& chain);

using VenueCount = std::pair<std::string, long long>;

struct AuthorScore {
  double score = 0.0;
  /// Venues with no P-score; their publications contribute nothing.
  std::vector<std::string> unmatched_venues;
};

/// S = sum_j nu_j * N(a, v_j). Throws ValidationError on a negative count.
AuthorScore author_score(const std::vector<VenueCount>& pubs,
                         const ScoreVector& nu);

struct AuthorRanking {
  Ranking ranking;
  /// Raw S values in ranking order.
  std::vector<double> raw_scores;
  Warnings warnings;
};

/// R(a) = S_a / max S. Throws DegenerateInputError when every S_a is 0.
AuthorRanking rank_authors(
    const std::map<std::string, std::vector<VenueCount>>& author_pubs,
    const ScoreVector& nu);

Ranking rank_groups(const StationaryDistribution& gamma,
                    const std::vector<std::string>& group_names);

}  // namespace pscore
