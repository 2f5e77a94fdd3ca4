#include "pscore/scoring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "pscore/names.hpp"

namespace pscore {

namespace {

class NameIndex {
 public:
  explicit NameIndex(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i)
      index_.emplace(fold_key(names[i]), i);
  }

  std::size_t find(const std::string& name) const {
    auto it = index_.find(fold_key(name));
    return it == index_.end() ? ScoreVector::npos : it->second;
  }

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

AuthorScore score_with_index(const std::vector<VenueCount>& pubs,
                             const ScoreVector& nu, const NameIndex& index) {
  AuthorScore result;
  std::set<std::string> unmatched;
  for (const auto& [venue, count] : pubs) {
    if (count < 0)
      throw ValidationError(0, "count",
                            "negative publication count at venue '" + venue + "'");
    const std::size_t j = index.find(venue);
    if (j == ScoreVector::npos) {
      unmatched.insert(normalize_name(venue));
      continue;
    }
    result.score += nu.scores[j] * static_cast<double>(count);
  }
  result.unmatched_venues.assign(unmatched.begin(), unmatched.end());
  return result;
}

}  // namespace

std::size_t ScoreVector::find(const std::string& name) const {
  const std::string key = fold_key(name);
  for (std::size_t i = 0; i < names.size(); ++i)
    if (fold_key(names[i]) == key) return i;
  return npos;
}

Ranking make_ranking(const std::vector<std::string>& names,
                     const std::vector<double>& scores) {
  if (names.size() != scores.size())
    throw InternalError("ranking names and scores differ in length");
  std::vector<std::string> keys(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) keys[i] = fold_key(names[i]);

  std::vector<std::size_t> order(names.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    return names[a] < names[b];
  });

  Ranking ranking;
  ranking.entries.reserve(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t i = order[pos];
    std::size_t rank = pos + 1;
    if (pos > 0 && scores[order[pos - 1]] == scores[i])
      rank = ranking.entries.back().rank;
    ranking.entries.push_back({rank, names[i], scores[i]});
  }
  return ranking;
}

Ranking make_ranking(const ScoreVector& scores) {
  return make_ranking(scores.names, scores.scores);
}

ScoreVector venue_scores(const StationaryDistribution& gamma,
                         const ReputationChain& chain) {
  if (gamma.gamma.size() != chain.beta.rows() ||
      chain.venue_names.size() != chain.beta.cols())
    throw InternalError("group reputation and chain dimensions disagree");
  ScoreVector nu;
  nu.kind = EntityKind::venue;
  nu.normalization = Normalization::raw;
  nu.names = chain.venue_names;
  nu.scores = left_multiply(gamma.gamma, chain.beta);
  return nu;
}

ScoreVector normalize_max_one(const ScoreVector& scores) {
  double top = 0.0;
  for (double s : scores.scores) top = std::max(top, s);
  if (!(top > 0.0))
    throw DegenerateInputError("cannot normalize: no score is positive");
  ScoreVector out = scores;
  out.normalization = Normalization::max_one;
  for (double& s : out.scores) s /= top;
  return out;
}

double group_consistency_check(const StationaryDistribution& gamma,
                               const ScoreVector& nu,
                               const ReputationChain& chain) {
  if (nu.scores.size() != chain.alpha.rows() ||
      gamma.gamma.size() != chain.alpha.cols())
    throw InternalError("consistency check dimensions disagree");
  return max_abs_diff(gamma.gamma, left_multiply(nu.scores, chain.alpha));
}

AuthorScore author_score(const std::vector<VenueCount>& pubs,
                         const ScoreVector& nu) {
  return score_with_index(pubs, nu, NameIndex(nu.names));
}

AuthorRanking rank_authors(
    const std::map<std::string, std::vector<VenueCount>>& author_pubs,
    const ScoreVector& nu) {
  const NameIndex index(nu.names);
  std::vector<std::string> names;
  std::vector<double> raw;
  std::map<std::string, std::size_t> unmatched;  // venue -> authors affected
  for (const auto& [author, pubs] : author_pubs) {
    const AuthorScore s = score_with_index(pubs, nu, index);
    names.push_back(author);
    raw.push_back(s.score);
    for (const auto& v : s.unmatched_venues) ++unmatched[v];
  }

  const double top =
      raw.empty() ? 0.0 : *std::max_element(raw.begin(), raw.end());
  if (!(top > 0.0))
    throw DegenerateInputError("no author has a positive score");

  std::vector<double> relative(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) relative[i] = raw[i] / top;

  AuthorRanking result;
  result.ranking = make_ranking(names, relative);
  std::unordered_map<std::string, double> raw_by_name;
  for (std::size_t i = 0; i < names.size(); ++i) raw_by_name[names[i]] = raw[i];
  for (const auto& e : result.ranking.entries)
    result.raw_scores.push_back(raw_by_name.at(e.name));
  for (const auto& [venue, n] : unmatched)
    result.warnings.push_back("venue '" + venue +
                              "' has no P-score; ignored for " +
                              std::to_string(n) + " author(s)");
  return result;
}

Ranking rank_groups(const StationaryDistribution& gamma,
                    const std::vector<std::string>& group_names) {
  return make_ranking(group_names, gamma.gamma);
}

}  // namespace pscore
