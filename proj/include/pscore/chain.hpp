#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pscore/counts.hpp"
#include "pscore/matrix.hpp"

namespace pscore {

inline constexpr double kRowSumTolerance = 1e-9;

/// Bipartite reputation chain between reference groups and venues.
///
/// The full (T+V)-state chain alternates between the two blocks and is never
/// materialized; `alpha` carries venue -> group transitions and `beta`
/// group -> venue transitions.
struct ReputationChain {
  std::vector<std::string> group_names;
  std::vector<std::string> venue_names;
  /// V x T: share of venue j's papers that came from group w.
  Matrix alpha;
  /// T x V: d * volume + (1 - d) * breadth.
  Matrix beta;
  double d = 0.5;
  /// D(v_j) / sum_k D(v_k).
  std::vector<double> breadth;
};

Matrix build_alpha(const CountsTable& counts);

/// Throws ParameterError unless 0 <= d <= 1.
Matrix build_beta(const CountsTable& counts, double d);

std::vector<double> build_breadth(const CountsTable& counts);

/// Assembles and validates both blocks. Row-sum drift beyond
/// kRowSumTolerance raises InternalError.
ReputationChain build_chain(const CountsTable& counts, double d);

/// T x T group-to-group chain beta * alpha.
Matrix build_reduced(const ReputationChain& chain);

struct Connectivity {
  bool irreducible = true;
  /// Group index sets, one per connected component, each sorted; components
  /// ordered by their smallest group index. Empty when irreducible.
  std::vector<std::vector<std::size_t>> components;
};

/// For d < 1 the breadth term links every pair of groups. At d = 1 the
/// bipartite graph of nonzero counts decides.
Connectivity check_irreducible(const ReputationChain& chain);

/// Same answer from the counts alone, plus the venues of each component.
struct Component {
  std::vector<std::size_t> groups;
  std::vector<std::size_t> venues;
};
std::vector<Component> bipartite_components(const CountsTable& counts);

}  // namespace pscore
