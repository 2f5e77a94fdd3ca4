#pragma once

#include <vector>

#include "pscore/chain.hpp"
#include "pscore/counts.hpp"
#include "pscore/scoring.hpp"
#include "pscore/solver.hpp"

namespace pscore {

inline constexpr double kFixedPointTolerance = 1e-10;

struct PipelineOptions {
  double d = 0.5;
  /// At d = 1 with a disconnected group/venue graph, solve on the largest
  /// component instead of failing; everything else scores 0.
  bool allow_largest_component = false;
};

struct PipelineResult {
  CountsTable counts;
  /// Chain, reduced matrix and gamma of the solved part: the full problem,
  /// or the largest component when one was selected.
  ReputationChain chain;
  Matrix reduced;
  StationaryDistribution gamma;
  /// Over every group / venue of `counts`; excluded entities are 0.
  std::vector<double> group_scores;
  ScoreVector venues_raw;
  ScoreVector venues_normalized;
  double consistency_residual = 0.0;
  bool largest_component_only = false;
  Warnings warnings;
};

/// counts -> chain -> reduced chain -> GTH -> venue scores, with the
/// stationarity and group-consistency residuals asserted at
/// kFixedPointTolerance (InternalError otherwise). Throws DisconnectedError
/// for a reducible d = 1 chain unless the options allow falling back.
PipelineResult run_pipeline(const CountsTable& counts,
                            const PipelineOptions& options);

}  // namespace pscore
