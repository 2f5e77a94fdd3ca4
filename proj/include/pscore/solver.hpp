#pragma once

#include <cstddef>
#include <vector>

#include "pscore/matrix.hpp"

namespace pscore {

enum class SolveMethod { gth, power };

struct StationaryDistribution {
  std::vector<double> gamma;
  /// max-norm of gamma * P - gamma, measured on the input matrix.
  double residual = 0.0;
  SolveMethod method = SolveMethod::gth;
  std::size_t iterations = 0;
};

/// Stationary vector of an irreducible row-stochastic matrix by
/// Grassmann-Taksar-Heyman state reduction (last state first).
///
/// The reduction never subtracts: the mass leaving state n is the sum of its
/// off-diagonal row entries rather than 1 - p(n, n). Throws ParameterError
/// for non-square or non-stochastic input, ReducibleChainError when a state
/// other than the first is left with no off-diagonal mass.
StationaryDistribution gth_steady_state(const Matrix& p);

/// gamma <- gamma * P from the uniform vector until the max-norm change is
/// at most `tol`. Throws ConvergenceError after `max_iters` steps.
StationaryDistribution power_iteration(const Matrix& p, double tol,
                                       std::size_t max_iters);

/// max-norm of gamma * P - gamma.
double stationarity_residual(const Matrix& p, const std::vector<double>& gamma);

}  // namespace pscore
