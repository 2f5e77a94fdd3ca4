#include "pscore/solver.hpp"

#include <cmath>
#include <string>

#include "pscore/chain.hpp"
#include "pscore/error.hpp"

namespace pscore {

namespace {

void require_stochastic(const Matrix& p) {
  if (p.rows() == 0 || p.rows() != p.cols())
    throw ParameterError("transition matrix must be square and nonempty");
  for (std::size_t r = 0; r < p.rows(); ++r) {
    double sum = 0.0;
    for (double x : p.row(r)) {
      if (!(x >= 0.0))
        throw ParameterError("negative transition probability in row " +
                             std::to_string(r));
      sum += x;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance)
      throw ParameterError("row " + std::to_string(r) + " sums to " +
                           std::to_string(sum));
  }
}

void normalize(std::vector<double>& x) {
  double total = 0.0;
  for (double v : x) total += v;
  for (double& v : x) v /= total;
}

}  // namespace

double stationarity_residual(const Matrix& p, const std::vector<double>& gamma) {
  return max_abs_diff(left_multiply(gamma, p), gamma);
}

StationaryDistribution gth_steady_state(const Matrix& p) {
  require_stochastic(p);
  const std::size_t n = p.rows();
  Matrix a = p;

  // Reduction: fold state k into states 0..k-1.
  for (std::size_t k = n - 1; k > 0; --k) {
    double out_mass = 0.0;
    for (std::size_t j = 0; j < k; ++j) out_mass += a(k, j);
    if (!(out_mass > 0.0))
      throw ReducibleChainError(
          k, "state " + std::to_string(k) +
                 " has no transitions to lower states; chain is reducible");
    for (std::size_t i = 0; i < k; ++i) a(i, k) /= out_mass;
    for (std::size_t i = 0; i < k; ++i) {
      const double via = a(i, k);
      if (via == 0.0) continue;
      for (std::size_t j = 0; j < k; ++j) a(i, j) += via * a(k, j);
    }
  }

  // Back-substitution.
  StationaryDistribution result;
  result.method = SolveMethod::gth;
  result.gamma.assign(n, 0.0);
  result.gamma[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    double mass = 0.0;
    for (std::size_t i = 0; i < k; ++i) mass += result.gamma[i] * a(i, k);
    result.gamma[k] = mass;
  }
  normalize(result.gamma);
  result.residual = stationarity_residual(p, result.gamma);
  return result;
}

StationaryDistribution power_iteration(const Matrix& p, double tol,
                                       std::size_t max_iters) {
  require_stochastic(p);
  const std::size_t n = p.rows();
  std::vector<double> gamma(n, 1.0 / static_cast<double>(n));
  double change = 0.0;
  for (std::size_t it = 1; it <= max_iters; ++it) {
    std::vector<double> next = left_multiply(gamma, p);
    normalize(next);
    change = max_abs_diff(next, gamma);
    gamma = std::move(next);
    if (change <= tol) {
      StationaryDistribution result;
      result.method = SolveMethod::power;
      result.iterations = it;
      result.residual = stationarity_residual(p, gamma);
      result.gamma = std::move(gamma);
      return result;
    }
  }
  throw ConvergenceError(change, "power iteration did not converge in " +
                                     std::to_string(max_iters) +
                                     " iterations (last change " +
                                     std::to_string(change) + ")");
}

}  // namespace pscore
