#include "pscore/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace pscore {

double max_row_sum_error(const Matrix& m) {
  double worst = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double sum = 0.0;
    for (double v : m.row(r)) sum += v;
    worst = std::max(worst, std::abs(1.0 - sum));
  }
  return worst;
}

std::vector<double> left_multiply(std::span<const double> x, const Matrix& m) {
  assert(x.size() == m.rows());
  std::vector<double> out(m.cols(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const double xr = x[r];
    if (xr == 0.0) continue;
    auto row = m.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) out[c] += xr * row[c];
  }
  return out;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace pscore
