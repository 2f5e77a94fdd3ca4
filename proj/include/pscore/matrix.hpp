#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pscore {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) noexcept {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  std::span<double> row(std::size_t r) noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Largest |1 - sum(row)| over all rows.
double max_row_sum_error(const Matrix& m);

/// Row vector times matrix: result[c] = sum_r x[r] * m(r, c).
std::vector<double> left_multiply(std::span<const double> x, const Matrix& m);

/// Max-norm of a - b. Both spans must have equal length.
double max_abs_diff(std::span<const double> a, std::span<const double> b);

}  // namespace pscore
