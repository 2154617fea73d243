#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace actprompt {

// Dense row-major 2-D double tensor. Row vectors are 1xC, scalars 1x1.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int rows, int cols);  // zero-filled

  static Tensor zeros(int rows, int cols) { return Tensor(rows, cols); }
  static Tensor full(int rows, int cols, double value);
  static Tensor scalar(double value) { return full(1, 1, value); }
  static Tensor row_vector(const std::vector<double>& values);
  static Tensor from_rows(int rows, int cols, const std::vector<double>& values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double* row_data(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const double* row_data(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }

  bool same_shape(const Tensor& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
  bool all_finite() const;
  double item() const;  // requires 1x1

  void fill(double value);
  Tensor transposed() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

bool bitwise_equal(const Tensor& a, const Tensor& b);

}  // namespace actprompt
