#include "actprompt/core/tensor.hpp"

#include <cmath>
#include <cstring>

#include "actprompt/core/errors.hpp"

namespace actprompt {

Tensor::Tensor(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0) {
  if (rows < 0 || cols < 0) throw ConfigError("tensor dimensions must be nonnegative");
}

Tensor Tensor::full(int rows, int cols, double value) {
  Tensor t(rows, cols);
  t.fill(value);
  return t;
}

Tensor Tensor::row_vector(const std::vector<double>& values) {
  Tensor t(1, static_cast<int>(values.size()));
  std::memcpy(t.data(), values.data(), values.size() * sizeof(double));
  return t;
}

Tensor Tensor::from_rows(int rows, int cols, const std::vector<double>& values) {
  if (values.size() != static_cast<std::size_t>(rows) * cols) {
    throw ConfigError("from_rows: value count does not match shape");
  }
  Tensor t(rows, cols);
  std::memcpy(t.data(), values.data(), values.size() * sizeof(double));
  return t;
}

bool Tensor::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double Tensor::item() const {
  if (rows_ != 1 || cols_ != 1) throw ConfigError("item() requires a 1x1 tensor");
  return data_[0];
}

void Tensor::fill(double value) {
  for (double& v : data_) v = value;
}

Tensor Tensor::transposed() const {
  Tensor t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool bitwise_equal(const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b)) return false;
  return std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace actprompt
