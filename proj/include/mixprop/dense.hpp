/*
Copyright (c) 2026 The mixprop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mixprop {

// Row-major dense f64 matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<double> values() noexcept { return data_; }
  std::span<const double> values() const noexcept { return data_; }

  void fill(double v);

  // Adds a * row `src_row` of `src` into row `dst_row` of this matrix.
  void add_row_scaled(std::size_t dst_row, const DenseMatrix& src, std::size_t src_row, double a);

  // Adds a * this->row(r) into `out`. Same accumulate shape as FeatureMatrix.
  void accumulate_row(std::size_t r, double a, std::span<double> out) const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// out = a * b  (a: n x k, b: k x m)
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

// out = a^T * b  (a: n x k, b: n x m) -> k x m
DenseMatrix matmul_at_b(const DenseMatrix& a, const DenseMatrix& b);

// out = a * b^T  (a: n x k, b: m x k) -> n x m
DenseMatrix matmul_a_bt(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace mixprop
