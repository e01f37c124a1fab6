#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ganstab/common.hpp"

namespace ganstab::nn {

// Dense row-major matrix of doubles. Rows are samples throughout the
// code base; a batch of b 12-feature grid samples is a [b x 12] Matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double* row(std::size_t r) { return data_.data() + r * cols_; }
  const double* row(std::size_t r) const { return data_.data() + r * cols_; }

  std::vector<double>& values() { return data_; }
  const std::vector<double>& values() const { return data_; }

  void fill(double v) { data_.assign(data_.size(), v); }
  bool all_finite() const;
  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// C = A * B            with A [m x k], B [k x n]
Matrix mul_nn(const Matrix& a, const Matrix& b);
// C = A * B^T          with A [m x k], B [n x k]
Matrix mul_nt(const Matrix& a, const Matrix& b);
// C = A^T * B          with A [k x m], B [k x n]
Matrix mul_tn(const Matrix& a, const Matrix& b);

Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
void add_in_place(Matrix& a, const Matrix& b);
void scale_in_place(Matrix& a, double s);
void add_row_vector(Matrix& a, const std::vector<double>& v);

double l2_row_distance(const Matrix& a, std::size_t ra, const Matrix& b, std::size_t rb);

}  // namespace ganstab::nn
