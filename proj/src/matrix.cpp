#include "ganstab/matrix.hpp"

#include <cmath>

namespace ganstab::nn {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != m.cols()) throw ShapeError("from_rows: ragged rows");
    std::size_t c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

bool Matrix::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

Matrix mul_nn(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("mul_nn: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double* ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      const double* bk = b.row(k);
#pragma omp simd
      for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

Matrix mul_nt(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw ShapeError("mul_nt: inner dimensions differ");
  Matrix c(a.rows(), b.rows());
  const std::size_t k = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* ai = a.row(i);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      const double* bj = b.row(j);
      double acc = 0.0;
#pragma omp simd reduction(+ : acc)
      for (std::size_t t = 0; t < k; ++t) acc += ai[t] * bj[t];
      c(i, j) = acc;
    }
  }
  return c;
}

Matrix mul_tn(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("mul_tn: inner dimensions differ");
  Matrix c(a.cols(), b.cols());
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* bi = b.row(i);
    for (std::size_t m = 0; m < a.cols(); ++m) {
      const double aim = a(i, m);
      double* cm = c.row(m);
#pragma omp simd
      for (std::size_t j = 0; j < n; ++j) cm[j] += aim * bi[j];
    }
  }
  return c;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw ShapeError("add: shape mismatch");
  Matrix c = a;
  add_in_place(c, b);
  return c;
}

Matrix sub(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw ShapeError("sub: shape mismatch");
  Matrix c = a;
  double* p = c.data();
  const double* q = b.data();
  for (std::size_t i = 0; i < c.size(); ++i) p[i] -= q[i];
  return c;
}

void add_in_place(Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw ShapeError("add_in_place: shape mismatch");
  double* p = a.data();
  const double* q = b.data();
  for (std::size_t i = 0; i < a.size(); ++i) p[i] += q[i];
}

void scale_in_place(Matrix& a, double s) {
  for (double& v : a.values()) v *= s;
}

void add_row_vector(Matrix& a, const std::vector<double>& v) {
  if (v.size() != a.cols()) throw ShapeError("add_row_vector: length mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double* ai = a.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) ai[j] += v[j];
  }
}

double l2_row_distance(const Matrix& a, std::size_t ra, const Matrix& b, std::size_t rb) {
  if (a.cols() != b.cols()) throw ShapeError("l2_row_distance: width mismatch");
  const double* x = a.row(ra);
  const double* y = b.row(rb);
  double acc = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const double d = x[j] - y[j];
    acc += d * d;
  }
  return std::sqrt(acc);
}

}  // namespace ganstab::nn
