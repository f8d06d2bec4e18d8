#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sdeboot/errors.hpp"

namespace sdeboot {

using Vector = std::vector<double>;

// Small dense row-major matrix. Parameter dimensions here are tiny (a few at
// most), so no effort is spent on blocking or vectorization.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

  Vector row(std::size_t i) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator*=(double s);

  // y = M x
  Vector apply(const Vector& x) const;

  // Solves M x = rhs by Gaussian elimination with partial pivoting.
  // Throws errc::singular_normalization when the pivot collapses.
  Vector solve(const Vector& rhs) const;

  Matrix inverse() const;

private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

inline double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// a += s * b
inline void axpy(Vector& a, double s, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

Matrix outer(const Vector& a, const Vector& b);

}  // namespace sdeboot
