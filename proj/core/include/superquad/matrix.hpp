// Copyright 2026 The superquad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace superquad {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static Matrix identity(std::size_t n);
  /// Throws std::invalid_argument on ragged input.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const double> data() const { return data_; }
  std::vector<std::vector<double>> to_rows() const;

  Matrix transpose() const;
  double max_abs() const;
  double frobenius() const;
  double trace() const;
  /// Determinant by partial-pivot LU; square only.
  double determinant() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// max_ij |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Real symmetric matrix of order n >= 1 with finite entries. Immutable.
class SymMatrix {
 public:
  /// Entry-wise relative symmetry tolerance accepted at construction.
  static constexpr double kSymmetryTolerance = 1e-12;

  /// Validates squareness, finiteness and |a_ij - a_ji| <= 1e-12 (1 + |a_ij|),
  /// then stores the averaged matrix. Throws std::invalid_argument.
  explicit SymMatrix(const Matrix& m);

  static SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static SymMatrix identity(std::size_t n);
  static SymMatrix scalar(std::size_t n, double c);
  static SymMatrix diagonal(std::span<const double> d);
  static SymMatrix diagonal(std::initializer_list<double> d);

  /// U^T X U, computed on the upper triangle and mirrored.
  static SymMatrix congruence(const Matrix& u, const SymMatrix& x);
  /// Q diag(values) Q^T, computed on the upper triangle and mirrored.
  static SymMatrix from_spectrum(const Matrix& q, std::span<const double> values);

  std::size_t order() const { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }
  double max_abs() const { return m_.max_abs(); }
  double trace() const { return m_.trace(); }

  /// X + c I
  SymMatrix shifted(double c) const;

  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator-(const SymMatrix& a);
  friend SymMatrix operator*(double s, const SymMatrix& a);
  friend SymMatrix operator*(const SymMatrix& a, double s) { return s * a; }
  friend Matrix operator*(const SymMatrix& a, const SymMatrix& b) { return a.m_ * b.m_; }
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  struct Trusted {};
  SymMatrix(Matrix m, Trusted) : m_(std::move(m)) {}

  Matrix m_;
};

}  // namespace superquad
