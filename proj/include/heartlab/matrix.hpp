#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace heartlab {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static Matrix column(const std::vector<Rational>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix col(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix select_columns(const std::vector<std::size_t>& cols) const;

  static Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows);
  static Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols);
  static Matrix block_diagonal(const std::vector<Matrix>& parts);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

// Columns form a basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m);
// Rows form a basis of {y : y m = 0}.
Matrix left_nullspace(const Matrix& m);
// Indices of a maximal independent set of columns, greedy from the left.
std::vector<std::size_t> independent_columns(const Matrix& m);
// Some x with a x = b, or nothing.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

// Coordinates with respect to a fixed basis (columns of `basis`, independent).
class CoordinateMap {
 public:
  CoordinateMap() = default;
  explicit CoordinateMap(Matrix basis);
  std::size_t dimension() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  // Assumes v lies in the span.
  Matrix coordinates(const Matrix& v) const;
  bool in_span(const Matrix& v) const;

 private:
  Matrix basis_;
  std::vector<std::size_t> rows_;
  Matrix inverse_rows_;
};

}  // namespace heartlab
