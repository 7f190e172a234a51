#include "heartlab/matrix.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace heartlab {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw std::invalid_argument("bad rational: " + s);
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(r, c);
  std::size_t i = 0;
  for (auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix Matrix::column(const std::vector<Rational>& entries) {
  Matrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

bool Matrix::is_zero() const {
  for (auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw std::out_of_range("set_block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix out(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, cols[j]);
  return out;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (auto& p : parts) {
    if (p.rows_ != rows) throw std::invalid_argument("hstack row mismatch");
    cols += p.cols_;
  }
  Matrix out(rows, cols);
  std::size_t c = 0;
  for (auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols_;
  }
  return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (auto& p : parts) {
    if (p.cols_ != cols) throw std::invalid_argument("vstack column mismatch");
    rows += p.rows_;
  }
  Matrix out(rows, cols);
  std::size_t r = 0;
  for (auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows_;
  }
  return out;
}

Matrix Matrix::block_diagonal(const std::vector<Matrix>& parts) {
  std::size_t rows = 0, cols = 0;
  for (auto& p : parts) {
    rows += p.rows_;
    cols += p.cols_;
  }
  Matrix out(rows, cols);
  std::size_t r = 0, c = 0;
  for (auto& p : parts) {
    out.set_block(r, c, p);
    r += p.rows_;
    c += p.cols_;
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sub shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator-(Matrix a) {
  for (auto& x : a.data_) x = -x;
  return a;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix multiply shape");
  Matrix out(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) == 0) continue;
        t = x * y;
        out(i, j) += t;
      }
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  Rational f;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> pivot(n, false);
  for (auto c : e.pivots) pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) free.push_back(c);
  Matrix basis(n, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], k) = -e.reduced(i, free[k]);
  }
  return basis;
}

Matrix left_nullspace(const Matrix& m) { return nullspace(m.transpose()).transpose(); }

std::vector<std::size_t> independent_columns(const Matrix& m) { return row_reduce(m).pivots; }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape");
  const std::size_t n = a.cols(), k = b.cols();
  RowEchelon e = row_reduce(Matrix::hstack({a, b}, a.rows()));
  std::size_t rank_a = 0;
  for (auto c : e.pivots) {
    if (c >= n) return std::nullopt;
    ++rank_a;
  }
  Matrix x(n, k);
  for (std::size_t i = 0; i < rank_a; ++i)
    for (std::size_t j = 0; j < k; ++j) x(e.pivots[i], j) = e.reduced(i, n + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows()));
}

CoordinateMap::CoordinateMap(Matrix basis) : basis_(std::move(basis)) {
  rows_ = independent_columns(basis_.transpose());
  if (rows_.size() != basis_.cols()) throw std::invalid_argument("coordinate basis is dependent");
  Matrix square(rows_.size(), basis_.cols());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < basis_.cols(); ++j) square(i, j) = basis_(rows_[i], j);
  inverse_rows_ = *inverse(square);
}

Matrix CoordinateMap::coordinates(const Matrix& v) const {
  Matrix picked(rows_.size(), v.cols());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) picked(i, j) = v(rows_[i], j);
  return inverse_rows_ * picked;
}

bool CoordinateMap::in_span(const Matrix& v) const { return basis_ * coordinates(v) == v; }

}  // namespace heartlab
