#pragma once

// Dense exact matrices and their text format.

#include <cstddef>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "racahlab/errors.hpp"
#include "racahlab/gaussian.hpp"

namespace racahlab {

/// Row-major dense matrix over an exact field.
template <typename Field>
class Matrix {
 public:
  using value_type = Field;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Field>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) { return scalar(n, Field(1)); }
  static Matrix scalar(std::size_t n, const Field& c) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
  }
  static Matrix diagonal(const std::vector<Field>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Field>& data() const { return data_; }

  Field& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Field& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Field> row(std::size_t r) const {
    return std::vector<Field>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<Field> col(std::size_t c) const {
    std::vector<Field> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }
  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& x : data_) n += !x.is_zero();
    return n;
  }

  /// True iff the matrix equals its (0,0) entry times the identity.
  bool is_scalar() const {
    if (!is_square() || rows_ == 0) return false;
    const Field& c = (*this)(0, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k)
        if ((*this)(r, k) != (r == k ? c : Field())) return false;
    return true;
  }

  Field trace() const {
    require_square("trace");
    Field t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const Field& c) {
    for (auto& x : data_)
      if (!x.is_zero()) x *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Field& c) { return a *= c; }
  friend Matrix operator*(const Field& c, Matrix a) { return a *= c; }

  /// Product skipping zero entries of both factors; sparse operators stay cheap.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      Field* out = c.data_.data() + i * c.cols_;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Field& aik = a(i, k);
        if (aik.is_zero()) continue;
        const Field* brow = b.data_.data() + k * b.cols_;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!brow[j].is_zero()) out[j] += aik * brow[j];
      }
    }
    return c;
  }

  std::vector<Field> apply(const std::vector<Field>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<Field> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Field& a = (*this)(i, k);
        if (!a.is_zero() && !v[k].is_zero()) out[i] += a * v[k];
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Rows and columns selected by index lists, in the given order.
  Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix m(rs.size(), cs.size());
    for (std::size_t r = 0; r < rs.size(); ++r)
      for (std::size_t c = 0; c < cs.size(); ++c) m(r, c) = (*this)(rs[r], cs[c]);
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Field> data_;

  void require_square(const char* what) const {
    if (!is_square()) throw DimensionMismatch(std::string(what) + " needs a square matrix");
  }
  void same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch(std::string("shape mismatch in matrix ") + op);
  }
};

using ExactMatrix = Matrix<GaussianRational>;

template <typename Field>
Matrix<Field> commutator(const Matrix<Field>& x, const Matrix<Field>& y) {
  return x * y - y * x;
}

template <typename Field>
Matrix<Field> power(const Matrix<Field>& m, unsigned k) {
  Matrix<Field> r = Matrix<Field>::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

/// Matrix whose columns are the given vectors.
template <typename Field>
Matrix<Field> from_columns(const std::vector<std::vector<Field>>& cols, std::size_t n) {
  Matrix<Field> m(n, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != n) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

// Text format: "rows cols" then rows*cols whitespace-separated scalar tokens.

inline void write_matrix(std::ostream& os, const ExactMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).to_string();
    os << '\n';
  }
}

inline std::string to_text(const ExactMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

inline ExactMatrix read_matrix(std::istream& is) {
  long long rows = -1, cols = -1;
  if (!(is >> rows >> cols) || rows <= 0 || cols <= 0)
    throw ParseError("matrix header must be two positive integers 'rows cols'");
  ExactMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::string tok;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!(is >> tok)) throw ParseError("matrix body ended early");
      m(r, c) = GaussianRational::parse(tok);
    }
  return m;
}

inline ExactMatrix matrix_from_text(const std::string& s) {
  std::istringstream is(s);
  return read_matrix(is);
}

}  // namespace racahlab
