#pragma once

// Exact linear-algebra kernels over Q(i): echelon forms, subspaces, minimal
// polynomials, eigenspaces and span saturation of matrix algebras.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "racahlab/errors.hpp"
#include "racahlab/matrix.hpp"
#include "racahlab/polynomial.hpp"

namespace racahlab {

template <typename Field>
using Vec = std::vector<Field>;

template <typename Field>
bool is_zero_vector(const Vec<Field>& v) {
  return std::all_of(v.begin(), v.end(), [](const Field& x) { return x.is_zero(); });
}

/// Reduced row echelon form and rank (leading entries 1, zeros above and below pivots).
template <typename Field>
std::pair<Matrix<Field>, std::size_t> rref(Matrix<Field> m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != rank)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(rank, k));
    Field inv = Field(1) / m(rank, c);
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(rank, k).is_zero()) m(rank, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c).is_zero()) continue;
      Field f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(rank, k).is_zero()) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return {std::move(m), rank};
}

template <typename Field>
std::size_t rank(const Matrix<Field>& m) {
  return rref(m).second;
}

/// Basis of {v : m v = 0}, one vector per free column.
template <typename Field>
std::vector<Vec<Field>> kernel(const Matrix<Field>& m) {
  auto [r, rk] = rref(m);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t row = 0; row < rk; ++row) {
    std::size_t c = 0;
    while (r(row, c).is_zero()) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<Vec<Field>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<Field> v(m.cols());
    v[f] = Field(1);
    for (std::size_t row = 0; row < rk; ++row) v[pivot_col[row]] = -r(row, f);
    out.push_back(std::move(v));
  }
  return out;
}

/// Solves basis * X = rhs column by column; nullopt when some column is outside
/// the column span. Columns of `basis` must be independent.
template <typename Field>
std::optional<Matrix<Field>> solve_columns(const Matrix<Field>& basis, const Matrix<Field>& rhs) {
  if (basis.rows() != rhs.rows()) throw DimensionMismatch("solve_columns row mismatch");
  const std::size_t k = basis.cols(), m = rhs.cols();
  Matrix<Field> aug(basis.rows(), k + m);
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    for (std::size_t c = 0; c < k; ++c) aug(r, c) = basis(r, c);
    for (std::size_t c = 0; c < m; ++c) aug(r, k + c) = rhs(r, c);
  }
  auto [red, rk] = rref(std::move(aug));
  if (rk < k) throw DimensionMismatch("solve_columns: basis columns are dependent");
  for (std::size_t r = 0; r < k; ++r)
    if (red(r, r) != Field(1)) throw DimensionMismatch("solve_columns: basis columns are dependent");
  for (std::size_t r = k; r < red.rows(); ++r)
    for (std::size_t c = k; c < k + m; ++c)
      if (!red(r, c).is_zero()) return std::nullopt;
  Matrix<Field> x(k, m);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < m; ++c) x(r, c) = red(r, k + c);
  return x;
}

/// Incrementally maintained reduced echelon basis of a span of vectors.
///
/// Every stored row has a 1 at its pivot and zeros at every other row's
/// pivot, so membership is a single reduction pass in any order.
template <typename Field>
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient) : n_(ambient) {}

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }

  /// Residual of v modulo the span.
  Vec<Field> reduce(Vec<Field> v) const {
    if (v.size() != n_) throw DimensionMismatch("vector length does not match span ambient dimension");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      Field c = v[piv_[k]];
      if (c.is_zero()) continue;
      for (std::size_t j : nz_[k]) v[j] -= c * rows_[k][j];
    }
    return v;
  }

  bool contains(const Vec<Field>& v) const { return is_zero_vector(reduce(v)); }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(const Vec<Field>& v) {
    Vec<Field> r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && r[p].is_zero()) ++p;
    if (p == n_) return false;
    Field inv = Field(1) / r[p];
    for (auto& x : r)
      if (!x.is_zero()) x *= inv;
    std::vector<std::size_t> nz = nonzeros(r);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      Field c = rows_[k][p];
      if (c.is_zero()) continue;
      for (std::size_t j : nz) rows_[k][j] -= c * r[j];
      nz_[k] = nonzeros(rows_[k]);
    }
    rows_.push_back(std::move(r));
    piv_.push_back(p);
    nz_.push_back(std::move(nz));
    return true;
  }

  /// Rows sorted by pivot: the canonical reduced echelon basis.
  std::vector<Vec<Field>> canonical_basis() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return piv_[a] < piv_[b]; });
    std::vector<Vec<Field>> out;
    out.reserve(order.size());
    for (std::size_t k : order) out.push_back(rows_[k]);
    return out;
  }

 private:
  std::size_t n_;
  std::vector<Vec<Field>> rows_;
  std::vector<std::size_t> piv_;
  std::vector<std::vector<std::size_t>> nz_;

  static std::vector<std::size_t> nonzeros(const Vec<Field>& v) {
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) nz.push_back(j);
    return nz;
  }
};

/// A linear subspace of Field^n stored by its canonical reduced echelon basis.
template <typename Field>
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const std::vector<Vec<Field>>& spanning) : n_(ambient) {
    SpanBuilder<Field> sb(ambient);
    for (const auto& v : spanning) sb.insert(v);
    basis_ = sb.canonical_basis();
  }

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec<Field>>& basis() const { return basis_; }

  bool contains(const Vec<Field>& v) const {
    SpanBuilder<Field> sb(n_);
    for (const auto& b : basis_) sb.insert(b);
    return sb.contains(v);
  }

  /// n x dim matrix whose columns are the basis vectors.
  Matrix<Field> as_columns() const { return from_columns(basis_, n_); }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

 private:
  std::size_t n_ = 0;
  std::vector<Vec<Field>> basis_;
};

using ExactSubspace = Subspace<GaussianRational>;

/// Monic least-degree p with p(M) = 0: the first linear dependence among I, M, M^2, ...
template <typename Field>
Polynomial<Field> minimal_polynomial(const Matrix<Field>& m) {
  if (!m.is_square()) throw DimensionMismatch("minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  const std::size_t len = n * n;
  // rows carry the power-combination that produced them
  std::vector<Vec<Field>> rows, tails;
  std::vector<std::size_t> piv;
  Matrix<Field> power_k = Matrix<Field>::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vec<Field> v = power_k.data();
    Vec<Field> tail(n + 1);
    tail[k] = Field(1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Field c = v[piv[r]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < len; ++j)
        if (!rows[r][j].is_zero()) v[j] -= c * rows[r][j];
      for (std::size_t j = 0; j <= n; ++j)
        if (!tails[r][j].is_zero()) tail[j] -= c * tails[r][j];
    }
    std::size_t p = 0;
    while (p < len && v[p].is_zero()) ++p;
    if (p == len) {
      tail.resize(k + 1);
      return Polynomial<Field>(std::move(tail));
    }
    Field inv = Field(1) / v[p];
    for (auto& x : v) x *= inv;
    for (auto& x : tail) x *= inv;
    rows.push_back(std::move(v));
    tails.push_back(std::move(tail));
    piv.push_back(p);
    power_k = power_k * m;
  }
  throw Error("minimal polynomial search exceeded matrix size");  // Cayley-Hamilton forbids this
}

template <typename Field>
struct Eigenspace {
  Field eigenvalue;
  Subspace<Field> space;
};

template <typename Field>
struct EigenSplit {
  std::vector<Eigenspace<Field>> spaces;
  bool diagonalizable = false;
};

/// Eigenspaces of m for the supplied roots, which must be exactly the
/// distinct roots of the minimal polynomial.
template <typename Field>
EigenSplit<Field> eigen_split(const Matrix<Field>& m, const std::vector<Field>& roots) {
  Polynomial<Field> p = minimal_polynomial(m);
  std::set<Field> distinct(roots.begin(), roots.end());
  if (distinct.size() != roots.size()) throw RootsMismatch("eigenvalue list has repeated entries");
  for (const auto& r : roots)
    if (!p(r).is_zero()) throw RootsMismatch("supplied value " + r.to_string() + " is not an eigenvalue");
  if (p.square_free_part().degree() != static_cast<int>(roots.size()))
    throw RootsMismatch("supplied eigenvalues miss a root of the minimal polynomial");
  EigenSplit<Field> out;
  std::size_t total = 0;
  for (const auto& r : roots) {
    Matrix<Field> shifted = m - Matrix<Field>::scalar(m.rows(), r);
    Subspace<Field> sp(m.rows(), kernel(shifted));
    total += sp.dim();
    out.spaces.push_back({r, std::move(sp)});
  }
  out.diagonalizable = total == m.rows();
  return out;
}

/// Linear basis of the unital algebra generated by square matrices.
template <typename Field>
struct AlgebraClosure {
  std::size_t dim = 0;
  std::vector<Matrix<Field>> basis;
  SpanBuilder<Field> span{0};

  bool contains(const Matrix<Field>& m) const { return span.contains(m.data()); }
};

/// Span saturation: seed with I and the generators, then left-multiply each
/// new basis element by every generator until nothing new appears. A span that
/// contains I and is closed under left multiplication by the generators is
/// the whole generated algebra.
template <typename Field>
AlgebraClosure<Field> algebra_closure(const std::vector<Matrix<Field>>& gens, std::size_t n) {
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("algebra generators must be n x n");
  AlgebraClosure<Field> out;
  out.span = SpanBuilder<Field>(n * n);
  std::deque<std::size_t> queue;
  auto offer = [&](Matrix<Field> m) {
    if (out.span.insert(m.data())) {
      out.basis.push_back(std::move(m));
      queue.push_back(out.basis.size() - 1);
    }
  };
  offer(Matrix<Field>::identity(n));
  for (const auto& g : gens) offer(g);
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Matrix<Field> prod = g * out.basis[k];
      offer(std::move(prod));
    }
  }
  out.dim = out.basis.size();
  return out;
}

}  // namespace racahlab
