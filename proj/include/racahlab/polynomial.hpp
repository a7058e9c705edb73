#pragma once

// Univariate polynomials over an exact field.

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "racahlab/errors.hpp"
#include "racahlab/matrix.hpp"

namespace racahlab {

/// Dense coefficient list, lowest degree first, no trailing zeros.
template <typename Field>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Field> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Field> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Field& c) { return Polynomial(std::vector<Field>{c}); }
  static Polynomial x() { return Polynomial(std::vector<Field>{Field(0), Field(1)}); }
  /// x - r
  static Polynomial linear_root(const Field& r) { return Polynomial(std::vector<Field>{-r, Field(1)}); }
  static Polynomial from_roots(const std::vector<Field>& roots) {
    Polynomial p = constant(Field(1));
    for (const auto& r : roots) p = p * linear_root(r);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Field>& coeffs() const { return c_; }
  Field coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Field(); }
  const Field& leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Field inv = Field(1) / leading();
    std::vector<Field> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) out[k] = c_[k] * inv;
    return Polynomial(std::move(out));
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Field> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Field(static_cast<long long>(k));
    return Polynomial(std::move(out));
  }

  Field operator()(const Field& x) const {
    Field acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  /// Horner evaluation at a square matrix.
  Matrix<Field> operator()(const Matrix<Field>& m) const {
    if (!m.is_square()) throw DimensionMismatch("polynomial evaluated at non-square matrix");
    Matrix<Field> acc(m.rows(), m.cols());
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * m + Matrix<Field>::scalar(m.rows(), c_[k]);
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Field> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Field> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Field> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }

  /// Quotient and remainder; throws on division by the zero polynomial.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Field> rem = a.c_;
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Field> q(a.c_.size() - b.c_.size() + 1);
    Field inv = Field(1) / b.leading();
    for (std::size_t k = q.size(); k-- > 0;) {
      Field t = rem[k + b.c_.size() - 1] * inv;
      q[k] = t;
      if (t.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= t * b.c_[j];
    }
    rem.resize(b.c_.size() - 1);
    return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Monic gcd; gcd(0, 0) = 0.
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Product of the distinct irreducible factors, monic.
  Polynomial square_free_part() const {
    if (degree() <= 0) return monic();
    Polynomial g = gcd(*this, derivative());
    return divmod(*this, g).first.monic();
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[k].to_string() + ")";
      if (k >= 1) s += "*" + var;
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

 private:
  std::vector<Field> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

using ExactPolynomial = Polynomial<GaussianRational>;

}  // namespace racahlab
