#pragma once

// The ground field Q(i).

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "racahlab/rational.hpp"

namespace racahlab {

/// re + im*i with exact rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  static GaussianRational frac(long long p, long long q) { return Rational(p, q); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return GaussianRational(a.re_ + b.re_);
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return GaussianRational(a.re_ - b.re_);
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero()) {
      if (b.im_.is_zero()) return GaussianRational(a.re_ * b.re_);
      return {a.re_ * b.re_, a.re_ * b.im_};
    }
    if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero in Q(i)");
    if (b.im_.is_zero()) return {a.re_ / b.re_, a.im_ / b.re_};
    return a * b.inverse();
  }

  GaussianRational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(i)");
    if (im_.is_zero()) return GaussianRational(re_.inverse());
    Rational n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Lexicographic on (re, im); a total order for use as a map key, not a field order.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    if (auto c = a.re_ <=> b.re_; c != 0) return c;
    return a.im_ <=> b.im_;
  }

  /// Text token: "p/q", "p/q+r/s*i" or "p/q-r/s*i".
  std::string to_string() const {
    std::string s = re_.to_string();
    if (im_.is_zero()) return s;
    if (im_.sign() > 0) return s + "+" + im_.to_string() + "*i";
    return s + "-" + (-im_).to_string() + "*i";
  }

  static GaussianRational parse(std::string_view tok) {
    if (tok.empty()) throw ParseError("empty scalar token");
    if (tok.back() != 'i') return GaussianRational(Rational::parse(tok));
    if (tok.size() < 3 || tok.substr(tok.size() - 2) != "*i")
      throw ParseError("malformed scalar token '" + std::string(tok) + "'");
    std::string_view body = tok.substr(0, tok.size() - 2);
    // split at the sign that starts the imaginary part (not a leading sign)
    std::size_t cut = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;)
      if (body[k] == '+' || body[k] == '-') {
        cut = k;
        break;
      }
    if (cut == std::string_view::npos)
      throw ParseError("malformed scalar token '" + std::string(tok) + "'");
    Rational re = Rational::parse(body.substr(0, cut));
    Rational im = Rational::parse(body.substr(cut + 1));
    if (body[cut] == '-') im = -im;
    return {std::move(re), std::move(im)};
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

 private:
  Rational re_;
  Rational im_;
};

using GR = GaussianRational;

}  // namespace racahlab
