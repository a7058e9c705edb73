#pragma once

// Exact rational numbers with an int64 fast path and a GMP overflow path.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "racahlab/errors.hpp"

namespace racahlab {

/// Reduced fraction p/q with q > 0.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// stored inline; anything larger lives in an owned mpq_class. Results are
/// demoted back to the inline form whenever they fit, so equality of two
/// Rationals never depends on which representation produced them.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {  // NOLINT(google-explicit-constructor)
    if (n == INT64_MIN) set_big(mpq_class(mpz_from(n)));
  }
  Rational(long long n, long long d) { assign_fraction(n, d); }
  explicit Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    set_big(std::move(c));
  }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_from(num_), mpz_from(den_));
  }
  mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from(num_); }
  mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from(den_); }

  long double to_long_double() const {
    if (!big_) return static_cast<long double>(num_) / static_cast<long double>(den_);
    return static_cast<long double>(big_->get_d());
  }

  /// "p/q" with q always present.
  std::string to_string() const {
    if (!big_) return std::to_string(num_) + "/" + std::to_string(den_);
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }

  /// Accepts "p/q" or a bare integer "p"; signs only on p.
  static Rational parse(std::string_view s) {
    if (s.empty()) throw ParseError("empty rational token");
    auto valid_int = [](std::string_view t, bool allow_sign) {
      if (t.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    auto slash = s.find('/');
    std::string_view ns = s.substr(0, slash);
    std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_int(ns, true) || !valid_int(ds, false))
      throw ParseError("malformed rational token '" + std::string(s) + "'");
    std::string nstr(ns);
    if (!nstr.empty() && nstr[0] == '+') nstr.erase(0, 1);
    mpz_class n(nstr), d{std::string(ds)};
    if (d == 0) throw DivisionByZero("zero denominator in '" + std::string(s) + "'");
    return Rational(mpq_class(n, d));
  }

  Rational operator-() const {
    if (!big_ && num_ != INT64_MIN) return raw(-num_, den_);
    return Rational(mpq_class(-to_mpq()));
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!a.big_ && !b.big_) {
      std::int64_t r;
      if (a.den_ == 1 && b.den_ == 1) {
        if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != INT64_MIN) return raw(r, 1);
      } else if (auto s = small_add(a.num_, a.den_, b.num_, b.den_)) {
        return *s;
      }
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    if (!a.big_ && !b.big_) {
      std::int64_t g1 = gcd64(a.num_, b.den_), g2 = gcd64(b.num_, a.den_);
      std::int64_t n, d;
      if (!__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &n) &&
          !__builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &d) && n != INT64_MIN)
        return raw(n, d);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero("rational division by zero");
    return a * b.inverse();
  }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (!big_) return num_ > 0 ? raw(den_, num_) : raw(-den_, -num_);
    return Rational(mpq_class(1 / *big_));
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a value has exactly one representation
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      __int128 l = static_cast<__int128>(a.num_) * b.den_;
      __int128 r = static_cast<__int128>(b.num_) * a.den_;
      return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;

  static Rational raw(std::int64_t n, std::int64_t d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }

  static std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a),
                                              static_cast<std::uint64_t>(b < 0 ? -b : b)));
  }

  static mpz_class mpz_from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

  static std::optional<Rational> small_add(std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd) {
    std::int64_t g = gcd64(ad, bd);
    std::int64_t ad1 = ad / g, bd1 = bd / g;
    std::int64_t t1, t2, n, d;
    if (__builtin_mul_overflow(an, bd1, &t1) || __builtin_mul_overflow(bn, ad1, &t2) ||
        __builtin_add_overflow(t1, t2, &n) || __builtin_mul_overflow(ad, bd1, &d))
      return std::nullopt;
    if (n == 0) return raw(0, 1);
    std::int64_t g2 = gcd64(n, g);
    n /= g2;
    d /= g2;
    if (n == INT64_MIN) return std::nullopt;
    return raw(n, d);
  }

  void assign_fraction(long long n, long long d) {
    if (d == 0) throw DivisionByZero("zero denominator");
    if (n == INT64_MIN || d == INT64_MIN) {
      set_big(mpq_class(mpz_from(n), mpz_from(d)));
      big_->canonicalize();
      demote();
      return;
    }
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = gcd64(n, d);
    if (g == 0) g = 1;
    num_ = n / g;
    den_ = d / g;
    if (num_ == 0) den_ = 1;
  }

  void set_big(mpq_class q) {
    big_ = std::make_unique<mpq_class>(std::move(q));
    demote();
  }

  void demote() {
    if (!big_) return;
    const mpz_class& n = big_->get_num();
    const mpz_class& d = big_->get_den();
    if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
      long nv = n.get_si(), dv = d.get_si();
      if (nv != INT64_MIN) {
        num_ = nv;
        den_ = dv;
        big_.reset();
      }
    }
  }
};

}  // namespace racahlab
