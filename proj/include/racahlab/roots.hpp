#pragma once

// Roots in Q(i) of polynomials over Q(i).

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "racahlab/errors.hpp"
#include "racahlab/gaussian.hpp"
#include "racahlab/polynomial.hpp"

namespace racahlab {

struct RootSearch {
  std::vector<GaussianRational> roots;  // distinct, sorted
  bool splits = false;                  // p is a product of linear factors over Q(i)
};

namespace detail {

/// Gaussian integer with arbitrary-precision parts.
struct GaussInt {
  mpz_class re, im;

  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  mpz_class norm() const { return re * re + im * im; }
};

/// Exact quotient a/b when b divides a in Z[i].
inline std::optional<GaussInt> gauss_divide(const GaussInt& a, const GaussInt& b) {
  mpz_class n = b.norm();
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t()))
    return std::nullopt;
  return GaussInt{re / n, im / n};
}

/// Gaussian prime factorisation of z as (prime, exponent) pairs; nullopt when
/// the norm has a cofactor too large to factor by trial division.
inline std::optional<std::vector<std::pair<GaussInt, unsigned>>> gauss_factor(GaussInt z) {
  constexpr unsigned long kTrialLimit = 1ul << 16;
  mpz_class n = z.norm();
  std::vector<unsigned long> primes;
  for (unsigned long p = 2; p <= kTrialLimit && n > 1; ++p) {
    if (p > 2 && p % 2 == 0) continue;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
    if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
  }
  if (n > 1) {
    if (!mpz_fits_ulong_p(n.get_mpz_t())) return std::nullopt;
    unsigned long big = n.get_ui();
    if (big > (1ul << 32)) return std::nullopt;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    primes.push_back(big);
  }
  std::vector<std::pair<GaussInt, unsigned>> out;
  auto strip = [&](const GaussInt& pi) {
    unsigned e = 0;
    while (auto q = gauss_divide(z, pi)) {
      z = *q;
      ++e;
    }
    if (e) out.push_back({pi, e});
  };
  for (unsigned long p : primes) {
    if (p == 2) {
      strip({1, 1});
    } else if (p % 4 == 3) {
      strip({mpz_class(p), 0});
    } else {
      unsigned long a = 1;
      for (; a * a < p; ++a) {
        unsigned long b2 = p - a * a;
        auto b = static_cast<unsigned long>(std::sqrt(static_cast<long double>(b2)));
        while (b * b > b2) --b;
        while ((b + 1) * (b + 1) <= b2) ++b;
        if (b * b == b2) {
          strip({mpz_class(a), mpz_class(b)});
          strip({mpz_class(a), -mpz_class(b)});
          break;
        }
      }
    }
  }
  return out;
}

inline mpz_class lcm_denominators(const std::vector<GaussianRational>& cs) {
  mpz_class l = 1;
  for (const auto& c : cs) {
    mpz_class a = c.re().denominator(), b = c.im().denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.get_mpz_t());
  }
  return l;
}

/// All Gaussian-integer divisors of z, one per associate class.
inline std::optional<std::vector<GaussInt>> divisor_classes(const GaussInt& z, std::size_t cap) {
  auto factors = gauss_factor(z);
  if (!factors) return std::nullopt;
  std::size_t count = 1;
  for (const auto& f : *factors) {
    count *= f.second + 1;
    if (count > cap) return std::nullopt;
  }
  std::vector<GaussInt> divisors{{1, 0}};
  for (const auto& [pi, e] : *factors) {
    std::vector<GaussInt> next;
    for (const auto& d : divisors) {
      GaussInt acc = d;
      next.push_back(acc);
      for (unsigned k = 0; k < e; ++k) {
        acc = acc * pi;
        next.push_back(acc);
      }
    }
    divisors = std::move(next);
  }
  return divisors;
}

/// Divisor search on a square-free polynomial with nonzero constant term:
/// after clearing denominators every root in Q(i) is u/v with u | a_0 and
/// v | a_n in Z[i]. nullopt when the candidate set is too large to enumerate.
inline std::optional<std::vector<GaussianRational>> divisor_search(const ExactPolynomial& p) {
  constexpr std::size_t kMaxCandidates = 1u << 16;
  GaussianRational L(Rational(mpq_class(lcm_denominators(p.coeffs()))));
  GaussianRational a0 = p.coeff(0) * L, an = p.leading() * L;
  auto us = divisor_classes({a0.re().numerator(), a0.im().numerator()}, kMaxCandidates);
  if (!us) return std::nullopt;
  auto vs = divisor_classes({an.re().numerator(), an.im().numerator()}, kMaxCandidates / us->size());
  if (!vs) return std::nullopt;
  const GaussInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::set<GaussianRational> found;
  for (const auto& v : *vs) {
    GaussianRational vinv = GaussianRational(Rational(mpq_class(v.re)), Rational(mpq_class(v.im))).inverse();
    for (const auto& u0 : *us)
      for (const auto& unit : units) {
        GaussInt u = u0 * unit;
        GaussianRational x = GaussianRational(Rational(mpq_class(u.re)), Rational(mpq_class(u.im))) * vinv;
        if (!found.count(x) && p(x).is_zero()) found.insert(x);
      }
  }
  return std::vector<GaussianRational>(found.begin(), found.end());
}

/// Best rational approximation of v with denominator at most max_den.
inline std::optional<Rational> rational_near(long double v, long long max_den) {
  if (!std::isfinite(v)) return std::nullopt;
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double x = v;
  for (int it = 0; it < 64; ++it) {
    long double a = std::floor(x);
    if (std::fabs(a) > 9.0e15L) break;
    auto ai = static_cast<long long>(a);
    long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den || k2 <= 0) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    long double frac = x - a;
    if (std::fabs(static_cast<long double>(h1) / k1 - v) < 1e-15L * (1 + std::fabs(v)) || frac < 1e-18L) break;
    x = 1 / frac;
  }
  if (k1 == 0) return std::nullopt;
  return Rational(h1, k1);
}

/// Simultaneous Aberth iteration; approximations to all complex roots.
inline std::vector<std::complex<long double>> numeric_roots(const ExactPolynomial& p) {
  using C = std::complex<long double>;
  const int n = p.degree();
  std::vector<C> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = C(p.coeff(k).re().to_long_double(), p.coeff(k).im().to_long_double());
  long double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k] / c[n]));
  radius += 1;
  std::vector<C> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(radius, 2 * 3.14159265358979323846L * (k + 0.25L) / n);
  auto eval = [&](C x, C& d) {
    C v = c[n];
    d = 0;
    for (int k = n - 1; k >= 0; --k) {
      d = d * x + v;
      v = v * x + c[k];
    }
    return v;
  };
  for (int it = 0; it < 500; ++it) {
    long double moved = 0;
    for (int k = 0; k < n; ++k) {
      C d;
      C v = eval(z[k], d);
      if (v == C(0)) continue;
      C ratio = v / d;
      C s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += C(1) / (z[k] - z[j]);
      C step = ratio / (C(1) - ratio * s);
      z[k] -= step;
      moved = std::max(moved, std::abs(step) / (1 + std::abs(z[k])));
    }
    if (moved < 1e-17L) break;
  }
  return z;
}

/// Numeric candidates recovered as nearby Gaussian rationals and verified exactly.
inline std::vector<GaussianRational> numeric_search(ExactPolynomial p) {
  std::set<GaussianRational> found;
  for (long long max_den : {1000LL, 1000000LL, 1000000000LL}) {
    if (p.degree() <= 0) break;
    bool progress = true;
    while (progress && p.degree() > 0) {
      progress = false;
      for (const auto& z : numeric_roots(p)) {
        auto re = rational_near(z.real(), max_den);
        auto im = rational_near(z.imag(), max_den);
        if (!re || !im) continue;
        GaussianRational x(*re, *im);
        if (!p(x).is_zero()) continue;
        found.insert(x);
        p = divmod(p, ExactPolynomial::linear_root(x)).first;
        progress = true;
        break;
      }
    }
  }
  return std::vector<GaussianRational>(found.begin(), found.end());
}

}  // namespace detail

/// All roots of p in Q(i), and whether p splits into linear factors there.
inline RootSearch rational_roots(const ExactPolynomial& p) {
  if (p.is_zero()) throw Error("rational_roots of the zero polynomial");
  ExactPolynomial q = p.square_free_part();
  RootSearch out;
  if (q.degree() == 0) {
    out.splits = true;
    return out;
  }
  if (q.coeff(0).is_zero()) {
    out.roots.push_back(GaussianRational());
    q = divmod(q, ExactPolynomial::x()).first;
  }
  if (q.degree() > 0) {
    // cheap numeric candidates first; the divisor search settles the rest
    std::vector<GaussianRational> found = detail::numeric_search(q);
    for (const auto& x : found) q = divmod(q, ExactPolynomial::linear_root(x)).first;
    out.roots.insert(out.roots.end(), found.begin(), found.end());
    if (q.degree() > 0)
      if (auto rest = detail::divisor_search(q)) out.roots.insert(out.roots.end(), rest->begin(), rest->end());
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.splits = out.roots.size() == static_cast<std::size_t>(p.square_free_part().degree());
  return out;
}

}  // namespace racahlab
