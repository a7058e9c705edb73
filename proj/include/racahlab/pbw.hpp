#pragma once

// U(sl2) in PBW normal form E^e F^f H^h.

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "racahlab/errors.hpp"
#include "racahlab/gaussian.hpp"

namespace racahlab {

struct Monomial {
  std::uint32_t e = 0, f = 0, h = 0;

  int degree() const { return static_cast<int>(e) - static_cast<int>(f); }
  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(e) << 42) | (static_cast<std::uint64_t>(f) << 21) | h;
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class PBWElement;

namespace detail {
inline PBWElement monomial_product(const Monomial& a, const Monomial& b);
}

/// Finite sum of c * E^e F^f H^h with no zero coefficients stored.
class PBWElement {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  PBWElement() = default;
  PBWElement(const GaussianRational& c) { add(Monomial{}, c); }  // NOLINT(google-explicit-constructor)
  PBWElement(long long c) : PBWElement(GaussianRational(c)) {}   // NOLINT(google-explicit-constructor)

  static PBWElement monomial(std::uint32_t e, std::uint32_t f, std::uint32_t h,
                             const GaussianRational& c = GaussianRational(1)) {
    PBWElement x;
    x.add(Monomial{e, f, h}, c);
    return x;
  }
  static PBWElement E() { return monomial(1, 0, 0); }
  static PBWElement F() { return monomial(0, 1, 0); }
  static PBWElement H() { return monomial(0, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  GaussianRational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  /// Adds c * m in place, dropping the entry if it cancels.
  void add(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  PBWElement operator-() const {
    PBWElement r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  PBWElement& operator+=(const PBWElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  PBWElement& operator-=(const PBWElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  PBWElement& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(PBWElement a, const GaussianRational& s) { return a *= s; }
  friend PBWElement operator*(const GaussianRational& s, PBWElement a) { return a *= s; }
  friend PBWElement operator/(PBWElement a, const GaussianRational& s) { return a *= s.inverse(); }
  friend PBWElement operator*(PBWElement a, long long s) { return a *= GaussianRational(s); }
  friend PBWElement operator*(long long s, PBWElement a) { return a *= GaussianRational(s); }
  friend PBWElement operator/(PBWElement a, long long s) { return a *= GaussianRational(s).inverse(); }

  /// Product in normal form.
  friend PBWElement operator*(const PBWElement& x, const PBWElement& y) {
    PBWElement out;
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_) {
        GaussianRational c = cx * cy;
        PBWElement prod = detail::monomial_product(mx, my);
        for (const auto& [m, k] : prod.terms_) out.add(m, c * k);
      }
    return out;
  }

  friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")";
      if (m.e) s += "*E^" + std::to_string(m.e);
      if (m.f) s += "*F^" + std::to_string(m.f);
      if (m.h) s += "*H^" + std::to_string(m.h);
    }
    return s;
  }

 private:
  Terms terms_;
};

inline PBWElement pow(const PBWElement& x, unsigned k) {
  PBWElement r(1);
  for (unsigned i = 0; i < k; ++i) r = r * x;
  return r;
}

inline PBWElement commutator(const PBWElement& x, const PBWElement& y) { return x * y - y * x; }

namespace detail {

inline long long binomial(unsigned n, unsigned k) {
  long long r = 1;
  for (unsigned j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

/// out += c * E^a F^b (H+s)^n * (H+t)^m, with m in {0,1}.
inline void add_shifted(PBWElement& out, std::uint32_t a, std::uint32_t b, std::uint32_t n, long long s,
                        const GaussianRational& c, bool extra = false, long long t = 0) {
  GaussianRational spow(1);
  std::vector<GaussianRational> coeffs(n + 1);
  for (std::uint32_t j = n + 1; j-- > 0;) {
    coeffs[j] = c * GaussianRational(binomial(n, j)) * spow;
    spow *= GaussianRational(s);
  }
  for (std::uint32_t j = 0; j <= n; ++j) {
    if (!extra) {
      out.add({a, b, j}, coeffs[j]);
    } else {
      out.add({a, b, j + 1}, coeffs[j]);
      out.add({a, b, j}, coeffs[j] * GaussianRational(t));
    }
  }
}

enum class Gen { E, F, H };

/// (E^a F^b H^c) * g in normal form.
inline PBWElement monomial_times_generator(const Monomial& m, Gen g) {
  PBWElement out;
  switch (g) {
    case Gen::H:
      out.add({m.e, m.f, m.h + 1}, GaussianRational(1));
      break;
    case Gen::F:  // H F = F (H - 2)
      add_shifted(out, m.e, m.f + 1, m.h, -2, GaussianRational(1));
      break;
    case Gen::E:  // H E = E (H + 2);  F^b E = E F^b - b F^{b-1} (H - b + 1)
      add_shifted(out, m.e + 1, m.f, m.h, 2, GaussianRational(1));
      if (m.f > 0)
        add_shifted(out, m.e, m.f - 1, m.h, 2, GaussianRational(-static_cast<long long>(m.f)), true,
                    1 - static_cast<long long>(m.f));
      break;
  }
  return out;
}

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
    return std::hash<std::uint64_t>()(p.first * 0x9E3779B97F4A7C15ull ^ p.second);
  }
};

/// Memoised per thread; results never depend on cache state.
inline PBWElement monomial_product(const Monomial& a, const Monomial& b) {
  if (b == Monomial{}) return PBWElement::monomial(a.e, a.f, a.h);
  if (a == Monomial{}) return PBWElement::monomial(b.e, b.f, b.h);
  if (b.e == 0 && b.f == 0) return PBWElement::monomial(a.e, a.f, a.h + b.h);
  if (a.f == 0 && a.h == 0 && b.e == 0) return PBWElement::monomial(a.e, b.f, b.h);
  thread_local std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, PBWElement, PairHash> cache;
  auto key = std::make_pair(a.key(), b.key());
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Monomial rest = b;
  Gen last;
  if (rest.h > 0) {
    --rest.h;
    last = Gen::H;
  } else if (rest.f > 0) {
    --rest.f;
    last = Gen::F;
  } else {
    --rest.e;
    last = Gen::E;
  }
  PBWElement left = monomial_product(a, rest);
  PBWElement out;
  for (const auto& [m, c] : left.terms()) {
    PBWElement step = monomial_times_generator(m, last);
    for (const auto& [m2, c2] : step.terms()) out.add(m2, c * c2);
  }
  cache.emplace(key, out);
  return out;
}

}  // namespace detail

/// Lambda = EF + FE + H^2/2.
inline PBWElement casimir() {
  PBWElement E = PBWElement::E(), F = PBWElement::F(), H = PBWElement::H();
  return E * F + F * E + H * H / GaussianRational(2);
}

/// Evaluates sum_k c_k x^k.
inline PBWElement poly_in(const PBWElement& x, const std::vector<GaussianRational>& c) {
  PBWElement acc;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + PBWElement(c[k]);
  return acc;
}

struct GradedComponent {
  int degree = 0;
  PBWElement element;
};

/// Nonzero homogeneous components by e - f, in increasing degree.
inline std::vector<GradedComponent> graded_components(const PBWElement& x) {
  std::map<int, PBWElement> parts;
  for (const auto& [m, c] : x.terms()) parts[m.degree()].add(m, c);
  std::vector<GradedComponent> out;
  for (auto& [d, el] : parts) out.push_back({d, std::move(el)});
  return out;
}

inline PBWElement homogeneous_component(const PBWElement& x, int degree) {
  PBWElement out;
  for (const auto& [m, c] : x.terms())
    if (m.degree() == degree) out.add(m, c);
  return out;
}

inline bool is_even(const PBWElement& x) {
  for (const auto& [m, c] : x.terms())
    if (m.degree() % 2 != 0) return false;
  return true;
}

/// Coordinates in the basis E^{2n} Lambda^i H^k (n >= 0) and F^{-2n} Lambda^i H^k (n < 0) of
/// the even subalgebra, keyed by (n, i, k).
///
/// The top E-power term of F^{2m} Lambda^i H^k is 2^i E^i F^{i+2m} H^k, and of
/// E^{2n} Lambda^i H^k it is 2^i E^{2n+i} F^i H^k, so peeling off the largest
/// E-power repeatedly is a triangular solve.
inline std::map<std::tuple<int, unsigned, unsigned>, GaussianRational> lambda_coordinates(PBWElement x) {
  if (!is_even(x)) throw Error("lambda_coordinates needs an element of the even subalgebra");
  const PBWElement L = casimir();
  std::map<std::tuple<int, unsigned, unsigned>, GaussianRational> out;
  std::map<unsigned, PBWElement> lambda_pow{{0u, PBWElement(1)}};
  auto lpow = [&](unsigned i) -> const PBWElement& {
    for (unsigned k = static_cast<unsigned>(lambda_pow.size()); k <= i; ++k) lambda_pow[k] = lambda_pow[k - 1] * L;
    return lambda_pow[i];
  };
  while (!x.is_zero()) {
    Monomial top = x.terms().rbegin()->first;  // terms are ordered by E-exponent first
    int n = top.degree() / 2;
    unsigned i = n >= 0 ? top.f : top.e;
    unsigned k = top.h;
    GaussianRational c = x.coeff(top) / GaussianRational(1LL << i);
    PBWElement prefix = n >= 0 ? PBWElement::monomial(static_cast<std::uint32_t>(2 * n), 0, 0)
                               : PBWElement::monomial(0, static_cast<std::uint32_t>(-2 * n), 0);
    x -= prefix * lpow(i) * PBWElement::monomial(0, 0, k, c);
    out[{n, i, k}] += c;
  }
  return out;
}

// Text format: one term per line, "e f h re_num/re_den im_num/im_den".

inline void write_pbw(std::ostream& os, const PBWElement& x) {
  for (const auto& [m, c] : x.terms())
    os << m.e << ' ' << m.f << ' ' << m.h << ' ' << c.re().to_string() << ' ' << c.im().to_string() << '\n';
}

inline std::string pbw_to_text(const PBWElement& x) {
  std::ostringstream os;
  write_pbw(os, x);
  return os.str();
}

inline PBWElement read_pbw(std::istream& is) {
  PBWElement x;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long e, f, h;
    std::string re, im, junk;
    if (!(ls >> e >> f >> h >> re >> im) || (ls >> junk) || e < 0 || f < 0 || h < 0)
      throw ParseError("malformed PBW term on line " + std::to_string(lineno));
    x.add({static_cast<std::uint32_t>(e), static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(h)},
          GaussianRational(Rational::parse(re), Rational::parse(im)));
  }
  return x;
}

inline PBWElement pbw_from_text(const std::string& s) {
  std::istringstream is(s);
  return read_pbw(is);
}

}  // namespace racahlab
