#pragma once

// The (d+1)-dimensional modules R_d(a,b,c): matrices, irreducibility,
// isomorphism classes from traces, minimal polynomials and the
// diagonalizability and Leonard criteria.

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "racahlab/errors.hpp"
#include "racahlab/linalg.hpp"
#include "racahlab/racah.hpp"
#include "racahlab/roots.hpp"

namespace racahlab {

struct RdParams {
  GR a, b, c;
  int d = 0;
};

/// Compact display form: integers without denominator, "p/q", "x+y*i".
inline std::string short_string(const GR& z) {
  auto part = [](const Rational& r) { return r.is_integer() ? r.numerator().get_str() : r.to_string(); };
  if (z.im().is_zero()) return part(z.re());
  std::string im = part(z.im()) + "*i";
  if (z.re().is_zero()) return im;
  return part(z.re()) + (z.im() < Rational(0) ? "" : "+") + im;
}

inline std::string params_label(const RdParams& p) {
  return "R_" + std::to_string(p.d) + "(" + short_string(p.a) + "," + short_string(p.b) + "," + short_string(p.c) +
         ")";
}

inline GR half_d(int d) { return GR::frac(d, 2); }

/// (x + d/2 - i)(x + d/2 - i + 1)
inline GR rd_theta(const GR& x, int d, int i) {
  GR t = x + half_d(d) - GR(i);
  return t * (t + GR(1));
}

inline GR rd_phi(const RdParams& p, int i) {
  return GR(i) * GR(i - p.d - 1) * (p.a + p.b + p.c + half_d(p.d) - GR(i) + GR(2)) *
         (p.a + p.b - p.c + half_d(p.d) - GR(i) + GR(1));
}

inline std::vector<GR> rd_thetas(const GR& x, int d) {
  std::vector<GR> t;
  for (int i = 0; i <= d; ++i) t.push_back(rd_theta(x, d, i));
  return t;
}

/// Scalars by which alpha, beta, gamma, delta act on R_d(a,b,c).
struct RdCentral {
  GR alpha, beta, gamma, delta;
};

inline RdCentral rd_central(const RdParams& p) {
  const GR &a = p.a, &b = p.b, &c = p.c, h = half_d(p.d), one(1);
  return {(c - b) * (c + b + one) * (a - h) * (a + h + one), (a - c) * (a + c + one) * (b - h) * (b + h + one),
          (b - a) * (b + a + one) * (c - h) * (c + h + one), h * (h + one) + a * (a + one) + b * (b + one) + c * (c + one)};
}

/// A lower bidiagonal, B upper bidiagonal, C = delta - A - B, Delta = [A,B]/2.
inline RacahRep construct(const RdParams& p) {
  if (p.d < 0) throw Error("R_d needs d >= 0");
  const std::size_t n = static_cast<std::size_t>(p.d) + 1;
  ExactMatrix A(n, n), B(n, n);
  for (int i = 0; i <= p.d; ++i) {
    A(i, i) = rd_theta(p.a, p.d, i);
    B(i, i) = rd_theta(p.b, p.d, i);
    if (i >= 1) {
      A(i, i - 1) = GR(1);
      B(i - 1, i) = rd_phi(p, i);
    }
  }
  ExactMatrix C = ExactMatrix::scalar(n, rd_central(p).delta) - A - B;
  ExactMatrix Delta = commutator(A, B) * GR::frac(1, 2);
  return RacahRep(std::move(A), std::move(B), std::move(C), std::move(Delta));
}

struct Irreducibility {
  bool irreducible = true;
  std::string witness;  // the linear form and forbidden value that coincide
};

inline Irreducibility irreducibility(const RdParams& p) {
  const GR &a = p.a, &b = p.b, &c = p.c;
  const std::array<std::pair<const char*, GR>, 4> forms = {
      {{"a+b+c+1", a + b + c + GR(1)}, {"-a+b+c", -a + b + c}, {"a-b+c", a - b + c}, {"a+b-c", a + b - c}}};
  for (const auto& [name, v] : forms)
    for (int i = 1; i <= p.d; ++i)
      if (v == half_d(p.d) - GR(i)) return {false, std::string(name) + " = " + short_string(v) + " = d/2-" + std::to_string(i)};
  return {};
}

inline bool is_irreducible(const RdParams& p) { return irreducibility(p).irreducible; }

/// Burnside: an operator set acts irreducibly over an algebraically closed
/// field iff it generates the full matrix algebra.
inline bool burnside_irreducible(const std::vector<ExactMatrix>& ops) {
  if (ops.empty()) throw Error("no operators");
  const std::size_t n = ops[0].rows();
  return algebra_closure<GR>(ops, n).dim == n * n;
}

inline bool burnside_irreducible(const RacahRep& r) { return burnside_irreducible({r.A, r.B, r.C}); }

/// Isomorphism class of an irreducible module: d and the values a(a+1), b(b+1), c(c+1).
struct IsoClass {
  int d = 0;
  GR sA, sB, sC;
  friend bool operator==(const IsoClass&, const IsoClass&) = default;
  friend std::strong_ordering operator<=>(const IsoClass& x, const IsoClass& y) {
    if (auto o = x.d <=> y.d; o != 0) return o;
    if (auto o = x.sA <=> y.sA; o != 0) return o;
    if (auto o = x.sB <=> y.sB; o != 0) return o;
    return x.sC <=> y.sC;
  }
};

inline IsoClass iso_class_of(const RdParams& p) {
  auto s = [](const GR& x) { return x * (x + GR(1)); };
  return {p.d, s(p.a), s(p.b), s(p.c)};
}

/// The root of x^2 + x - s with real part >= -1/2 (larger imaginary part on a tie),
/// when the roots lie in Q(i).
inline std::optional<GR> class_parameter(const GR& s) {
  auto found = rational_roots(ExactPolynomial{-s, GR(1), GR(1)});
  if (found.roots.empty()) return std::nullopt;
  GR x = found.roots.front();
  GR y = GR(-1) - x;
  Rational half(-1, 2);
  if (x.re() < half || (x.re() == half && x.im() < y.im())) x = y;
  return x;
}

inline std::string class_label(const IsoClass& k) {
  auto part = [](const GR& s) {
    auto x = class_parameter(s);
    return x ? short_string(*x) : "[s=" + short_string(s) + "]";
  };
  return "R_" + std::to_string(k.d) + "(" + part(k.sA) + "," + part(k.sB) + "," + part(k.sC) + ")";
}

inline GR dd_term(int d) { return GR::frac(static_cast<long long>(d) * (d + 2), 12); }

/// Class from traces: sX = trace(X)/(d+1) - d(d+2)/12. Irreducibility is
/// certified by Burnside for d <= 6 and otherwise assumed.
inline IsoClass iso_class(const RacahRep& r, int d) {
  if (static_cast<int>(r.dim()) != d + 1) throw DimensionMismatch("iso_class: dimension is not d+1");
  if (d <= 6 && !burnside_irreducible(r)) throw NotIrreducible("module of dimension " + std::to_string(d + 1) + " is reducible");
  GR k(d + 1);
  return {d, r.A.trace() / k - dd_term(d), r.B.trace() / k - dd_term(d), r.C.trace() / k - dd_term(d)};
}

struct MinPolys {
  ExactPolynomial A, B, C;
};

/// prod (x - theta_i), prod (x - theta*_i), prod (x - theta^eps_i), repeats included.
inline MinPolys min_polys(const RdParams& p) {
  if (!is_irreducible(p)) throw NotIrreducible(params_label(p) + " is reducible: " + irreducibility(p).witness);
  return {ExactPolynomial::from_roots(rd_thetas(p.a, p.d)), ExactPolynomial::from_roots(rd_thetas(p.b, p.d)),
          ExactPolynomial::from_roots(rd_thetas(p.c, p.d))};
}

/// x not in {(i-d-1)/2 : i = 1..2d-1}.
inline bool diagonalizable_parameter(const GR& x, int d) {
  for (int i = 1; i <= 2 * d - 1; ++i)
    if (x == GR::frac(i - d - 1, 2)) return false;
  return true;
}

inline bool leonard_criterion(const RdParams& p) {
  if (!is_irreducible(p)) throw NotIrreducible(params_label(p) + " is reducible: " + irreducibility(p).witness);
  return diagonalizable_parameter(p.a, p.d) && diagonalizable_parameter(p.b, p.d) &&
         diagonalizable_parameter(p.c, p.d);
}

/// Distinct eigenvalues of A, B, C from the closed forms, for use as hints.
inline std::array<std::vector<GR>, 3> eigenvalue_hints(const RdParams& p) {
  auto distinct = [](std::vector<GR> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  return {distinct(rd_thetas(p.a, p.d)), distinct(rd_thetas(p.b, p.d)), distinct(rd_thetas(p.c, p.d))};
}

}  // namespace racahlab
