#pragma once

// The homomorphism from the universal Racah algebra into U(sl2), the D3
// actions on both algebras, and the symbolic identity checks built on them.

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "racahlab/errors.hpp"
#include "racahlab/pbw.hpp"
#include "racahlab/report.hpp"

namespace racahlab {

enum class RacahSymbol { A, B, C, Delta, alpha, beta, gamma, delta, OmegaA, OmegaB, OmegaC };

inline constexpr std::array<RacahSymbol, 11> kRacahSymbols = {
    RacahSymbol::A,     RacahSymbol::B,    RacahSymbol::C,     RacahSymbol::Delta,
    RacahSymbol::alpha, RacahSymbol::beta, RacahSymbol::gamma, RacahSymbol::delta,
    RacahSymbol::OmegaA, RacahSymbol::OmegaB, RacahSymbol::OmegaC};

inline std::string symbol_name(RacahSymbol s) {
  static const char* names[] = {"A", "B", "C", "Delta", "alpha", "beta", "gamma", "delta",
                                "Omega_A", "Omega_B", "Omega_C"};
  return names[static_cast<int>(s)];
}

inline RacahSymbol parse_symbol(std::string_view s) {
  for (auto sym : kRacahSymbols)
    if (symbol_name(sym) == s) return sym;
  throw ParseError("unknown Racah generator '" + std::string(s) + "'");
}

namespace detail {

struct SharpImages {
  PBWElement A, B, C, Delta, alpha, beta, gamma, delta, OmegaA, OmegaB, OmegaC;
};

inline const SharpImages& sharp_images() {
  static const SharpImages images = [] {
    const GaussianRational i = GaussianRational::i();
    PBWElement E = PBWElement::E(), F = PBWElement::F(), H = PBWElement::H();
    SharpImages s;
    s.A = (E + F - 2) * (E + F + 2) / 16;
    s.B = (H - 2) * (H + 2) / 16;
    s.C = (i * E - i * F - 2) * (i * E - i * F + 2) / 16;
    s.Delta = ((H + 2) * F * F - (H - 2) * E * E) / 64;
    // central elements and Casimirs evaluated on the generator images
    s.alpha = commutator(s.A, s.Delta) + s.A * s.C - s.B * s.A;
    s.beta = commutator(s.B, s.Delta) + s.B * s.A - s.C * s.B;
    s.gamma = commutator(s.C, s.Delta) + s.C * s.B - s.A * s.C;
    s.delta = s.A + s.B + s.C;
    PBWElement D2 = s.Delta * s.Delta;
    s.OmegaA = D2 + (s.B * s.A * s.C + s.C * s.A * s.B) / 2 + s.A * s.A + s.B * s.gamma - s.C * s.beta -
               s.A * s.delta;
    s.OmegaB = D2 + (s.C * s.B * s.A + s.A * s.B * s.C) / 2 + s.B * s.B + s.C * s.alpha - s.A * s.gamma -
               s.B * s.delta;
    s.OmegaC = D2 + (s.A * s.C * s.B + s.B * s.C * s.A) / 2 + s.C * s.C + s.A * s.beta - s.B * s.alpha -
               s.C * s.delta;
    return s;
  }();
  return images;
}

}  // namespace detail

/// Image of a generator, central element or Casimir of the Racah algebra.
inline const PBWElement& sharp(RacahSymbol g) {
  const auto& s = detail::sharp_images();
  switch (g) {
    case RacahSymbol::A: return s.A;
    case RacahSymbol::B: return s.B;
    case RacahSymbol::C: return s.C;
    case RacahSymbol::Delta: return s.Delta;
    case RacahSymbol::alpha: return s.alpha;
    case RacahSymbol::beta: return s.beta;
    case RacahSymbol::gamma: return s.gamma;
    case RacahSymbol::delta: return s.delta;
    case RacahSymbol::OmegaA: return s.OmegaA;
    case RacahSymbol::OmegaB: return s.OmegaB;
    case RacahSymbol::OmegaC: return s.OmegaC;
  }
  throw Error("unreachable");
}

/// -3/1024 (Lambda - 4)(Lambda - 12), expanded.
inline PBWElement casimir_image_closed_form() {
  PBWElement L = casimir();
  return (L - 4) * (L - 12) * GaussianRational::frac(-3, 1024);
}

inline CheckResult residual_check(std::string name, const PBWElement& residual) {
  return {std::move(name), residual.is_zero(), residual.term_count()};
}

/// The seven identities that make the generator images a homomorphism.
inline Report verify_sharp_relations() {
  const PBWElement &A = sharp(RacahSymbol::A), &B = sharp(RacahSymbol::B), &C = sharp(RacahSymbol::C),
                   &D = sharp(RacahSymbol::Delta);
  Report r;
  r.push_back(residual_check("[A#,B#] - 2 Delta#", commutator(A, B) - D * 2));
  r.push_back(residual_check("[B#,C#] - 2 Delta#", commutator(B, C) - D * 2));
  r.push_back(residual_check("[C#,A#] - 2 Delta#", commutator(C, A) - D * 2));
  r.push_back(residual_check("[A#,Delta#] + A#C# - B#A#", commutator(A, D) + A * C - B * A));
  r.push_back(residual_check("[B#,Delta#] + B#A# - C#B#", commutator(B, D) + B * A - C * B));
  r.push_back(residual_check("[C#,Delta#] + C#B# - A#C#", commutator(C, D) + C * B - A * C));
  r.push_back(residual_check("A# + B# + C# - (Lambda - 6)/8", A + B + C - (casimir() - 6) / 8));
  return r;
}

/// Each Casimir maps to -3/1024 (Lambda - 4)(Lambda - 12).
inline Report verify_casimir_image() {
  PBWElement target = casimir_image_closed_form();
  Report r;
  for (auto s : {RacahSymbol::OmegaA, RacahSymbol::OmegaB, RacahSymbol::OmegaC})
    r.push_back(residual_check(symbol_name(s) + "# + 3/1024 (Lambda - 4)(Lambda - 12)", sharp(s) - target));
  return r;
}

/// f(x, y) = 256 x + 3 (4y - 3)(4y + 1).
inline PBWElement kernel_polynomial(const PBWElement& x, const PBWElement& y) {
  return x * 256 + (y * 4 - 3) * (y * 4 + 1) * 3;
}

/// Membership of alpha, beta, gamma and f(Omega, delta) in the kernel.
inline Report verify_kernel_generators() {
  Report r;
  for (auto s : {RacahSymbol::alpha, RacahSymbol::beta, RacahSymbol::gamma})
    r.push_back(residual_check(symbol_name(s) + "#", sharp(s)));
  const PBWElement& d = sharp(RacahSymbol::delta);
  for (auto s : {RacahSymbol::OmegaA, RacahSymbol::OmegaB, RacahSymbol::OmegaC})
    r.push_back(residual_check("f(" + symbol_name(s) + ", delta)#", kernel_polynomial(sharp(s), d)));
  // scalar instance: Lambda acting as 15/2
  GaussianRational lam = GaussianRational::frac(15, 2);
  GaussianRational omega = GaussianRational::frac(-3, 1024) * (lam - 4) * (lam - 12);
  GaussianRational delta = (lam - 6) / 8;
  GaussianRational f = omega * 256 + (delta * 4 - 3) * (delta * 4 + 1) * 3;
  bool ok = omega == GaussianRational::frac(189, 4096) && delta == GaussianRational::frac(3, 16) && f.is_zero();
  r.push_back({"f(Omega, delta) at Lambda = 15/2", ok, f.is_zero() ? 0u : 1u});
  return r;
}

// ---------------------------------------------------------------------------
// D3

/// The group element sigma^s tau^t, s in {0,1}, t in {0,1,2}.
struct D3Element {
  int s = 0;
  int t = 0;
  friend bool operator==(const D3Element&, const D3Element&) = default;
};

inline constexpr D3Element kSigma{1, 0};
inline constexpr D3Element kTau{0, 1};

/// (x * y)(u) = x(y(u)); uses tau sigma = sigma tau^2.
inline D3Element compose(const D3Element& x, const D3Element& y) {
  if (y.s == 0) return {x.s, (x.t + y.t) % 3};
  return {(x.s + 1) % 2, (2 * x.t + y.t) % 3};
}

inline std::vector<D3Element> d3_elements() { return {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}; }

/// Parses a word over {s, t} (or sigma/tau, or the Greek letters); "1" or "" is the identity.
inline D3Element parse_d3_word(std::string_view w) {
  D3Element g;
  std::size_t k = 0;
  auto take = [&](std::string_view tok) {
    if (w.substr(k, tok.size()) == tok) {
      k += tok.size();
      return true;
    }
    return false;
  };
  if (w == "1") return g;
  while (k < w.size()) {
    if (take("sigma") || take("\xcf\x83") || take("s"))
      g = compose(g, kSigma);
    else if (take("tau") || take("\xcf\x84") || take("t"))
      g = compose(g, kTau);
    else if (take("*") || take(" "))
      continue;
    else
      throw ParseError("malformed D3 word '" + std::string(w) + "'");
  }
  return g;
}

inline std::string d3_name(const D3Element& g) {
  std::string s = g.s ? "sigma" : "";
  for (int k = 0; k < g.t; ++k) s += "tau";
  return s.empty() ? "1" : s;
}

namespace detail {

/// The algebra automorphism of U(sl2) with the given generator images.
inline PBWElement substitute(const PBWElement& x, const std::array<PBWElement, 3>& img) {
  std::array<std::vector<PBWElement>, 3> powers;
  auto power = [&](int g, std::uint32_t k) -> const PBWElement& {
    auto& p = powers[g];
    if (p.empty()) p.push_back(PBWElement(1));
    while (p.size() <= k) p.push_back(p.back() * img[g]);
    return p[k];
  };
  PBWElement out;
  for (const auto& [m, c] : x.terms()) out += power(0, m.e) * power(1, m.f) * power(2, m.h) * c;
  return out;
}

inline PBWElement apply_sigma(const PBWElement& x) {
  const GaussianRational i = GaussianRational::i();
  PBWElement E = PBWElement::E(), F = PBWElement::F(), H = PBWElement::H();
  return substitute(x, {F * i, E * (-i), -H});
}

inline PBWElement apply_tau(const PBWElement& x) {
  const GaussianRational i = GaussianRational::i();
  PBWElement E = PBWElement::E(), F = PBWElement::F(), H = PBWElement::H();
  return substitute(x, {(H - E * i - F * i) / 2, (H + E * i + F * i) / 2, E * i - F * i});
}

}  // namespace detail

inline PBWElement d3_apply(const D3Element& g, PBWElement x) {
  for (int k = 0; k < g.t; ++k) x = detail::apply_tau(x);
  if (g.s) x = detail::apply_sigma(x);
  return x;
}

struct SignedSymbol {
  int sign = 1;
  RacahSymbol symbol = RacahSymbol::A;
  friend bool operator==(const SignedSymbol&, const SignedSymbol&) = default;
};

/// The D3 action on the Racah algebra restricted to its named elements.
inline SignedSymbol d3_apply(const D3Element& g, RacahSymbol u) {
  using S = RacahSymbol;
  auto sigma = [](SignedSymbol x) -> SignedSymbol {
    static const std::map<S, SignedSymbol> t = {
        {S::A, {1, S::C}},       {S::B, {1, S::B}},        {S::C, {1, S::A}},       {S::Delta, {-1, S::Delta}},
        {S::alpha, {-1, S::gamma}}, {S::beta, {-1, S::beta}}, {S::gamma, {-1, S::alpha}}, {S::delta, {1, S::delta}},
        {S::OmegaA, {1, S::OmegaC}}, {S::OmegaB, {1, S::OmegaB}}, {S::OmegaC, {1, S::OmegaA}}};
    SignedSymbol y = t.at(x.symbol);
    return {x.sign * y.sign, y.symbol};
  };
  auto tau = [](SignedSymbol x) -> SignedSymbol {
    static const std::map<S, SignedSymbol> t = {
        {S::A, {1, S::B}},         {S::B, {1, S::C}},        {S::C, {1, S::A}},         {S::Delta, {1, S::Delta}},
        {S::alpha, {1, S::beta}},  {S::beta, {1, S::gamma}}, {S::gamma, {1, S::alpha}}, {S::delta, {1, S::delta}},
        {S::OmegaA, {1, S::OmegaB}}, {S::OmegaB, {1, S::OmegaC}}, {S::OmegaC, {1, S::OmegaA}}};
    SignedSymbol y = t.at(x.symbol);
    return {x.sign * y.sign, y.symbol};
  };
  SignedSymbol x{1, u};
  for (int k = 0; k < g.t; ++k) x = tau(x);
  if (g.s) x = sigma(x);
  return x;
}

/// D3 presentation relations on both algebras, Lambda invariance, and
/// g(u#) = (g u)# for g in {sigma, tau} on every named element.
inline Report verify_equivariance() {
  Report r;
  PBWElement E = PBWElement::E(), F = PBWElement::F(), H = PBWElement::H();
  const std::vector<std::pair<std::string, std::vector<D3Element>>> relations = {
      {"sigma^2", {kSigma, kSigma}}, {"tau^3", {kTau, kTau, kTau}}, {"(sigma tau)^2", {kSigma, kTau, kSigma, kTau}}};
  for (const auto& [name, word] : relations) {
    D3Element g;
    for (const auto& w : word) g = compose(g, w);
    r.push_back({"word " + name + " reduces to 1", g == D3Element{}, g == D3Element{} ? 0u : 1u});
    for (const auto& [gname, x] : std::vector<std::pair<std::string, PBWElement>>{{"E", E}, {"F", F}, {"H", H}}) {
      PBWElement y = x;
      for (auto it = word.rbegin(); it != word.rend(); ++it) y = d3_apply(*it, y);
      r.push_back(residual_check(name + " on U: " + gname, y - x));
    }
    for (auto u : kRacahSymbols) {
      SignedSymbol y{1, u};
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        SignedSymbol z = d3_apply(*it, y.symbol);
        y = {y.sign * z.sign, z.symbol};
      }
      bool ok = y == SignedSymbol{1, u};
      r.push_back({name + " on R: " + symbol_name(u), ok, ok ? 0u : 1u});
    }
  }
  // the composite acts on U as the product of the automorphisms
  for (const auto& g : d3_elements()) {
    for (const auto& h : d3_elements()) {
      PBWElement lhs = d3_apply(compose(g, h), H + E * 2 + F * 3);
      PBWElement rhs = d3_apply(g, d3_apply(h, H + E * 2 + F * 3));
      r.push_back(residual_check("(" + d3_name(g) + ")(" + d3_name(h) + ") composite", lhs - rhs));
    }
  }
  PBWElement L = casimir();
  for (const auto& g : d3_elements()) r.push_back(residual_check(d3_name(g) + "(Lambda) - Lambda", d3_apply(g, L) - L));
  for (const auto& g : {kSigma, kTau})
    for (auto u : kRacahSymbols) {
      SignedSymbol gu = d3_apply(g, u);
      PBWElement lhs = d3_apply(g, sharp(u));
      PBWElement rhs = sharp(gu.symbol) * GaussianRational(gu.sign);
      r.push_back(residual_check(d3_name(g) + "(" + symbol_name(u) + "#) - (" + d3_name(g) + " " + symbol_name(u) + ")#",
                                 lhs - rhs));
    }
  return r;
}

/// Identities in the even subalgebra used to rewrite the generator images.
inline Report verify_even_identities() {
  PBWElement E = PBWElement::E(), F = PBWElement::F(), H = PBWElement::H(), L = casimir();
  PBWElement E2 = E * E, F2 = F * F, H2 = H * H;
  Report r;
  r.push_back(residual_check("[H^2,E] - 4(H-1)E", commutator(H2, E) - (H - 1) * E * 4));
  r.push_back(residual_check("[H^2,F] + 4(H+1)F", commutator(H2, F) + (H + 1) * F * 4));
  r.push_back(residual_check("[H^2,E^2] - 8(H-2)E^2", commutator(H2, E2) - (H - 2) * E2 * 8));
  r.push_back(residual_check("[H^2,F^2] + 8(H+2)F^2", commutator(H2, F2) + (H + 2) * F2 * 8));
  r.push_back(residual_check("[H,E^2] - 4E^2", commutator(H, E2) - E2 * 4));
  r.push_back(residual_check("[H,F^2] + 4F^2", commutator(H, F2) + F2 * 4));
  r.push_back(residual_check("16E^2F^2 - (H^2-2H-2Lambda)(H^2-6H-2Lambda+8)",
                             E2 * F2 * 16 - (H2 - H * 2 - L * 2) * (H2 - H * 6 - L * 2 + 8)));
  r.push_back(residual_check("16F^2E^2 - (H^2+2H-2Lambda)(H^2+6H-2Lambda+8)",
                             F2 * E2 * 16 - (H2 + H * 2 - L * 2) * (H2 + H * 6 - L * 2 + 8)));
  r.push_back(residual_check("A# - ((Lambda+E^2+F^2)/16 - H^2/32 - 1/4)",
                             sharp(RacahSymbol::A) - ((L + E2 + F2) / 16 - H2 / 32 - GaussianRational::frac(1, 4))));
  r.push_back(residual_check("B# - (H^2/16 - 1/4)", sharp(RacahSymbol::B) - (H2 / 16 - GaussianRational::frac(1, 4))));
  r.push_back(residual_check("C# - ((Lambda-E^2-F^2)/16 - H^2/32 - 1/4)",
                             sharp(RacahSymbol::C) - ((L - E2 - F2) / 16 - H2 / 32 - GaussianRational::frac(1, 4))));
  r.push_back(residual_check("Delta# - (F^2(H-2) - E^2(H+2))/64",
                             sharp(RacahSymbol::Delta) - (F2 * (H - 2) - E2 * (H + 2)) / 64));
  for (auto s : kRacahSymbols) {
    PBWElement odd;
    for (const auto& [m, c] : sharp(s).terms())
      if (m.degree() % 2) odd.add(m, c);
    r.push_back(residual_check(symbol_name(s) + "# lies in the even subalgebra", odd));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Homogeneous components and the coefficient tables behind the Casimir image

using LambdaKey = std::tuple<int, unsigned, unsigned>;  // (n, i, k) for E^{2n} Lambda^i H^k or F^{-2n} ...
using LambdaCoords = std::map<LambdaKey, GaussianRational>;

inline CheckResult coordinate_check(std::string name, const PBWElement& x, const LambdaCoords& expected) {
  LambdaCoords got = lambda_coordinates(x);
  std::size_t bad = 0;
  for (const auto& [k, c] : got) {
    auto it = expected.find(k);
    if (it == expected.end() || it->second != c) ++bad;
  }
  for (const auto& [k, c] : expected)
    if (!c.is_zero() && !got.count(k)) ++bad;
  return {std::move(name), bad == 0, bad};
}

/// Homogeneous components of the generator images, and the Lambda-basis
/// coefficients of every product entering the components of Omega_B#.
inline Report verify_homogeneous_tables() {
  using S = RacahSymbol;
  auto q = [](long long p, long long d) { return GaussianRational::frac(p, d); };
  PBWElement E = PBWElement::E(), F = PBWElement::F(), H = PBWElement::H(), L = casimir();
  PBWElement E2 = E * E, F2 = F * F, H2 = H * H;
  Report r;
  auto comp = [](S s, int n) { return homogeneous_component(sharp(s), n); };
  // degrees present and their values
  struct Row {
    S s;
    PBWElement m2, z0, p2;
  };
  const std::vector<Row> rows = {
      {S::A, F2 / 16, L / 16 - H2 / 32 - q(1, 4), E2 / 16},
      {S::B, PBWElement(), H2 / 16 - q(1, 4), PBWElement()},
      {S::C, -F2 / 16, L / 16 - H2 / 32 - q(1, 4), -E2 / 16},
      {S::Delta, F2 * H / 64 - F2 / 32, PBWElement(), -(E2 * H) / 64 - E2 / 32},
      {S::delta, PBWElement(), (L - 6) / 8, PBWElement()},
  };
  for (const auto& row : rows) {
    PBWElement rest = sharp(row.s) - comp(row.s, -2) - comp(row.s, 0) - comp(row.s, 2);
    r.push_back(residual_check(symbol_name(row.s) + "# has no components outside degrees -2, 0, 2", rest));
    r.push_back(residual_check(symbol_name(row.s) + "#_{-2}", comp(row.s, -2) - row.m2));
    r.push_back(residual_check(symbol_name(row.s) + "#_0", comp(row.s, 0) - row.z0));
    r.push_back(residual_check(symbol_name(row.s) + "#_2", comp(row.s, 2) - row.p2));
  }

  PBWElement Am = comp(S::A, -2), A0 = comp(S::A, 0), Ap = comp(S::A, 2);
  PBWElement B0 = comp(S::B, 0);
  PBWElement Cm = comp(S::C, -2), C0 = comp(S::C, 0), Cp = comp(S::C, 2);
  PBWElement Dm = comp(S::Delta, -2), Dp = comp(S::Delta, 2);
  PBWElement d0 = comp(S::delta, 0);

  // degree -4: basis F^4 H^k
  auto m4 = [&](long long a, long long b, long long c, long long d, long long e, long long f) {
    return LambdaCoords{{{-2, 0, 0}, q(a, b)}, {{-2, 0, 1}, q(c, d)}, {{-2, 0, 2}, q(e, f)}};
  };
  r.push_back(coordinate_check("(Delta#_{-2})^2 in U_{-4}", Dm * Dm, m4(3, 1024, -1, 512, 1, 4096)));
  r.push_back(coordinate_check("C#_{-2} B#_0 A#_{-2} in U_{-4}", Cm * B0 * Am, m4(-3, 1024, 1, 512, -1, 4096)));
  r.push_back(coordinate_check("A#_{-2} B#_0 C#_{-2} in U_{-4}", Am * B0 * Cm, m4(-3, 1024, 1, 512, -1, 4096)));

  // degree -2: basis F^2 Lambda H^k (k <= 2), F^2 H^k (k <= 4)
  auto m2 = [&](std::array<std::pair<long long, long long>, 8> c) {
    LambdaCoords out;
    const LambdaKey keys[8] = {{-1, 1, 0}, {-1, 1, 1}, {-1, 1, 2}, {-1, 0, 0},
                               {-1, 0, 1}, {-1, 0, 2}, {-1, 0, 3}, {-1, 0, 4}};
    for (int j = 0; j < 8; ++j)
      if (c[j].first) out[keys[j]] = q(c[j].first, c[j].second);
    return out;
  };
  r.push_back(coordinate_check("C#_{-2} B#_0 A#_0 in U_{-2}", Cm * B0 * A0,
                               m2({{{1, 1024}, {0, 1}, {-1, 4096}, {-1, 256}, {0, 1}, {1, 2048}, {0, 1}, {1, 8192}}})));
  r.push_back(coordinate_check(
      "C#_0 B#_0 A#_{-2} in U_{-2}", C0 * B0 * Am,
      m2({{{3, 1024}, {-1, 512}, {1, 4096}, {-9, 256}, {9, 256}, {-25, 2048}, {1, 512}, {-1, 8192}}})));
  r.push_back(coordinate_check("A#_{-2} B#_0 C#_0 in U_{-2}", Am * B0 * C0,
                               m2({{{-1, 1024}, {0, 1}, {1, 4096}, {1, 256}, {0, 1}, {-1, 2048}, {0, 1}, {-1, 8192}}})));
  r.push_back(coordinate_check(
      "A#_0 B#_0 C#_{-2} in U_{-2}", A0 * B0 * Cm,
      m2({{{-3, 1024}, {1, 512}, {-1, 4096}, {9, 256}, {-9, 256}, {25, 2048}, {-1, 512}, {1, 8192}}})));

  // degree 0: basis Lambda^2 H^k (k <= 2), Lambda H^k (k <= 4), H^k (k <= 6)
  auto m0 = [&](std::array<std::pair<long long, long long>, 15> c) {
    LambdaCoords out;
    const LambdaKey keys[15] = {{0, 2, 0}, {0, 2, 1}, {0, 2, 2}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {0, 1, 3}, {0, 1, 4},
                                {0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {0, 0, 4}, {0, 0, 5}, {0, 0, 6}};
    for (int j = 0; j < 15; ++j)
      if (c[j].first) out[keys[j]] = q(c[j].first, c[j].second);
    return out;
  };
  using P = std::pair<long long, long long>;
  const P z{0, 1};
  r.push_back(coordinate_check("Delta#_2 Delta#_{-2} in U_0", Dp * Dm,
                               m0({P{-1, 4096}, P{1, 4096}, P{-1, 16384}, P{1, 1024}, P{-1, 512}, P{3, 2048},
                                   P{-1, 2048}, P{1, 16384}, z, P{1, 1024}, P{-9, 4096}, P{1, 512}, P{-7, 8192},
                                   P{3, 16384}, P{-1, 65536}})));
  r.push_back(coordinate_check("Delta#_{-2} Delta#_2 in U_0", Dm * Dp,
                               m0({P{-1, 4096}, P{-1, 4096}, P{-1, 16384}, P{1, 1024}, P{1, 512}, P{3, 2048},
                                   P{1, 2048}, P{1, 16384}, z, P{-1, 1024}, P{-9, 4096}, P{-1, 512}, P{-7, 8192},
                                   P{-3, 16384}, P{-1, 65536}})));
  r.push_back(coordinate_check("(B#_0)^2 in U_0", B0 * B0,
                               m0({z, z, z, z, z, z, z, z, P{1, 16}, z, P{-1, 32}, z, P{1, 256}, z, z})));
  r.push_back(coordinate_check("B#_0 delta#_0 in U_0", B0 * d0,
                               m0({z, z, z, P{-1, 32}, z, P{1, 128}, z, z, P{3, 16}, z, P{-3, 64}, z, z, z, z})));
  r.push_back(coordinate_check("A#_0 B#_0 C#_0 in U_0", A0 * B0 * C0,
                               m0({P{-1, 1024}, z, P{1, 4096}, P{1, 128}, z, P{-1, 1024}, z, P{-1, 4096}, P{-1, 64},
                                   z, z, z, P{3, 4096}, z, P{1, 16384}})));
  const auto plus = m0({P{-3, 4096}, P{1, 2048}, P{-1, 16384}, P{3, 1024}, P{-5, 1024}, P{3, 1024}, P{-3, 4096},
                        P{1, 16384}, z, P{3, 1024}, P{-23, 4096}, P{17, 4096}, P{-3, 2048}, P{1, 4096}, P{-1, 65536}});
  const auto minus = m0({P{-3, 4096}, P{-1, 2048}, P{-1, 16384}, P{3, 1024}, P{5, 1024}, P{3, 1024}, P{3, 4096},
                         P{1, 16384}, z, P{-3, 1024}, P{-23, 4096}, P{-17, 4096}, P{-3, 2048}, P{-1, 4096},
                         P{-1, 65536}});
  r.push_back(coordinate_check("C#_2 B#_0 A#_{-2} in U_0", Cp * B0 * Am, plus));
  r.push_back(coordinate_check("C#_{-2} B#_0 A#_2 in U_0", Cm * B0 * Ap, minus));
  r.push_back(coordinate_check("A#_2 B#_0 C#_{-2} in U_0", Ap * B0 * Cm, plus));
  r.push_back(coordinate_check("A#_{-2} B#_0 C#_2 in U_0", Am * B0 * Cp, minus));

  // assembled components of Omega_B#
  PBWElement om4 = Dm * Dm + (Cm * B0 * Am + Am * B0 * Cm) / 2;
  PBWElement om2 = (Cm * B0 * A0 + C0 * B0 * Am + Am * B0 * C0 + A0 * B0 * Cm) / 2;
  PBWElement om0 = Dp * Dm + Dm * Dp + B0 * B0 - B0 * d0 + A0 * B0 * C0 +
                   (Cp * B0 * Am + Cm * B0 * Ap + Ap * B0 * Cm + Am * B0 * Cp) / 2;
  const PBWElement& OB = sharp(S::OmegaB);
  r.push_back(residual_check("(Omega_B#)_{-4}", homogeneous_component(OB, -4)));
  r.push_back(residual_check("(Omega_B#)_{-4} from components", om4));
  r.push_back(residual_check("(Omega_B#)_{-2}", homogeneous_component(OB, -2)));
  r.push_back(residual_check("(Omega_B#)_{-2} from components", om2));
  r.push_back(residual_check("(Omega_B#)_0 from components - (-3/1024)(Lambda-4)(Lambda-12)",
                             om0 - casimir_image_closed_form()));
  r.push_back(residual_check("(Omega_B#)_2 = sigma((Omega_B#)_{-2})",
                             homogeneous_component(OB, 2) - d3_apply(kSigma, homogeneous_component(OB, -2))));
  r.push_back(residual_check("(Omega_B#)_4 = sigma((Omega_B#)_{-4})",
                             homogeneous_component(OB, 4) - d3_apply(kSigma, homogeneous_component(OB, -4))));
  return r;
}

}  // namespace racahlab
