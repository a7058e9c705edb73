#pragma once

// Finite-dimensional sl2-modules and their pullbacks to the Racah algebra:
// L_n and its even halves, the hypercube module and the halved cube.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "racahlab/errors.hpp"
#include "racahlab/linalg.hpp"
#include "racahlab/racah.hpp"
#include "racahlab/sharp.hpp"

namespace racahlab {

struct Sl2Rep {
  ExactMatrix E, F, H;
  std::vector<std::string> labels;

  std::size_t dim() const { return H.rows(); }
};

inline Report verify_sl2_relations(const Sl2Rep& r) {
  Report out;
  out.push_back(matrix_check("[H,E] - 2E", commutator(r.H, r.E) - r.E * GR(2)));
  out.push_back(matrix_check("[H,F] + 2F", commutator(r.H, r.F) + r.F * GR(2)));
  out.push_back(matrix_check("[E,F] - H", commutator(r.E, r.F) - r.H));
  return out;
}

inline ExactMatrix casimir_matrix(const Sl2Rep& r) {
  return r.E * r.F + r.F * r.E + r.H * r.H * GR::frac(1, 2);
}

/// The matrix of a PBW element acting on r.
inline ExactMatrix evaluate(const PBWElement& x, const Sl2Rep& r) {
  const std::size_t n = r.dim();
  std::vector<ExactMatrix> pe{ExactMatrix::identity(n)}, pf{ExactMatrix::identity(n)}, ph{ExactMatrix::identity(n)};
  auto power = [](std::vector<ExactMatrix>& p, const ExactMatrix& g, std::uint32_t k) -> const ExactMatrix& {
    while (p.size() <= k) p.push_back(p.back() * g);
    return p[k];
  };
  ExactMatrix out(n, n);
  for (const auto& [m, c] : x.terms()) out += power(pe, r.E, m.e) * power(pf, r.F, m.f) * power(ph, r.H, m.h) * c;
  return out;
}

/// A, B, C, Delta acting through the images of the Racah generators.
inline RacahRep sharp_pullback(const Sl2Rep& r) {
  return RacahRep(evaluate(sharp(RacahSymbol::A), r), evaluate(sharp(RacahSymbol::B), r),
                  evaluate(sharp(RacahSymbol::C), r), evaluate(sharp(RacahSymbol::Delta), r));
}

/// E v_i = (n-i+1) v_{i-1}, F v_i = (i+1) v_{i+1}, H v_i = (n-2i) v_i.
inline Sl2Rep build_Ln(int n) {
  if (n < 0) throw Error("L_n needs n >= 0");
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  Sl2Rep r{ExactMatrix(dim, dim), ExactMatrix(dim, dim), ExactMatrix(dim, dim), {}};
  for (int i = 0; i <= n; ++i) {
    r.H(i, i) = GR(n - 2 * i);
    if (i >= 1) r.E(i - 1, i) = GR(n - i + 1);
    if (i < n) r.F(i + 1, i) = GR(i + 1);
    r.labels.push_back("v" + std::to_string(i));
  }
  return r;
}

/// A standard chain v_0..v_n in an ambient module: columns of `chain`, with
/// E v_i = (n-i+1) v_{i-1} and F v_i = (i+1) v_{i+1}.
struct Sl2Copy {
  int n = 0;
  ExactMatrix chain;
};

/// v_i = F^i v_0 / i! for a highest-weight vector v_0 of weight n.
inline Sl2Copy chain_from_highest(const Sl2Rep& r, const Vec<GR>& v0, int n) {
  std::vector<Vec<GR>> cols{v0};
  for (int i = 1; i <= n; ++i) {
    Vec<GR> next = r.F.apply(cols.back());
    GR inv = GR(1) / GR(i);
    for (auto& x : next) x *= inv;
    cols.push_back(std::move(next));
  }
  return {n, from_columns(cols, r.dim())};
}

/// One even half of a copy of L_n: u_i = v_{2i + parity}, with E^2, F^2, H,
/// Lambda written in the u basis.
struct EvenHalf {
  int n = 0;
  int parity = 0;
  ExactMatrix basis;  // ambient columns u_0, u_1, ...
  ExactMatrix E2, F2, H, Lambda;

  std::size_t dim() const { return basis.cols(); }
};

inline std::size_t half_dim(int n, int parity) { return parity == 0 ? n / 2 + 1 : (n + 1) / 2; }

inline EvenHalf even_half(const Sl2Rep& r, const Sl2Copy& copy, int parity) {
  if (parity == 1 && copy.n < 1) throw Error("L_0 has no odd half");
  std::vector<std::size_t> idx;
  for (int j = parity; j <= copy.n; j += 2) idx.push_back(j);
  std::vector<std::size_t> rows(copy.chain.rows());
  for (std::size_t k = 0; k < rows.size(); ++k) rows[k] = k;
  EvenHalf h{copy.n, parity, copy.chain.submatrix(rows, idx), {}, {}, {}, {}};
  auto restrict_op = [&](const ExactMatrix& m) {
    auto x = solve_columns(h.basis, m * h.basis);
    if (!x) throw Error("even half is not invariant");
    return std::move(*x);
  };
  h.E2 = restrict_op(r.E * r.E);
  h.F2 = restrict_op(r.F * r.F);
  h.H = restrict_op(r.H);
  h.Lambda = restrict_op(casimir_matrix(r));
  return h;
}

/// Both halves of L_n in its standard basis; the odd half is absent for n = 0.
inline std::pair<EvenHalf, std::optional<EvenHalf>> even_halves(const Sl2Rep& r, const Sl2Copy& copy) {
  std::optional<EvenHalf> odd;
  if (copy.n >= 1) odd = even_half(r, copy, 1);
  return {even_half(r, copy, 0), std::move(odd)};
}

inline std::pair<EvenHalf, std::optional<EvenHalf>> even_halves(int n) {
  Sl2Rep r = build_Ln(n);
  return even_halves(r, Sl2Copy{n, ExactMatrix::identity(static_cast<std::size_t>(n) + 1)});
}

/// The half's E^2, F^2, H, Lambda against the closed forms.
inline Report verify_even_half(const EvenHalf& h) {
  const int n = h.n, p = h.parity;
  const std::size_t m = h.dim();
  ExactMatrix E2(m, m), F2(m, m), H(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    const int i = static_cast<int>(k);
    H(k, k) = GR(n - 4 * i - 2 * p);
    if (k >= 1) E2(k - 1, k) = GR(static_cast<long long>(n - 2 * i + 1 - p) * (n - 2 * i + 2 - p));
    if (k + 1 < m) F2(k + 1, k) = GR(static_cast<long long>(2 * i + 1 + p) * (2 * i + 2 + p));
  }
  const std::string tag = "L_" + std::to_string(n) + "^(" + std::to_string(p) + ") ";
  Report out;
  out.push_back(matrix_check(tag + "E^2", h.E2 - E2));
  out.push_back(matrix_check(tag + "F^2", h.F2 - F2));
  out.push_back(matrix_check(tag + "H", h.H - H));
  out.push_back(matrix_check(tag + "Lambda", h.Lambda - ExactMatrix::scalar(m, GR::frac(static_cast<long long>(n) * (n + 2), 2))));
  return out;
}

/// The Racah action on a half predicted in the u basis:
/// A u_i = b_i u_{i-1} + a_i u_i + c_i u_{i+1}, B u_i = theta*_i u_i,
/// C u_i = -b_i u_{i-1} + a_i u_i - c_i u_{i+1}.
inline RacahRep half_racah_closed_form(int n, int parity) {
  const std::size_t m = half_dim(n, parity);
  ExactMatrix A(m, m), B(m, m), C(m, m);
  const long long p = parity;
  for (std::size_t k = 0; k < m; ++k) {
    const long long i = static_cast<long long>(k);
    const long long w = n - 4 * i - 2 * p;
    GR a = GR::frac(static_cast<long long>(n) * (n + 2) - w * w, 32) - GR::frac(1, 4);
    GR b = GR::frac((n - 2 * i + 1 - p) * (n - 2 * i + 2 - p), 16);
    GR c = GR::frac((i + 1) * (2 * i + 1 + 2 * p), 8);
    A(k, k) = a;
    C(k, k) = a;
    B(k, k) = GR::frac(w * w, 16) - GR::frac(1, 4);
    if (k >= 1) {
      A(k - 1, k) = b;
      C(k - 1, k) = -b;
    }
    if (k + 1 < m) {
      A(k + 1, k) = c;
      C(k + 1, k) = -c;
    }
  }
  ExactMatrix Delta = commutator(A, B) * GR::frac(1, 2);
  return RacahRep(std::move(A), std::move(B), std::move(C), std::move(Delta));
}

// Hypercube

/// Vertices are subsets of {1..D} in binary-counter order: subset s is the
/// integer with bit i-1 set for each i in s.
struct HypercubeSpace {
  int D = 0;

  std::size_t size() const { return std::size_t{1} << D; }
  static int weight(std::size_t x) { return std::popcount(x); }
  static int distance(std::size_t x, std::size_t y) { return std::popcount(x ^ y); }
  std::string label(std::size_t x) const {
    std::string s = "{";
    for (int i = 0; i < D; ++i)
      if (x >> i & 1) s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
    return s + "}";
  }
};

struct GraphOperators {
  ExactMatrix A2J, A2Jbar, A2star;
};

struct Hypercube {
  HypercubeSpace space;
  Sl2Rep rep;
  GraphOperators ops;
};

inline Hypercube build_hypercube(int D) {
  if (D < 2) throw Error("hypercube needs D >= 2");
  if (D > 12) throw Error("hypercube dimension capped at D = 12");
  HypercubeSpace X{D};
  const std::size_t N = X.size();
  Hypercube h{X, {ExactMatrix(N, N), ExactMatrix(N, N), ExactMatrix(N, N), {}}, {ExactMatrix(N, N), ExactMatrix(N, N), ExactMatrix(N, N)}};
  for (std::size_t x = 0; x < N; ++x) {
    const int wx = X.weight(x);
    h.rep.H(x, x) = GR(D - 2 * wx);
    h.ops.A2star(x, x) = GR::frac(static_cast<long long>(D - 2 * wx) * (D - 2 * wx) - D, 2);
    h.rep.labels.push_back(X.label(x));
    for (std::size_t y = 0; y < N; ++y) {
      const int dist = X.distance(x, y), wy = X.weight(y);
      // column x holds the image of basis vector x
      if (dist == 1) (wy < wx ? h.rep.E : h.rep.F)(y, x) = GR(1);
      if (dist == 2) (wy == wx ? h.ops.A2J : h.ops.A2Jbar)(y, x) = GR(1);
    }
  }
  return h;
}

inline ExactMatrix distance_operator(const HypercubeSpace& X, int k) {
  const std::size_t N = X.size();
  ExactMatrix m(N, N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      if (X.distance(x, y) == k) m(y, x) = GR(1);
  return m;
}

/// A, B, C from the relation sets; Delta = [A,B]/2.
inline RacahRep hypercube_racah_closed_form(const HypercubeSpace& X) {
  const std::size_t N = X.size();
  const GR base = GR::frac(X.D, 16) - GR::frac(1, 4), eighth = GR::frac(1, 8);
  ExactMatrix A = ExactMatrix::scalar(N, base), B(N, N), C = ExactMatrix::scalar(N, base);
  for (std::size_t x = 0; x < N; ++x) {
    const long long w = X.D - 2 * X.weight(x);
    B(x, x) = GR::frac(w * w, 16) - GR::frac(1, 4);
    for (std::size_t y = 0; y < N; ++y) {
      if (X.distance(x, y) != 2) continue;
      A(y, x) = eighth;
      C(y, x) = X.weight(x) == X.weight(y) ? eighth : -eighth;
    }
  }
  ExactMatrix Delta = commutator(A, B) * GR::frac(1, 2);
  return RacahRep(std::move(A), std::move(B), std::move(C), std::move(Delta));
}

/// Relations, the two-step operators, the Johnson blocks, and the Racah
/// action computed through the images of A, B, C, Delta against the closed
/// forms and the graph operators.
inline Report verify_hypercube(const Hypercube& h) {
  const HypercubeSpace& X = h.space;
  const std::size_t N = X.size();
  const int D = X.D;
  Report out = verify_sl2_relations(h.rep);
  ExactMatrix below(N, N), above(N, N), level(N, N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      if (X.distance(x, y) != 2) continue;
      int wx = X.weight(x), wy = X.weight(y);
      (wy < wx ? below : wy > wx ? above : level)(y, x) = GR(2);
    }
  ExactMatrix lambda = level;
  for (std::size_t x = 0; x < N; ++x) {
    const long long w = D - 2 * X.weight(x);
    lambda(x, x) = GR(D) + GR::frac(w * w, 2);
  }
  out.push_back(matrix_check("E^2 = 2 (R2 below)", h.rep.E * h.rep.E - below));
  out.push_back(matrix_check("F^2 = 2 (R2 above)", h.rep.F * h.rep.F - above));
  out.push_back(matrix_check("Lambda = (D + (D-2|x|)^2/2) + 2 (R2 level)", casimir_matrix(h.rep) - lambda));
  out.push_back(matrix_check("A2J + A2Jbar = R2", h.ops.A2J + h.ops.A2Jbar - distance_operator(X, 2)));
  ExactMatrix star(N, N);
  for (std::size_t x = 0; x < N; ++x) {
    const long long w = D - 2 * X.weight(x);
    star(x, x) = GR::frac(w * w - D, 2);
  }
  out.push_back(matrix_check("A2star = ((D-2|x|)^2 - D)/2", h.ops.A2star - star));
  // A2J is level preserving and each level block is the Johnson graph J(D,k)
  ExactMatrix johnson(N, N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      if (X.weight(x) == X.weight(y) && std::popcount(x & ~y) == 1) johnson(y, x) = GR(1);
  out.push_back(matrix_check("A2J = sum of J(D,k) blocks", h.ops.A2J - johnson));

  RacahRep sharp_route = sharp_pullback(h.rep);
  RacahRep closed = hypercube_racah_closed_form(X);
  out.push_back(matrix_check("A (images) = A (relation sets)", sharp_route.A - closed.A));
  out.push_back(matrix_check("B (images) = B (relation sets)", sharp_route.B - closed.B));
  out.push_back(matrix_check("C (images) = C (relation sets)", sharp_route.C - closed.C));
  out.push_back(matrix_check("Delta (images) = [A,B]/2", sharp_route.Delta - closed.Delta));
  const ExactMatrix base = ExactMatrix::scalar(N, GR::frac(D, 16) - GR::frac(1, 4));
  const GR eighth = GR::frac(1, 8);
  out.push_back(matrix_check("A = D/16 - 1/4 + (A2J + A2Jbar)/8", sharp_route.A - base - (h.ops.A2J + h.ops.A2Jbar) * eighth));
  out.push_back(matrix_check("B = D/16 - 1/4 + A2star/8", sharp_route.B - base - h.ops.A2star * eighth));
  out.push_back(matrix_check("C = D/16 - 1/4 + (A2J - A2Jbar)/8", sharp_route.C - base - (h.ops.A2J - h.ops.A2Jbar) * eighth));
  // the inverse map: the graph operators as images of Racah elements
  const GR four(4), eight(8), shift = GR(2) - GR::frac(D, 2);
  const ExactMatrix I = ExactMatrix::identity(N);
  out.push_back(matrix_check("A2J = 2 - D/2 + 4(A+C)", h.ops.A2J - I * shift - (sharp_route.A + sharp_route.C) * four));
  out.push_back(matrix_check("A2Jbar = 4(A-C)", h.ops.A2Jbar - (sharp_route.A - sharp_route.C) * four));
  out.push_back(matrix_check("A2star = 2 - D/2 + 8B", h.ops.A2star - I * shift - sharp_route.B * eight));
  return out;
}

/// The even-weight vertices and the generators of the two algebras acting there.
struct HalvedCube {
  int D = 0;
  std::vector<std::size_t> vertices;
  std::vector<ExactMatrix> te_generators;  // E^2, F^2, H, Lambda
  std::vector<ExactMatrix> re_generators;  // A, B, C, Delta

  std::size_t dim() const { return vertices.size(); }
};

inline HalvedCube halved_cube(const Hypercube& h) {
  HalvedCube out{h.space.D, {}, {}, {}};
  std::vector<std::size_t> odd;
  for (std::size_t x = 0; x < h.space.size(); ++x) (HypercubeSpace::weight(x) % 2 ? odd : out.vertices).push_back(x);
  auto restrict_op = [&](const ExactMatrix& m) {
    if (!m.submatrix(odd, out.vertices).is_zero()) throw Error("even-weight vertices do not span an invariant subspace");
    return m.submatrix(out.vertices, out.vertices);
  };
  const Sl2Rep& r = h.rep;
  for (const ExactMatrix& m : {ExactMatrix(r.E * r.E), ExactMatrix(r.F * r.F), r.H, casimir_matrix(r)})
    out.te_generators.push_back(restrict_op(m));
  RacahRep R = sharp_pullback(r);
  for (const ExactMatrix* m : {&R.A, &R.B, &R.C, &R.Delta}) out.re_generators.push_back(restrict_op(*m));
  return out;
}

inline HalvedCube halved_cube(int D) { return halved_cube(build_hypercube(D)); }

}  // namespace racahlab
