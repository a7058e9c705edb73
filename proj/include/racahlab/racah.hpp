#pragma once

// Operator-level Racah algebra: quadruples of matrices, the defining
// presentation, central elements, Casimirs and twisting by D3.

#include <array>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "racahlab/errors.hpp"
#include "racahlab/linalg.hpp"
#include "racahlab/matrix.hpp"
#include "racahlab/report.hpp"
#include "racahlab/sharp.hpp"

namespace racahlab {

/// Four same-size operators meant to satisfy the Racah presentation.
struct RacahRep {
  ExactMatrix A, B, C, Delta;

  RacahRep() = default;
  RacahRep(ExactMatrix a, ExactMatrix b, ExactMatrix c, ExactMatrix delta)
      : A(std::move(a)), B(std::move(b)), C(std::move(c)), Delta(std::move(delta)) {
    check_shapes();
  }

  std::size_t dim() const { return A.rows(); }

  void check_shapes() const {
    const std::size_t n = A.rows();
    for (const auto* m : {&A, &B, &C, &Delta})
      if (m->rows() != n || m->cols() != n) throw DimensionMismatch("Racah operators must be square and of one size");
  }
};

inline CheckResult matrix_check(std::string name, const ExactMatrix& residual) {
  std::size_t k = residual.nonzero_count();
  return {std::move(name), k == 0, k};
}

namespace detail {

struct RacahWords {
  ExactMatrix alpha, beta, gamma, delta;
};

inline RacahWords central_words(const RacahRep& r) {
  return {commutator(r.A, r.Delta) + r.A * r.C - r.B * r.A, commutator(r.B, r.Delta) + r.B * r.A - r.C * r.B,
          commutator(r.C, r.Delta) + r.C * r.B - r.A * r.C, r.A + r.B + r.C};
}

}  // namespace detail

/// [A,B] = [B,C] = [C,A] = 2 Delta, and alpha, beta, gamma, delta central.
inline Report verify_presentation(const RacahRep& r) {
  r.check_shapes();
  Report out;
  ExactMatrix twoD = r.Delta * GR(2);
  out.push_back(matrix_check("[A,B] - 2Delta", commutator(r.A, r.B) - twoD));
  out.push_back(matrix_check("[B,C] - 2Delta", commutator(r.B, r.C) - twoD));
  out.push_back(matrix_check("[C,A] - 2Delta", commutator(r.C, r.A) - twoD));
  auto w = detail::central_words(r);
  const std::array<std::pair<const char*, const ExactMatrix*>, 4> central = {
      {{"alpha", &w.alpha}, {"beta", &w.beta}, {"gamma", &w.gamma}, {"delta", &w.delta}}};
  const std::array<std::pair<const char*, const ExactMatrix*>, 4> gens = {
      {{"A", &r.A}, {"B", &r.B}, {"C", &r.C}, {"Delta", &r.Delta}}};
  for (const auto& [zn, z] : central)
    for (const auto& [gn, g] : gens)
      out.push_back(matrix_check(std::string("[") + zn + "," + gn + "]", commutator(*z, *g)));
  return out;
}

/// A matrix together with its scalar value when it is a multiple of I.
struct CentralValue {
  ExactMatrix matrix;
  std::optional<GR> scalar;
};

inline CentralValue central_value(ExactMatrix m) {
  std::optional<GR> s;
  if (m.rows() == 0 || m.is_scalar()) s = m.rows() ? m(0, 0) : GR();
  return {std::move(m), s};
}

struct CentralValues {
  CentralValue alpha, beta, gamma, delta;
};

inline CentralValues central_values(const RacahRep& r) {
  auto w = detail::central_words(r);
  return {central_value(std::move(w.alpha)), central_value(std::move(w.beta)), central_value(std::move(w.gamma)),
          central_value(std::move(w.delta))};
}

struct Casimirs {
  CentralValue OmegaA, OmegaB, OmegaC;
};

/// Omega_A, Omega_B, Omega_C evaluated term by term with the symmetrized products.
inline Casimirs casimirs(const RacahRep& r) {
  auto w = detail::central_words(r);
  const ExactMatrix &A = r.A, &B = r.B, &C = r.C;
  ExactMatrix D2 = r.Delta * r.Delta;
  GR half = GR::frac(1, 2);
  ExactMatrix oa = D2 + (B * A * C + C * A * B) * half + A * A + B * w.gamma - C * w.beta - A * w.delta;
  ExactMatrix ob = D2 + (C * B * A + A * B * C) * half + B * B + C * w.alpha - A * w.gamma - B * w.delta;
  ExactMatrix oc = D2 + (A * C * B + B * C * A) * half + C * C + A * w.beta - B * w.alpha - C * w.delta;
  return {central_value(std::move(oa)), central_value(std::move(ob)), central_value(std::move(oc))};
}

inline Report verify_casimir_centrality(const RacahRep& r) {
  Casimirs cs = casimirs(r);
  Report out;
  const std::array<std::pair<const char*, const ExactMatrix*>, 3> om = {
      {{"Omega_A", &cs.OmegaA.matrix}, {"Omega_B", &cs.OmegaB.matrix}, {"Omega_C", &cs.OmegaC.matrix}}};
  const std::array<std::pair<const char*, const ExactMatrix*>, 4> gens = {
      {{"A", &r.A}, {"B", &r.B}, {"C", &r.C}, {"Delta", &r.Delta}}};
  for (const auto& [on, o] : om)
    for (const auto& [gn, g] : gens) out.push_back(matrix_check(std::string("[") + on + "," + gn + "]", commutator(*o, *g)));
  return out;
}

/// The six cubic relations between pairs of generators and the central elements.
inline Report verify_cubic_relations(const RacahRep& r) {
  auto w = detail::central_words(r);
  auto rel = [](const ExactMatrix& X, const ExactMatrix& Y) {
    return X * X * Y - X * Y * X * GR(2) + Y * X * X - X * Y * GR(2) - Y * X * GR(2);
  };
  auto rhs = [&](const ExactMatrix& X, const ExactMatrix& z, int sign) {
    return X * X * GR(2) - X * w.delta * GR(2) + z * GR(2 * sign);
  };
  const ExactMatrix &A = r.A, &B = r.B, &C = r.C;
  Report out;
  out.push_back(matrix_check("A^2B-2ABA+BA^2-2AB-2BA = 2A^2-2Adelta+2alpha", rel(A, B) - rhs(A, w.alpha, 1)));
  out.push_back(matrix_check("B^2C-2BCB+CB^2-2BC-2CB = 2B^2-2Bdelta+2beta", rel(B, C) - rhs(B, w.beta, 1)));
  out.push_back(matrix_check("C^2A-2CAC+AC^2-2CA-2AC = 2C^2-2Cdelta+2gamma", rel(C, A) - rhs(C, w.gamma, 1)));
  out.push_back(matrix_check("A^2C-2ACA+CA^2-2AC-2CA = 2A^2-2Adelta-2alpha", rel(A, C) - rhs(A, w.alpha, -1)));
  out.push_back(matrix_check("B^2A-2BAB+AB^2-2BA-2AB = 2B^2-2Bdelta-2beta", rel(B, A) - rhs(B, w.beta, -1)));
  out.push_back(matrix_check("C^2B-2CBC+BC^2-2CB-2BC = 2C^2-2Cdelta-2gamma", rel(C, B) - rhs(C, w.gamma, -1)));
  return out;
}

/// The operator of a named element of the Racah algebra on r.
inline ExactMatrix racah_operator(const RacahRep& r, RacahSymbol s) {
  switch (s) {
    case RacahSymbol::A: return r.A;
    case RacahSymbol::B: return r.B;
    case RacahSymbol::C: return r.C;
    case RacahSymbol::Delta: return r.Delta;
    case RacahSymbol::alpha: return detail::central_words(r).alpha;
    case RacahSymbol::beta: return detail::central_words(r).beta;
    case RacahSymbol::gamma: return detail::central_words(r).gamma;
    case RacahSymbol::delta: return detail::central_words(r).delta;
    case RacahSymbol::OmegaA: return casimirs(r).OmegaA.matrix;
    case RacahSymbol::OmegaB: return casimirs(r).OmegaB.matrix;
    case RacahSymbol::OmegaC: return casimirs(r).OmegaC.matrix;
  }
  throw Error("unknown Racah symbol");
}

/// The twisted module V^g: u acts as g(u) acts on V.
inline RacahRep twist(const RacahRep& r, const D3Element& g) {
  auto act = [&](RacahSymbol u) {
    SignedSymbol s = d3_apply(g, u);
    ExactMatrix m = racah_operator(r, s.symbol);
    return s.sign < 0 ? -m : m;
  };
  return RacahRep(act(RacahSymbol::A), act(RacahSymbol::B), act(RacahSymbol::C), act(RacahSymbol::Delta));
}

/// Action of r on the subspace spanned by the columns of basis, in that basis;
/// nullopt when the subspace is not invariant.
inline std::optional<RacahRep> restrict_rep(const RacahRep& r, const ExactMatrix& basis) {
  std::array<ExactMatrix, 4> out;
  const std::array<const ExactMatrix*, 4> ops = {&r.A, &r.B, &r.C, &r.Delta};
  for (std::size_t k = 0; k < 4; ++k) {
    auto x = solve_columns(basis, *ops[k] * basis);
    if (!x) return std::nullopt;
    out[k] = std::move(*x);
  }
  return RacahRep(std::move(out[0]), std::move(out[1]), std::move(out[2]), std::move(out[3]));
}

// Text format: four labeled blocks "A", "B", "C", "Delta", each followed by an
// exact matrix.

inline void write_rep(std::ostream& os, const RacahRep& r) {
  const std::array<std::pair<const char*, const ExactMatrix*>, 4> blocks = {
      {{"A", &r.A}, {"B", &r.B}, {"C", &r.C}, {"Delta", &r.Delta}}};
  for (const auto& [name, m] : blocks) {
    os << name << '\n';
    write_matrix(os, *m);
  }
}

inline std::string rep_to_text(const RacahRep& r) {
  std::ostringstream os;
  write_rep(os, r);
  return os.str();
}

inline RacahRep read_rep(std::istream& is) {
  std::array<std::optional<ExactMatrix>, 4> got;
  const std::array<const char*, 4> names = {"A", "B", "C", "Delta"};
  std::string label;
  while (is >> label) {
    std::size_t k = 0;
    while (k < 4 && label != names[k]) ++k;
    if (k == 4) throw ParseError("unknown block label '" + label + "'");
    if (got[k]) throw ParseError("duplicate block '" + label + "'");
    got[k] = read_matrix(is);
  }
  for (std::size_t k = 0; k < 4; ++k)
    if (!got[k]) throw ParseError(std::string("missing block '") + names[k] + "'");
  return RacahRep(*got[0], *got[1], *got[2], *got[3]);
}

inline RacahRep rep_from_text(const std::string& s) {
  std::istringstream is(s);
  return read_rep(is);
}

}  // namespace racahlab
