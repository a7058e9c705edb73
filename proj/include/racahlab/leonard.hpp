#pragma once

// Leonard triples and pairs: for each operator, an eigenbasis ordering in
// which the others are irreducible tridiagonal.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "racahlab/errors.hpp"
#include "racahlab/linalg.hpp"
#include "racahlab/roots.hpp"

namespace racahlab {

using EigenHints = std::optional<std::vector<GR>>;

/// One operator's certificate: its eigenvalues in the certified order and
/// the other operators written in the matching eigenbasis.
struct OperatorCertificate {
  bool diagonalizable = false;
  bool multiplicity_free = false;
  bool path_ordering = false;
  bool irreducible_tridiagonal = false;
  std::vector<GR> eigenvalues;
  std::vector<ExactMatrix> others;
  std::string failure;

  bool pass() const { return irreducible_tridiagonal; }
};

struct LeonardReport {
  std::vector<OperatorCertificate> operators;
  bool verdict = false;
};

/// Path ordering of a graph on 0..n-1 given by its edges, or nullopt when
/// some vertex has degree > 2 or there is a cycle. Components are joined
/// end to end, so a disconnected forest of paths still yields an order.
inline std::optional<std::vector<std::size_t>> path_ordering(std::size_t n,
                                                             const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (const auto& a : adj)
    if (a.size() > 2) return std::nullopt;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> order;
  auto walk = [&](std::size_t start) {
    std::size_t prev = n, cur = start;
    while (true) {
      seen[cur] = true;
      order.push_back(cur);
      std::size_t next = n;
      for (std::size_t w : adj[cur])
        if (w != prev && !seen[w]) next = w;
      if (next == n) break;
      prev = cur;
      cur = next;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v] && adj[v].size() <= 1) walk(v);
  if (order.size() != n) return std::nullopt;  // leftover vertices lie on cycles
  return order;
}

inline bool is_irreducible_tridiagonal(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t gap = r > c ? r - c : c - r;
      if (gap > 1 && !m(r, c).is_zero()) return false;
      if (gap == 1 && m(r, c).is_zero()) return false;
    }
  return true;
}

namespace detail {

struct Eigenbasis {
  std::vector<GR> eigenvalues;
  ExactMatrix basis;  // columns are eigenvectors, one per eigenvalue
  bool diagonalizable = false;
  bool multiplicity_free = false;
};

inline Eigenbasis eigenbasis(const ExactMatrix& m, const EigenHints& hints) {
  std::vector<GR> roots;
  if (hints) {
    roots = *hints;
  } else {
    auto found = rational_roots(minimal_polynomial(m));
    if (!found.splits) throw NonSplitting("an eigenvalue lies outside Q(i) and no hint was supplied");
    roots = found.roots;
  }
  EigenSplit<GR> split = eigen_split(m, roots);
  Eigenbasis out;
  out.diagonalizable = split.diagonalizable;
  out.multiplicity_free = split.diagonalizable && split.spaces.size() == m.rows();
  if (!out.multiplicity_free) return out;
  std::vector<Vec<GR>> cols;
  for (const auto& e : split.spaces) {
    out.eigenvalues.push_back(e.eigenvalue);
    cols.push_back(e.space.basis().front());
  }
  out.basis = from_columns(cols, m.rows());
  return out;
}

inline ExactMatrix permute(const ExactMatrix& m, const std::vector<std::size_t>& order) {
  return m.submatrix(order, order);
}

}  // namespace detail

/// Eigenbasis ordering of diag_op making every matrix in others tridiagonal.
struct Tridiagonalization {
  bool ok = false;
  bool diagonalizable = false;
  bool multiplicity_free = false;
  std::vector<std::size_t> ordering;  // positions in the sorted eigenvalue list
  std::vector<GR> eigenvalues;        // in the certified order
  std::vector<ExactMatrix> matrices;  // others in the ordered eigenbasis
  std::string failure;
};

inline Tridiagonalization tridiagonalize(const ExactMatrix& diag_op, const std::vector<ExactMatrix>& others,
                                         const EigenHints& hints = std::nullopt) {
  Tridiagonalization out;
  detail::Eigenbasis eb = detail::eigenbasis(diag_op, hints);
  out.diagonalizable = eb.diagonalizable;
  out.multiplicity_free = eb.multiplicity_free;
  if (!eb.diagonalizable) {
    out.failure = "not diagonalizable";
    return out;
  }
  if (!eb.multiplicity_free) {
    out.failure = "an eigenspace has dimension > 1";
    return out;
  }
  const std::size_t n = diag_op.rows();
  std::vector<ExactMatrix> conj;
  for (const auto& m : others) {
    auto x = solve_columns(eb.basis, m * eb.basis);
    if (!x) throw Error("eigenbasis does not span the space");
    conj.push_back(std::move(*x));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool linked = false;
      for (const auto& m : conj) linked = linked || !m(i, j).is_zero() || !m(j, i).is_zero();
      if (linked) edges.push_back({i, j});
    }
  auto order = path_ordering(n, edges);
  if (!order) {
    out.failure = "support graph is not contained in a Hamiltonian path";
    return out;
  }
  out.ok = true;
  out.ordering = *order;
  for (std::size_t k : out.ordering) out.eigenvalues.push_back(eb.eigenvalues[k]);
  for (const auto& m : conj) out.matrices.push_back(detail::permute(m, out.ordering));
  return out;
}

namespace detail {

inline OperatorCertificate certify(const ExactMatrix& diag_op, const std::vector<ExactMatrix>& others,
                                   const EigenHints& hints) {
  OperatorCertificate c;
  Tridiagonalization t = tridiagonalize(diag_op, others, hints);
  c.diagonalizable = t.diagonalizable;
  c.multiplicity_free = t.multiplicity_free;
  c.path_ordering = t.ok;
  c.eigenvalues = t.eigenvalues;
  c.others = t.matrices;
  if (!t.ok) {
    c.failure = t.failure;
    return c;
  }
  c.irreducible_tridiagonal = true;
  for (const auto& m : c.others) c.irreducible_tridiagonal = c.irreducible_tridiagonal && is_irreducible_tridiagonal(m);
  if (!c.irreducible_tridiagonal) c.failure = "tridiagonal form is not irreducible";
  return c;
}

inline void require_same_square(const std::vector<const ExactMatrix*>& ms) {
  const std::size_t n = ms.front()->rows();
  if (n == 0) throw DimensionMismatch("Leonard check needs n >= 1");
  for (const auto* m : ms)
    if (m->rows() != n || m->cols() != n) throw DimensionMismatch("Leonard operators must be square of one size");
}

}  // namespace detail

/// Leonard triple check: each operator diagonalizable with simple spectrum and
/// the other two irreducible tridiagonal in a suitably ordered eigenbasis.
inline LeonardReport check(const ExactMatrix& L, const ExactMatrix& Lstar, const ExactMatrix& Leps,
                           const std::array<EigenHints, 3>& hints = {}) {
  detail::require_same_square({&L, &Lstar, &Leps});
  LeonardReport r;
  r.operators.push_back(detail::certify(L, {Lstar, Leps}, hints[0]));
  r.operators.push_back(detail::certify(Lstar, {Leps, L}, hints[1]));
  r.operators.push_back(detail::certify(Leps, {L, Lstar}, hints[2]));
  r.verdict = true;
  for (const auto& c : r.operators) r.verdict = r.verdict && c.pass();
  return r;
}

/// Leonard pair check on (L, L*).
inline LeonardReport check_pair(const ExactMatrix& L, const ExactMatrix& Lstar,
                                const std::array<EigenHints, 2>& hints = {}) {
  detail::require_same_square({&L, &Lstar});
  LeonardReport r;
  r.operators.push_back(detail::certify(L, {Lstar}, hints[0]));
  r.operators.push_back(detail::certify(Lstar, {L}, hints[1]));
  r.verdict = r.operators[0].pass() && r.operators[1].pass();
  return r;
}

}  // namespace racahlab
