#pragma once

// Decomposition of sl2-modules into irreducible modules for the Racah
// algebra acting through the pullback, and the algebras generated on the
// hypercube and the halved cube.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "racahlab/errors.hpp"
#include "racahlab/leonard.hpp"
#include "racahlab/linalg.hpp"
#include "racahlab/racah.hpp"
#include "racahlab/rd_modules.hpp"
#include "racahlab/roots.hpp"
#include "racahlab/sl2_reps.hpp"

namespace racahlab {

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// sl2 isotypic decomposition

struct Sl2Decomposition {
  std::vector<Sl2Copy> copies;            // by decreasing highest weight
  std::map<int, std::size_t, std::greater<>> multiplicity;  // n -> number of copies of L_n
};

namespace detail {

inline std::vector<std::pair<int, std::vector<Vec<GR>>>> weight_spaces(const ExactMatrix& H) {
  const std::size_t N = H.rows();
  std::map<GR, std::vector<Vec<GR>>> spaces;
  bool diagonal = true;
  for (std::size_t r = 0; r < N && diagonal; ++r)
    for (std::size_t c = 0; c < N && diagonal; ++c) diagonal = r == c || H(r, c).is_zero();
  if (diagonal) {
    for (std::size_t k = 0; k < N; ++k) {
      Vec<GR> e(N);
      e[k] = GR(1);
      spaces[H(k, k)].push_back(std::move(e));
    }
  } else {
    auto found = rational_roots(minimal_polynomial(H));
    if (!found.splits) throw NonDiagonalizableH("H has an eigenvalue outside Q(i)");
    EigenSplit<GR> split = eigen_split(H, found.roots);
    if (!split.diagonalizable) throw NonDiagonalizableH("H is not diagonalizable");
    for (auto& e : split.spaces) spaces[e.eigenvalue] = e.space.basis();
  }
  std::vector<std::pair<int, std::vector<Vec<GR>>>> out;
  for (auto& [w, basis] : spaces) {
    if (!w.im().is_zero() || !w.re().is_integer()) throw NonDiagonalizableH("H has a non-integer eigenvalue " + w.to_string());
    out.push_back({static_cast<int>(w.re().numerator().get_si()), std::move(basis)});
  }
  return out;
}

}  // namespace detail

/// Highest-weight vectors are the kernel of E on each H-eigenspace; each one
/// spans a copy of L_n through v_i = F^i v_0 / i!.
inline Sl2Decomposition sl2_isotypic(const Sl2Rep& r) {
  if (!all_pass(verify_sl2_relations(r))) throw Error("operators do not satisfy the sl2 relations");
  Sl2Decomposition out;
  auto spaces = detail::weight_spaces(r.H);
  std::sort(spaces.begin(), spaces.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::size_t total = 0;
  for (const auto& [n, basis] : spaces) {
    if (n < 0) continue;
    ExactMatrix S = from_columns(basis, r.dim());
    for (const auto& c : kernel(ExactMatrix(r.E * S))) {
      out.copies.push_back(chain_from_highest(r, S.apply(c), n));
      ++out.multiplicity[n];
      total += static_cast<std::size_t>(n) + 1;
    }
  }
  if (total != r.dim()) throw DimMismatch("sl2 copies do not fill the module");
  return out;
}

// Expected labels

struct ExpectedPart {
  std::string part;  // "V", "W" or "whole"
  RdParams params;
};

/// The irreducible pieces of L_n^(p) as R_d(a,b,c) labels.
inline std::vector<ExpectedPart> expected_labels(int n, int parity) {
  auto h = [](long long x) { return GR::frac(x, 2); };
  const GR qtr = GR::frac(-1, 4);
  if (parity == 1 && n == 0) throw Error("L_0 has no odd half");
  if (n % 2 == 1) return {{"whole", {qtr, qtr, qtr, (n - 1) / 2}}};
  if (parity == 0) {
    if (n == 0) return {{"whole", {h(-1), h(-1), h(-1), 0}}};
    if (n % 4 == 0) {
      const int d = n / 4;
      return {{"V", {h(d - 1), h(d), h(d - 1), d - 1}}, {"W", {h(d - 1), h(d - 1), h(d - 1), d}}};
    }
    const int d = (n - 2) / 4;
    return {{"V", {h(d - 1), h(d), h(d), d}}, {"W", {h(d), h(d), h(d - 1), d}}};
  }
  if (n == 2) return {{"whole", {GR(0), h(-1), GR(0), 0}}};
  if (n % 4 == 2) {
    const int d = (n - 2) / 4;
    return {{"V", {h(d), h(d), h(d), d - 1}}, {"W", {h(d), h(d - 1), h(d), d}}};
  }
  const int d = n / 4 - 1;
  return {{"V", {h(d), h(d), h(d + 1), d}}, {"W", {h(d + 1), h(d), h(d), d}}};
}

/// The nine families of irreducible modules arising from even halves of L_n.
inline std::vector<RdParams> half_family_classes(int n) {
  auto e = [](long long x) { return GR::frac(x, 8); };
  const GR qtr = GR::frac(-1, 4);
  std::vector<RdParams> out;
  if (n % 2 == 1) return {{qtr, qtr, qtr, (n - 1) / 2}};
  if (n % 4 == 2) {
    const int d = (n - 2) / 4;
    out.push_back({e(n - 2), e(n - 2), e(n - 6), d});
    out.push_back({e(n - 2), e(n - 6), e(n - 2), d});
    out.push_back({e(n - 6), e(n - 2), e(n - 2), d});
    if (n >= 6) out.push_back({e(n - 2), e(n - 2), e(n - 2), (n - 6) / 4});
    return out;
  }
  if (n >= 4) {
    const int d = n / 4 - 1;
    out.push_back({e(n - 4), e(n - 4), e(n), d});
    out.push_back({e(n - 4), e(n), e(n - 4), d});
    out.push_back({e(n), e(n - 4), e(n - 4), d});
  }
  out.push_back({e(n - 4), e(n - 4), e(n - 4), n / 4});
  return out;
}

/// The classes in the hypercube module listed by family.
inline std::vector<RdParams> hypercube_family_classes(int D) {
  auto h = [](long long x) { return GR::frac(x, 2); };
  std::vector<RdParams> out;
  if (D % 2 == 1) {
    const GR qtr = GR::frac(-1, 4);
    for (int k = 0; k <= (D - 1) / 2; ++k) out.push_back({qtr, qtr, qtr, k});
    return out;
  }
  const bool two = D % 4 == 2;
  const int top = two ? (D - 2) / 4 : D / 4 - 1;   // most families
  const int low = two ? (D - 6) / 4 : D / 4 - 1;   // families with a (k+1)/2 entry
  const int all_minus = two ? (D - 2) / 4 : D / 4;  // ((k-1)/2 x3)
  const int all_plus = two ? (D - 6) / 4 : D / 4 - 2;
  auto add = [&](int kmax, auto f) {
    for (int k = 0; k <= kmax; ++k) out.push_back(f(k));
  };
  add(low, [&](int k) { return RdParams{h(k), h(k + 1), h(k), k}; });
  add(all_minus, [&](int k) { return RdParams{h(k - 1), h(k - 1), h(k - 1), k}; });
  add(top, [&](int k) { return RdParams{h(k - 1), h(k), h(k), k}; });
  add(top, [&](int k) { return RdParams{h(k), h(k), h(k - 1), k}; });
  add(all_plus, [&](int k) { return RdParams{h(k + 1), h(k + 1), h(k + 1), k}; });
  add(top, [&](int k) { return RdParams{h(k), h(k - 1), h(k), k}; });
  add(low, [&](int k) { return RdParams{h(k + 1), h(k), h(k), k}; });
  add(low, [&](int k) { return RdParams{h(k), h(k), h(k + 1), k}; });
  return out;
}

// Racah decomposition

struct Summand {
  std::string label;
  std::optional<IsoClass> cls;
  std::size_t dim = 0;
  std::size_t multiplicity = 0;
  std::vector<std::string> witnesses;  // "L_n^(p)#j:part"
  bool leonard = false;
  ExactMatrix witness_basis;  // ambient columns of the first witness
};

struct DecompositionReport {
  std::vector<Summand> summands;  // sorted by class
  std::vector<std::pair<int, int>> halves;  // distinct (n, parity) that occur
  std::size_t ambient_dim = 0;
  bool total_dim_ok = false;
  bool complete = false;
  bool invariant = false;
  Report checks;
};

/// Which halves of each sl2 copy to decompose.
enum class HalfSelection { Both, Halved };

namespace detail {

inline std::pair<ExactMatrix, ExactMatrix> split_coordinates(std::size_t dim) {
  const std::size_t m = dim - 1;
  std::vector<Vec<GR>> V, W;
  for (std::size_t i = 0; 2 * i <= m; ++i) {
    Vec<GR> plus(dim), minus(dim);
    plus[i] += GR(1);
    plus[m - i] += GR(1);
    W.push_back(plus);
    if (i < m - i) {
      minus[i] = GR(1);
      minus[m - i] = GR(-1);
      V.push_back(minus);
    }
  }
  return {from_columns(V, dim), from_columns(W, dim)};
}

}  // namespace detail

struct HalfPart {
  std::string part;    // "V", "W" or "whole"
  ExactMatrix coords;  // columns in the u basis of the half
  RdParams expected;
  IsoClass cls;
  bool leonard = false;
};

struct HalfSplit {
  int n = 0;
  int parity = 0;
  std::vector<HalfPart> parts;
  Report checks;
};

/// Split a half of L_n, given by its action in the u basis, along
/// u_i -+ u_{m-i} and identify each piece by traces.
inline HalfSplit split_even_half(const RacahRep& half, int n, int parity) {
  const std::size_t dim = half.dim();
  if (dim != half_dim(n, parity)) throw DimMismatch("half has the wrong dimension");
  std::vector<ExpectedPart> expected = expected_labels(n, parity);
  HalfSplit out{n, parity, {}, {}};
  std::vector<ExactMatrix> coords;
  if (expected.size() == 1) {
    coords.push_back(ExactMatrix::identity(dim));
  } else {
    auto [V, W] = detail::split_coordinates(dim);
    coords.push_back(std::move(V));
    coords.push_back(std::move(W));
  }
  const std::string tag = "L_" + std::to_string(n) + "^(" + std::to_string(parity) + ")";
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const std::string& part = expected[k].part;
    auto sub = restrict_rep(half, coords[k]);
    out.checks.push_back({tag + " " + part + " invariant", sub.has_value(), sub ? 0u : 1u});
    if (!sub) throw Error(tag + " " + part + " is not invariant");
    const int d = static_cast<int>(sub->dim()) - 1;
    if (d != expected[k].params.d) throw DimMismatch(tag + " " + part + " has unexpected dimension");
    IsoClass got = iso_class(*sub, d);
    IsoClass want = iso_class_of(expected[k].params);
    if (got != want)
      throw ClassMismatch(tag + " " + part + ": computed " + class_label(got) + ", expected " + params_label(expected[k].params));
    out.checks.push_back({tag + " " + part + " = " + params_label(expected[k].params), true, 0});
    auto hints = eigenvalue_hints(expected[k].params);
    LeonardReport lr = check(sub->A, sub->B, sub->C, {hints[0], hints[1], hints[2]});
    out.checks.push_back({tag + " " + part + " Leonard triple", lr.verdict, lr.verdict ? 0u : 1u});
    out.parts.push_back({part, std::move(coords[k]), expected[k].params, got, lr.verdict});
  }
  return out;
}

inline HalfSplit split_even_half(int n, int parity) {
  return split_even_half(half_racah_closed_form(n, parity), n, parity);
}

/// Decompose the pullback of an sl2-module along the even halves of its
/// isotypic copies; with Halved, a copy of highest weight at level k
/// contributes only its half of parity k mod 2 where k = (top - n)/2.
inline DecompositionReport re_decompose(const Sl2Rep& rep, HalfSelection sel = HalfSelection::Both, int top = 0) {
  Sl2Decomposition sd = sl2_isotypic(rep);
  RacahRep R = sharp_pullback(rep);
  DecompositionReport out;
  out.ambient_dim = rep.dim();
  out.invariant = true;
  std::map<std::pair<int, int>, HalfSplit> analyses;
  std::map<IsoClass, Summand> by_class;
  std::map<int, std::size_t> seen;
  SpanBuilder<GR> span(rep.dim());
  std::size_t total = 0;
  for (const Sl2Copy& copy : sd.copies) {
    const std::size_t j = seen[copy.n]++;
    std::vector<int> parities;
    if (sel == HalfSelection::Both) {
      parities.push_back(0);
      if (copy.n >= 1) parities.push_back(1);
    } else {
      const int p = ((top - copy.n) / 2) % 2;
      if (p == 0 || copy.n >= 1) parities.push_back(p);
    }
    for (int p : parities) {
      EvenHalf half = even_half(rep, copy, p);
      const std::string tag = "L_" + std::to_string(copy.n) + "^(" + std::to_string(p) + ")#" + std::to_string(j);
      auto restricted = restrict_rep(R, half.basis);
      RacahRep closed = half_racah_closed_form(copy.n, p);
      if (!restricted) {
        out.invariant = false;
        out.checks.push_back({tag + " invariant", false, 1});
        continue;
      }
      std::size_t res = (restricted->A - closed.A).nonzero_count() + (restricted->B - closed.B).nonzero_count() +
                        (restricted->C - closed.C).nonzero_count() + (restricted->Delta - closed.Delta).nonzero_count();
      out.checks.push_back({tag + " action = closed form", res == 0, res});
      auto key = std::make_pair(copy.n, p);
      auto it = analyses.find(key);
      if (it == analyses.end()) {
        it = analyses.emplace(key, split_even_half(*restricted, copy.n, p)).first;
        append(out.checks, it->second.checks);
        out.halves.push_back(key);
      }
      for (const HalfPart& part : it->second.parts) {
        ExactMatrix ambient = half.basis * part.coords;
        for (std::size_t c = 0; c < ambient.cols(); ++c) span.insert(ambient.col(c));
        total += ambient.cols();
        Summand& s = by_class[part.cls];
        if (s.multiplicity == 0) {
          s.cls = part.cls;
          s.label = class_label(part.cls);
          s.dim = ambient.cols();
          s.leonard = part.leonard;
          s.witness_basis = ambient;
        }
        ++s.multiplicity;
        s.witnesses.push_back(tag + ":" + part.part);
      }
    }
  }
  for (const auto& [cls, s] : by_class) {
    const bool inv = restrict_rep(R, s.witness_basis).has_value();
    out.invariant = out.invariant && inv;
    out.checks.push_back({s.label + " witness invariant", inv, inv ? 0u : 1u});
  }
  for (auto& [cls, s] : by_class) out.summands.push_back(std::move(s));
  out.total_dim_ok = total == span.dim();
  out.complete = out.total_dim_ok && (sel == HalfSelection::Halved || span.dim() == out.ambient_dim);
  std::sort(out.halves.begin(), out.halves.end(), std::greater<>());
  return out;
}

inline std::set<IsoClass> distinct_classes(const DecompositionReport& r) {
  std::set<IsoClass> s;
  for (const auto& x : r.summands)
    if (x.cls) s.insert(*x.cls);
  return s;
}

inline std::set<IsoClass> as_classes(const std::vector<RdParams>& ps) {
  std::set<IsoClass> s;
  for (const auto& p : ps) s.insert(iso_class_of(p));
  return s;
}

// Hypercube decomposition

struct HypercubeDecomposition {
  Sl2Decomposition sl2;
  DecompositionReport racah;
};

inline HypercubeDecomposition decompose_hypercube(const Hypercube& h) {
  const int D = h.space.D;
  HypercubeDecomposition out{sl2_isotypic(h.rep), re_decompose(h.rep)};
  Report& checks = out.racah.checks;
  for (int k = 0; 2 * k <= D; ++k) {
    const long long want = binomial(D, k) - binomial(D, k - 1);
    auto it = out.sl2.multiplicity.find(D - 2 * k);
    const long long got = it == out.sl2.multiplicity.end() ? 0 : static_cast<long long>(it->second);
    checks.push_back({"multiplicity of L_" + std::to_string(D - 2 * k) + " = " + std::to_string(want), got == want,
                      static_cast<std::size_t>(got == want ? 0 : 1)});
  }
  std::vector<std::pair<int, int>> halves;
  for (int k = 0; 2 * k <= D; ++k) {
    halves.push_back({D - 2 * k, 0});
    if (D - 2 * k >= 1) halves.push_back({D - 2 * k, 1});
  }
  std::sort(halves.begin(), halves.end(), std::greater<>());
  checks.push_back({"halves present", halves == out.racah.halves, halves == out.racah.halves ? 0u : 1u});
  const bool tables = distinct_classes(out.racah) == as_classes(hypercube_family_classes(D));
  checks.push_back({"classes match the family table", tables, tables ? 0u : 1u});
  return out;
}

inline HypercubeDecomposition decompose_hypercube(int D) { return decompose_hypercube(build_hypercube(D)); }

/// Decomposition of the even-weight part of the hypercube module.
inline DecompositionReport decompose_halved(const Hypercube& h) {
  DecompositionReport r = re_decompose(h.rep, HalfSelection::Halved, h.space.D);
  r.ambient_dim = std::size_t{1} << (h.space.D - 1);
  r.complete = r.complete && [&] {
    std::size_t total = 0;
    for (const auto& s : r.summands) total += s.dim * s.multiplicity;
    return total == r.ambient_dim;
  }();
  return r;
}

inline DecompositionReport decompose_Ln(int n) { return re_decompose(build_Ln(n)); }

// Algebras generated on the hypercube

/// Block sizes with multiplicities; the algebra dimension is sum of count * size^2.
struct SemisimpleProfile {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (size, count), decreasing size
  std::size_t dim = 0;

  friend bool operator==(const SemisimpleProfile&, const SemisimpleProfile&) = default;
};

inline SemisimpleProfile profile_from_sizes(const std::vector<std::size_t>& sizes) {
  std::map<std::size_t, std::size_t, std::greater<>> count;
  for (std::size_t k : sizes) ++count[k];
  SemisimpleProfile p;
  for (auto [k, m] : count) {
    p.blocks.push_back({k, m});
    p.dim += m * k * k;
  }
  return p;
}

/// One block per class of the decomposition, cross-checked against the
/// dimension of the algebra generated by gens.
inline SemisimpleProfile semisimple_profile(std::size_t algebra_dim, const DecompositionReport& r) {
  std::vector<std::size_t> sizes;
  for (const auto& s : r.summands) sizes.push_back(s.dim);
  SemisimpleProfile p = profile_from_sizes(sizes);
  if (p.dim != algebra_dim)
    throw DimMismatch("algebra dimension " + std::to_string(algebra_dim) + " differs from the block sum " + std::to_string(p.dim));
  return p;
}

inline SemisimpleProfile semisimple_profile(const std::vector<ExactMatrix>& gens, const DecompositionReport& r) {
  if (gens.empty()) throw Error("no generators");
  return semisimple_profile(algebra_closure<GR>(gens, gens[0].rows()).dim, r);
}

inline SemisimpleProfile hypercube_algebra_profile(int D) {
  std::vector<std::size_t> sizes;
  auto add = [&](std::size_t size, int count) { sizes.insert(sizes.end(), count, size); };
  if (D % 2 == 1) {
    for (int k = 1; k <= (D + 1) / 2; ++k) add(k, 1);
  } else if (D % 4 == 2) {
    add((D + 2) / 4, 4);
    for (int k = 1; k <= (D - 2) / 4; ++k) add(k, 8);
  } else {
    add(D / 4 + 1, 1);
    add(D / 4, 7);
    for (int k = 1; k <= D / 4 - 1; ++k) add(k, 8);
  }
  return profile_from_sizes(sizes);
}

inline long long hypercube_algebra_dim(int D) { return binomial(D / 2 + 3, 3) + binomial((D + 1) / 2 + 1, 3); }

struct GeneratedAlgebra {
  int D = 0;
  std::size_t dim_racah = 0;  // closure of A, B, C
  std::size_t dim_graph = 0;  // closure of A2J, A2Jbar, A2star
  long long dim_formula = 0;
  std::optional<SemisimpleProfile> profile;
  Report checks;
};

/// The algebra generated by A, B, C on the hypercube and the one generated by
/// the graph operators, computed separately and compared.
inline GeneratedAlgebra hypercube_algebra(const Hypercube& h, const DecompositionReport& r) {
  GeneratedAlgebra out;
  out.D = h.space.D;
  const std::size_t N = h.space.size();
  const RacahRep R = sharp_pullback(h.rep);
  auto racah = algebra_closure<GR>({R.A, R.B, R.C}, N);
  auto graph = algebra_closure<GR>({h.ops.A2J, h.ops.A2Jbar, h.ops.A2star}, N);
  out.dim_racah = racah.dim;
  out.dim_graph = graph.dim;
  out.dim_formula = hypercube_algebra_dim(out.D);
  auto flag = [&](std::string name, bool ok) { out.checks.push_back({std::move(name), ok, ok ? 0u : 1u}); };
  bool inside = true;
  for (const auto& m : graph.basis) inside = inside && racah.contains(m);
  for (const auto& m : racah.basis) inside = inside && graph.contains(m);
  flag("closure(A2J,A2Jbar,A2star) = closure(A,B,C)", inside && racah.dim == graph.dim);
  flag("dim closure(A,B,C) = " + std::to_string(out.dim_formula), static_cast<long long>(racah.dim) == out.dim_formula);
  flag("dim closure(A2J,A2Jbar,A2star) = " + std::to_string(out.dim_formula), static_cast<long long>(graph.dim) == out.dim_formula);
  try {
    out.profile = semisimple_profile(racah.dim, r);
    flag("block profile", *out.profile == hypercube_algebra_profile(out.D));
  } catch (const DimMismatch& e) {
    flag(std::string("block profile: ") + e.what(), false);
  }
  return out;
}

// Halved cube: T_e versus R_e

struct TeReComparison {
  int D = 0;
  std::size_t te_dim = 0, re_dim = 0;
  std::size_t te_expected = 0, re_expected = 0;
  bool inclusion = false;
  bool proper = false;
  std::vector<std::pair<int, int>> halves;
  DecompositionReport decomposition;
  Report checks;
};

inline TeReComparison compare_Te_Re(const Hypercube& h) {
  const int D = h.space.D;
  HalvedCube hc = halved_cube(h);
  TeReComparison out;
  out.D = D;
  auto te = algebra_closure<GR>(hc.te_generators, hc.dim());
  auto re = algebra_closure<GR>(hc.re_generators, hc.dim());
  out.te_dim = te.dim;
  out.re_dim = re.dim;
  out.inclusion = true;
  for (const auto& m : re.basis) out.inclusion = out.inclusion && te.contains(m);
  out.proper = out.inclusion && re.dim < te.dim;
  out.decomposition = decompose_halved(h);
  out.halves = out.decomposition.halves;
  std::vector<std::pair<int, int>> expected;
  for (int k = 0; 2 * k <= D; ++k)
    if (k % 2 == 0 || D - 2 * k >= 1) expected.push_back({D - 2 * k, k % 2});
  std::sort(expected.begin(), expected.end(), std::greater<>());
  for (auto [n, p] : expected) out.te_expected += half_dim(n, p) * half_dim(n, p);
  for (const auto& s : out.decomposition.summands) out.re_expected += s.dim * s.dim;
  auto flag = [&](std::string name, bool ok) { out.checks.push_back({std::move(name), ok, ok ? 0u : 1u}); };
  flag("halves of C^{X_e} = L_{D-2k}^(k mod 2)", expected == out.halves);
  flag("R_e is contained in T_e", out.inclusion);
  flag("dim T_e = sum of squared half dimensions", out.te_dim == out.te_expected);
  flag("dim R_e = sum of squared class dimensions", out.re_dim == out.re_expected);
  flag("decomposition complete", out.decomposition.complete && out.decomposition.invariant);
  return out;
}

inline TeReComparison compare_Te_Re(int D) { return compare_Te_Re(build_hypercube(D)); }

}  // namespace racahlab
