#pragma once

// Reproducible verification suites and their JSON reports.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "racahlab/decompose.hpp"
#include "racahlab/leonard.hpp"
#include "racahlab/racah.hpp"
#include "racahlab/rd_modules.hpp"
#include "racahlab/sharp.hpp"
#include "racahlab/sl2_reps.hpp"

namespace racahlab {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline const std::vector<std::string>& suite_targets() {
  static const std::vector<std::string> t = {"thm1_4", "thm1_5", "thm1_6_membership", "thm3_3", "sec3_identities",
                                             "prop2_4", "lemma6_suite", "thm6_9", "thm7_2", "thm7_5",
                                             "thm1_7", "thm1_8", "thm8_4", "thm8_7"};
  return t;
}

struct IntRange {
  int lo = 0, hi = 0;
};

/// "a..b" or "a".
inline IntRange parse_range(const std::string& s) {
  auto num = [&](const std::string& x) {
    if (x.empty() || x.find_first_not_of("0123456789") != std::string::npos) throw ConfigError("malformed range '" + s + "'");
    return std::stoi(x);
  };
  auto dots = s.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = num(s);
  } else {
    r.lo = num(s.substr(0, dots));
    r.hi = num(s.substr(dots + 2));
  }
  if (r.lo > r.hi) throw ConfigError("empty range '" + s + "'");
  return r;
}

struct SuiteConfig {
  std::vector<std::string> targets = suite_targets();
  IntRange D{2, 8};
  IntRange d{0, 6};
  int n_max = 12;
  int samples = 20;  // parameter draws per d
  std::uint64_t seed = 1;
  std::string out;             // empty: stdout
  std::string export_matrices; // directory, empty: none
  unsigned workers = 1;

  void validate() const {
    for (const auto& t : targets)
      if (std::find(suite_targets().begin(), suite_targets().end(), t) == suite_targets().end())
        throw ConfigError("unknown target '" + t + "'");
    if (targets.empty()) throw ConfigError("no targets selected");
    if (D.lo < 2 || D.hi > 12) throw ConfigError("D range must lie in 2..12");
    if (d.lo < 0 || d.hi > 12) throw ConfigError("d range must lie in 0..12");
    if (n_max < 0) throw ConfigError("n_max must be >= 0");
    if (samples < 0) throw ConfigError("samples must be >= 0");
    if (workers == 0) throw ConfigError("workers must be >= 1");
  }
};

/// RACAHLAB_WORKERS when set to a positive integer, otherwise 1.
inline unsigned workers_from_env() {
  const char* v = std::getenv("RACAHLAB_WORKERS");
  if (!v) return 1;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1) throw ConfigError(std::string("RACAHLAB_WORKERS must be a positive integer, got '") + v + "'");
  return static_cast<unsigned>(n);
}

// Parameter sampling

/// A parameter from a bounded box: mostly half-integers, which land in the
/// forbidden sets often, and otherwise a Gaussian rational.
inline GR sample_parameter(std::mt19937_64& rng) {
  auto pick = [&](std::uint64_t k) { return static_cast<long long>(rng() % k); };
  if (pick(6) == 0) return GR(Rational(pick(13) - 6, pick(4) + 1), Rational(pick(13) - 6, pick(4) + 1));
  return GR::frac(pick(13) - 6, 2);
}

inline RdParams sample_params(std::mt19937_64& rng, int d) {
  GR a = sample_parameter(rng), b = sample_parameter(rng), c = sample_parameter(rng);
  return {a, b, c, d};
}

/// Draws for d in range, samples per d, from one seeded stream.
inline std::vector<RdParams> sample_draws(const IntRange& d, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RdParams> out;
  for (int k = d.lo; k <= d.hi; ++k)
    for (int s = 0; s < samples; ++s) out.push_back(sample_params(rng, k));
  return out;
}

// Checks on one R_d(a,b,c)

inline CheckResult flag(std::string name, bool ok) { return {std::move(name), ok, ok ? 0u : 1u}; }

inline CheckResult summarize(std::string name, const Report& r) {
  std::size_t residual = 0;
  bool ok = true;
  for (const auto& c : r) {
    ok = ok && c.pass;
    residual += c.residual_term_count;
  }
  return {std::move(name), ok, residual};
}

/// Presentation and the closed-form central values.
inline Report rd_presentation_checks(const RdParams& p) {
  const std::string tag = params_label(p) + ": ";
  RacahRep r = construct(p);
  Report out;
  out.push_back(summarize(tag + "presentation", verify_presentation(r)));
  RdCentral k = rd_central(p);
  CentralValues cv = central_values(r);
  out.push_back(flag(tag + "alpha = (c-b)(c+b+1)(a-d/2)(a+d/2+1)", cv.alpha.scalar == k.alpha));
  out.push_back(flag(tag + "beta = (a-c)(a+c+1)(b-d/2)(b+d/2+1)", cv.beta.scalar == k.beta));
  out.push_back(flag(tag + "gamma = (b-a)(b+a+1)(c-d/2)(c+d/2+1)", cv.gamma.scalar == k.gamma));
  out.push_back(flag(tag + "delta = d/2(d/2+1)+a(a+1)+b(b+1)+c(c+1)", cv.delta.scalar == k.delta));
  return out;
}

/// Traces, irreducibility against Burnside, minimal polynomials, the cubic
/// relations, and diagonalizability against the square-free test.
inline Report rd_structure_checks(const RdParams& p) {
  const std::string tag = params_label(p) + ": ";
  RacahRep r = construct(p);
  Report out;
  IsoClass s = iso_class_of(p);
  GR n(p.d + 1);
  out.push_back(flag(tag + "tr A = (d+1)(a(a+1) + d(d+2)/12)", r.A.trace() == n * (s.sA + dd_term(p.d))));
  out.push_back(flag(tag + "tr B = (d+1)(b(b+1) + d(d+2)/12)", r.B.trace() == n * (s.sB + dd_term(p.d))));
  out.push_back(flag(tag + "tr C = (d+1)(c(c+1) + d(d+2)/12)", r.C.trace() == n * (s.sC + dd_term(p.d))));
  Irreducibility irr = irreducibility(p);
  const bool burnside = burnside_irreducible(r);
  out.push_back(flag(tag + "irreducibility criterion (" + (irr.irreducible ? "irreducible" : irr.witness) + ") = Burnside",
                     irr.irreducible == burnside));
  out.push_back(summarize(tag + "cubic relations", verify_cubic_relations(r)));
  if (!irr.irreducible) {
    bool thrown = false;
    try {
      min_polys(p);
    } catch (const NotIrreducible&) {
      thrown = true;
    }
    out.push_back(flag(tag + "reducible path rejected by min_polys", thrown));
    return out;
  }
  MinPolys mp = min_polys(p);
  const std::array<std::tuple<const char*, const ExactMatrix*, const ExactPolynomial*, const GR*>, 3> ops = {
      {{"A", &r.A, &mp.A, &p.a}, {"B", &r.B, &mp.B, &p.b}, {"C", &r.C, &mp.C, &p.c}}};
  for (const auto& [name, m, poly, x] : ops) {
    ExactPolynomial pm = minimal_polynomial(*m);
    out.push_back(flag(tag + "minimal polynomial of " + name + " = prod (x - theta_i)", pm == *poly));
    const bool square_free = gcd(pm, pm.derivative()).degree() == 0;
    out.push_back(flag(tag + name + " diagonalizable criterion = square-free test", square_free == diagonalizable_parameter(*x, p.d)));
  }
  return out;
}

/// The parameter criterion against the generic checker, with and without hints.
inline Report rd_leonard_checks(const RdParams& p) {
  const std::string tag = params_label(p) + ": ";
  Report out;
  if (!is_irreducible(p)) return out;
  RacahRep r = construct(p);
  const bool criterion = leonard_criterion(p);
  auto hints = eigenvalue_hints(p);
  const bool hinted = check(r.A, r.B, r.C, {hints[0], hints[1], hints[2]}).verdict;
  const bool plain = check(r.A, r.B, r.C).verdict;
  out.push_back(flag(tag + "Leonard criterion (" + (criterion ? "yes" : "no") + ") = checker", criterion == hinted && hinted == plain));
  return out;
}

// JSON

inline json to_json(const CheckResult& c) {
  return {{"identity", c.identity}, {"pass", c.pass}, {"residual_term_count", c.residual_term_count}};
}

inline json to_json(const Report& r) {
  json a = json::array();
  for (const auto& c : r) a.push_back(to_json(c));
  return a;
}

inline std::string exact(const GR& z) { return z.to_string(); }

inline json iso_class_json(const IsoClass& k) {
  return {{"label", class_label(k)}, {"d", k.d}, {"sA", exact(k.sA)}, {"sB", exact(k.sB)}, {"sC", exact(k.sC)}};
}

inline const char* kLabelNote =
    "classes are keyed by (d, a(a+1), b(b+1), c(c+1)); a label parameter x is the root of x^2+x-s with real part >= -1/2, "
    "so labels agree with any other parametrization up to x -> -1-x";

inline json to_json(const LeonardReport& r) {
  json ops = json::array();
  const char* names[] = {"A", "B", "C"};
  for (std::size_t k = 0; k < r.operators.size(); ++k) {
    const auto& c = r.operators[k];
    json ev = json::array();
    for (const auto& x : c.eigenvalues) ev.push_back(exact(x));
    ops.push_back({{"operator", names[k]},
                   {"diagonalizable", c.diagonalizable},
                   {"multiplicity_free", c.multiplicity_free},
                   {"path_ordering", c.path_ordering},
                   {"irreducible_tridiagonal", c.irreducible_tridiagonal},
                   {"eigenvalues", ev},
                   {"failure", c.failure}});
  }
  return {{"leonard", r.verdict}, {"operators", ops}};
}

inline json to_json(const DecompositionReport& r) {
  json s = json::array();
  for (const auto& x : r.summands) {
    json w = x.witnesses;
    s.push_back({{"class", x.cls ? iso_class_json(*x.cls) : json(nullptr)},
                 {"dim", x.dim},
                 {"multiplicity", x.multiplicity},
                 {"leonard", x.leonard},
                 {"witnesses", w}});
  }
  json halves = json::array();
  for (auto [n, p] : r.halves) halves.push_back("L_" + std::to_string(n) + "^(" + std::to_string(p) + ")");
  return {{"schema_version", kSchemaVersion},
          {"ambient_dim", r.ambient_dim},
          {"summands", s},
          {"halves", halves},
          {"total_dim_ok", r.total_dim_ok},
          {"complete", r.complete},
          {"invariant", r.invariant},
          {"note", kLabelNote},
          {"checks", to_json(r.checks)}};
}

inline json to_json(const SemisimpleProfile& p) {
  json b = json::array();
  for (auto [k, m] : p.blocks) b.push_back({{"size", k}, {"count", m}});
  return {{"dim", p.dim}, {"blocks", b}};
}

inline void export_hypercube(const Hypercube& h, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::string stem = "hypercube_D" + std::to_string(h.space.D) + "_";
  const std::array<std::pair<const char*, const ExactMatrix*>, 6> ms = {{{"E", &h.rep.E},
                                                                         {"F", &h.rep.F},
                                                                         {"H", &h.rep.H},
                                                                         {"A2J", &h.ops.A2J},
                                                                         {"A2Jbar", &h.ops.A2Jbar},
                                                                         {"A2star", &h.ops.A2star}}};
  for (const auto& [name, m] : ms) {
    std::ofstream f(dir / (stem + name + ".txt"));
    if (!f) throw Error("cannot write " + (dir / (stem + name + ".txt")).string());
    write_matrix(f, *m);
  }
}

// Suite

struct SuiteUnit {
  std::string target;
  std::function<Report()> run;
};

inline std::vector<SuiteUnit> suite_units(const SuiteConfig& cfg) {
  std::vector<SuiteUnit> units;
  auto wants = [&](const char* t) { return std::find(cfg.targets.begin(), cfg.targets.end(), t) != cfg.targets.end(); };
  auto add = [&](const char* t, std::function<Report()> f) { units.push_back({t, std::move(f)}); };
  if (wants("thm1_4")) add("thm1_4", [] { return verify_sharp_relations(); });
  if (wants("thm1_5")) add("thm1_5", [] { return verify_casimir_image(); });
  if (wants("thm1_6_membership")) add("thm1_6_membership", [] { return verify_kernel_generators(); });
  if (wants("thm3_3")) add("thm3_3", [] { return verify_equivariance(); });
  if (wants("sec3_identities"))
    add("sec3_identities", [] {
      Report r = verify_even_identities();
      append(r, verify_homogeneous_tables());
      return r;
    });
  const std::vector<RdParams> draws = sample_draws(cfg.d, cfg.samples, cfg.seed);
  for (const auto& p : draws) {
    if (wants("prop2_4")) add("prop2_4", [p] { return rd_presentation_checks(p); });
    if (wants("lemma6_suite")) add("lemma6_suite", [p] { return rd_structure_checks(p); });
    if (wants("thm6_9")) add("thm6_9", [p] { return rd_leonard_checks(p); });
  }
  for (int parity : {0, 1}) {
    const char* t = parity == 0 ? "thm7_2" : "thm7_5";
    if (!wants(t)) continue;
    for (int n = parity; n <= cfg.n_max; ++n)
      add(t, [n, parity] { return split_even_half(n, parity).checks; });
    add(t, [n_max = cfg.n_max] {
      std::set<IsoClass> all;
      std::size_t count = 0;
      for (int n = 0; n <= n_max; ++n)
        for (const auto& p : half_family_classes(n)) {
          all.insert(iso_class_of(p));
          ++count;
        }
      return Report{flag("families of the nine-family list are pairwise non-isomorphic up to n = " + std::to_string(n_max),
                         all.size() == count)};
    });
  }
  if (wants("thm1_7")) {
    for (int n = 0; n <= cfg.n_max; ++n)
      add("thm1_7", [n] {
        DecompositionReport d = decompose_Ln(n);
        Report r;
        const std::string tag = "L_" + std::to_string(n) + ": ";
        r.push_back(flag(tag + "complete and invariant", d.complete && d.invariant));
        bool leonard = true;
        for (const auto& s : d.summands) leonard = leonard && s.leonard;
        r.push_back(flag(tag + "Leonard triple on every summand", leonard));
        return r;
      });
    for (int D = cfg.D.lo; D <= cfg.D.hi; ++D)
      add("thm1_7", [D] {
        HypercubeDecomposition h = decompose_hypercube(D);
        Report r;
        const std::string tag = "C^X, D = " + std::to_string(D) + ": ";
        r.push_back(summarize(tag + "decomposition cross-checks", h.racah.checks));
        r.push_back(flag(tag + "complete and invariant", h.racah.complete && h.racah.invariant));
        bool leonard = true;
        for (const auto& s : h.racah.summands) leonard = leonard && s.leonard;
        r.push_back(flag(tag + "Leonard triple on every summand", leonard));
        return r;
      });
  }
  for (int D = cfg.D.lo; D <= cfg.D.hi; ++D) {
    const std::string tag = "D = " + std::to_string(D) + ": ";
    if (wants("thm1_8"))
      add("thm1_8", [D, tag, dir = cfg.export_matrices] {
        Hypercube h = build_hypercube(D);
        if (!dir.empty()) export_hypercube(h, dir);
        Report r;
        for (const auto& c : verify_hypercube(h)) r.push_back({tag + c.identity, c.pass, c.residual_term_count});
        return r;
      });
    if (wants("thm8_4"))
      add("thm8_4", [D, tag] {
        Hypercube h = build_hypercube(D);
        GeneratedAlgebra g = hypercube_algebra(h, decompose_hypercube(h).racah);
        Report r;
        for (const auto& c : g.checks) r.push_back({tag + c.identity, c.pass, c.residual_term_count});
        return r;
      });
    if (wants("thm8_7"))
      add("thm8_7", [D, tag] {
        TeReComparison c = compare_Te_Re(D);
        Report r;
        for (const auto& x : c.checks) r.push_back({tag + x.identity, x.pass, x.residual_term_count});
        const bool relation = D % 2 == 1 ? c.re_dim == c.te_dim : c.re_dim < c.te_dim;
        r.push_back(flag(tag + "dim R_e = " + std::to_string(c.re_dim) + (D % 2 ? " = " : " < ") + "dim T_e = " +
                             std::to_string(c.te_dim),
                         relation));
        return r;
      });
  }
  return units;
}

struct SuiteResult {
  json report;
  bool pass = false;
};

/// Runs the units on cfg.workers threads and assembles the report in unit order.
inline SuiteResult run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  if (!cfg.export_matrices.empty()) {
    std::filesystem::create_directories(cfg.export_matrices);
    auto draws = sample_draws(cfg.d, cfg.samples, cfg.seed);
    for (std::size_t k = 0; k < draws.size(); ++k) {
      std::ofstream f(std::filesystem::path(cfg.export_matrices) / ("rd_sample_" + std::to_string(k) + ".txt"));
      write_rep(f, construct(draws[k]));
    }
  }
  std::vector<SuiteUnit> units = suite_units(cfg);
  std::vector<Report> results(units.size());
  std::vector<std::string> errors(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < units.size(); k = next++) {
      try {
        results[k] = units[k].run();
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  const unsigned n = std::min<unsigned>(cfg.workers, std::max<std::size_t>(units.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json targets = json::array();
  std::size_t total = 0, failed = 0;
  for (const auto& name : cfg.targets) {
    json checks = json::array();
    bool ok = true;
    for (std::size_t k = 0; k < units.size(); ++k) {
      if (units[k].target != name) continue;
      if (!errors[k].empty()) {
        checks.push_back({{"identity", "error: " + errors[k]}, {"pass", false}, {"residual_term_count", 1}});
        ok = false;
        ++total;
        ++failed;
      }
      for (const auto& c : results[k]) {
        checks.push_back(to_json(c));
        ok = ok && c.pass;
        ++total;
        failed += c.pass ? 0 : 1;
      }
    }
    targets.push_back({{"target", name}, {"pass", ok}, {"checks", checks}});
  }
  SuiteResult out;
  out.pass = failed == 0;
  json targets_cfg = cfg.targets;
  out.report = {{"schema_version", kSchemaVersion},
                {"config",
                 {{"targets", targets_cfg},
                  {"D", std::to_string(cfg.D.lo) + ".." + std::to_string(cfg.D.hi)},
                  {"d", std::to_string(cfg.d.lo) + ".." + std::to_string(cfg.d.hi)},
                  {"n_max", cfg.n_max},
                  {"samples", cfg.samples},
                  {"seed", std::to_string(cfg.seed)}}},
                {"note", kLabelNote},
                {"pass", out.pass},
                {"summary", {{"checks", total}, {"failed", failed}}},
                {"targets", targets}};
  return out;
}

}  // namespace racahlab
