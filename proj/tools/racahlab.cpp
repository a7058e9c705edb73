#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "racahlab.hpp"

using namespace racahlab;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int emit(const json& j, bool pass, const std::string& out = "") {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream f(out);
    if (!f) throw Error("cannot write " + out);
    f << j.dump(2) << '\n';
  }
  return pass ? 0 : kExitFail;
}

int emit_report(const Report& r) { return emit(to_json(r), all_pass(r)); }

RacahRep load_rep(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  return read_rep(f);
}

json central_json(const CentralValue& v) { return v.scalar ? json(exact(*v.scalar)) : json("not scalar"); }

RdParams rd_params(const std::string& a, const std::string& b, const std::string& c, int d) {
  return {GR::parse(a), GR::parse(b), GR::parse(c), d};
}

json poly_json(const ExactPolynomial& p) {
  json c = json::array();
  for (int k = 0; k <= p.degree(); ++k) c.push_back(exact(p.coeff(k)));
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Racah algebra homomorphism into U(sl2), its modules and the hypercube algebras"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "symbolic identities in U(sl2)");
  verify->require_subcommand(1);
  auto* v_sharp = verify->add_subcommand("sharp", "relations satisfied by the generator images and the Casimir images");
  auto* v_kernel = verify->add_subcommand("kernel", "kernel generators map to zero");
  auto* v_d3 = verify->add_subcommand("d3", "D3 relations and equivariance");
  auto* v_even = verify->add_subcommand("even-identities", "identities in the even subalgebra and homogeneous tables");

  // racah
  auto* racah = app.add_subcommand("racah", "operator-level Racah modules");
  racah->require_subcommand(1);
  auto* r_verify = racah->add_subcommand("verify", "presentation, central values, Casimirs and cubic relations");
  std::string rep_path;
  r_verify->add_option("--rep", rep_path, "file with blocks A, B, C, Delta")->required()->check(CLI::ExistingFile);

  // rd
  auto* rd = app.add_subcommand("rd", "the modules R_d(a,b,c)");
  rd->require_subcommand(1);
  std::string pa, pb, pc, rd_out;
  int pd = 0;
  auto add_rd = [&](CLI::App* s) {
    s->add_option("--a", pa, "parameter a, p/q or p/q+r/s*i")->required();
    s->add_option("--b", pb, "parameter b")->required();
    s->add_option("--c", pc, "parameter c")->required();
    s->add_option("--d", pd, "d >= 0")->required()->check(CLI::NonNegativeNumber);
  };
  auto* rd_build = rd->add_subcommand("build", "write A, B, C, Delta");
  add_rd(rd_build);
  rd_build->add_option("--out", rd_out, "output file (default stdout)");
  auto* rd_analyze = rd->add_subcommand("analyze", "irreducibility, class, minimal polynomials, Leonard criterion");
  add_rd(rd_analyze);

  // leonard
  auto* leonard = app.add_subcommand("leonard", "Leonard triple certification");
  leonard->require_subcommand(1);
  auto* l_check = leonard->add_subcommand("check", "check A, B, C from a rep file");
  l_check->add_option("--rep", rep_path, "file with blocks A, B, C, Delta")->required()->check(CLI::ExistingFile);

  // hypercube
  auto* cube = app.add_subcommand("hypercube", "the hypercube module");
  cube->require_subcommand(1);
  int D = 2;
  std::string export_dir;
  auto* c_build = cube->add_subcommand("build", "build the sl2 action and the graph operators");
  c_build->add_option("--D", D, "dimension, 2..12")->required()->check(CLI::Range(2, 12));
  c_build->add_option("--export", export_dir, "directory for the matrices");
  auto* c_verify = cube->add_subcommand("verify", "operator identities on the hypercube");
  c_verify->add_option("--D", D, "dimension, 2..12")->required()->check(CLI::Range(2, 12));

  // decompose
  auto* dec = app.add_subcommand("decompose", "decomposition into irreducible Racah modules");
  std::string target;
  int n = -1;
  dec->add_option("--target", target, "hypercube, Ln or halved")->required()->check(CLI::IsMember({"hypercube", "Ln", "halved"}));
  dec->add_option("--D", D, "hypercube dimension")->check(CLI::Range(2, 12));
  dec->add_option("--n", n, "highest weight of L_n")->check(CLI::NonNegativeNumber);

  auto* te = app.add_subcommand("compare-te-re", "the algebras T_e and R_e on the halved cube");
  te->add_option("--D", D, "dimension, 2..12")->required()->check(CLI::Range(2, 12));

  // suite
  auto* suite = app.add_subcommand("suite", "run verification suites");
  std::string targets = "all", D_range = "2..8", d_range = "0..6", out_path, export_matrices;
  int samples = 20, n_max = 12;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  suite->add_option("--targets", targets, "comma-separated targets or 'all'");
  suite->add_option("--D", D_range, "hypercube range a..b");
  suite->add_option("--d", d_range, "R_d range a..b");
  suite->add_option("--n", n_max, "largest n for the L_n suites");
  suite->add_option("--samples", samples, "parameter draws per d");
  suite->add_option("--seed", seed, "sampling seed");
  suite->add_option("--out", out_path, "report file (default stdout)");
  suite->add_option("--workers", workers, "worker threads (default RACAHLAB_WORKERS or 1)");
  suite->add_option("--export-matrices", export_matrices, "directory for sampled and hypercube matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*v_sharp) {
      Report r = verify_sharp_relations();
      append(r, verify_casimir_image());
      return emit_report(r);
    }
    if (*v_kernel) return emit_report(verify_kernel_generators());
    if (*v_d3) return emit_report(verify_equivariance());
    if (*v_even) {
      Report r = verify_even_identities();
      append(r, verify_homogeneous_tables());
      return emit_report(r);
    }
    if (*r_verify) {
      RacahRep r = load_rep(rep_path);
      Report checks = verify_presentation(r);
      append(checks, verify_casimir_centrality(r));
      append(checks, verify_cubic_relations(r));
      CentralValues cv = central_values(r);
      Casimirs cs = casimirs(r);
      json j = {{"dim", r.dim()},
                {"checks", to_json(checks)},
                {"central_values",
                 {{"alpha", central_json(cv.alpha)}, {"beta", central_json(cv.beta)}, {"gamma", central_json(cv.gamma)},
                  {"delta", central_json(cv.delta)}}},
                {"casimirs",
                 {{"Omega_A", central_json(cs.OmegaA)}, {"Omega_B", central_json(cs.OmegaB)}, {"Omega_C", central_json(cs.OmegaC)}}}};
      return emit(j, all_pass(checks));
    }
    if (*rd_build) {
      RacahRep r = construct(rd_params(pa, pb, pc, pd));
      if (rd_out.empty()) {
        write_rep(std::cout, r);
      } else {
        std::ofstream f(rd_out);
        if (!f) throw Error("cannot write " + rd_out);
        write_rep(f, r);
      }
      return 0;
    }
    if (*rd_analyze) {
      RdParams p = rd_params(pa, pb, pc, pd);
      Irreducibility irr = irreducibility(p);
      json j = {{"module", params_label(p)}, {"irreducible", irr.irreducible}};
      if (!irr.irreducible) {
        j["reducibility_witness"] = irr.witness;
        j["iso_class"] = nullptr;
        j["min_poly_degrees"] = nullptr;
        j["leonard"] = nullptr;
        return emit(j, true);
      }
      RacahRep r = construct(p);
      j["iso_class"] = iso_class_json(iso_class(r, p.d));
      MinPolys mp = min_polys(p);
      j["min_poly_degrees"] = {{"A", mp.A.degree()}, {"B", mp.B.degree()}, {"C", mp.C.degree()}};
      j["min_polys"] = {{"A", poly_json(mp.A)}, {"B", poly_json(mp.B)}, {"C", poly_json(mp.C)}};
      j["diagonalizable"] = {{"A", diagonalizable_parameter(p.a, p.d)},
                             {"B", diagonalizable_parameter(p.b, p.d)},
                             {"C", diagonalizable_parameter(p.c, p.d)}};
      j["leonard"] = leonard_criterion(p);
      j["note"] = kLabelNote;
      return emit(j, true);
    }
    if (*l_check) {
      RacahRep r = load_rep(rep_path);
      LeonardReport lr = check(r.A, r.B, r.C);
      return emit(to_json(lr), true);
    }
    if (*c_build) {
      Hypercube h = build_hypercube(D);
      if (!export_dir.empty()) export_hypercube(h, export_dir);
      json j = {{"D", D}, {"vertices", h.space.size()}, {"exported_to", export_dir.empty() ? json(nullptr) : json(export_dir)}};
      return emit(j, true);
    }
    if (*c_verify) return emit_report(verify_hypercube(build_hypercube(D)));
    if (*dec) {
      if (target == "Ln") {
        if (n < 0) throw ConfigError("--target Ln needs --n");
        DecompositionReport r = decompose_Ln(n);
        return emit(to_json(r), all_pass(r.checks) && r.complete && r.invariant);
      }
      if (dec->count("--D") == 0) throw ConfigError("--target " + target + " needs --D");
      Hypercube h = build_hypercube(D);
      if (target == "hypercube") {
        HypercubeDecomposition hd = decompose_hypercube(h);
        json j = to_json(hd.racah);
        json mult = json::object();
        for (auto [w, m] : hd.sl2.multiplicity) mult["L_" + std::to_string(w)] = m;
        j["sl2_multiplicities"] = mult;
        return emit(j, all_pass(hd.racah.checks) && hd.racah.complete && hd.racah.invariant);
      }
      DecompositionReport r = decompose_halved(h);
      return emit(to_json(r), all_pass(r.checks) && r.complete && r.invariant);
    }
    if (*te) {
      TeReComparison c = compare_Te_Re(D);
      json j = {{"dim_Te", c.te_dim},
                {"dim_Re", c.re_dim},
                {"equal", c.te_dim == c.re_dim},
                {"D_parity", D % 2 ? "odd" : "even"},
                {"checks", to_json(c.checks)}};
      return emit(j, all_pass(c.checks));
    }
    if (*suite) {
      SuiteConfig cfg;
      if (targets != "all") {
        cfg.targets.clear();
        std::stringstream ss(targets);
        for (std::string t; std::getline(ss, t, ',');)
          if (!t.empty()) cfg.targets.push_back(t);
      }
      cfg.D = parse_range(D_range);
      cfg.d = parse_range(d_range);
      cfg.n_max = n_max;
      cfg.samples = samples;
      cfg.seed = seed;
      cfg.out = out_path;
      cfg.export_matrices = export_matrices;
      cfg.workers = workers ? workers : workers_from_env();
      SuiteResult res = run_suite(cfg);
      return emit(res.report, res.pass, cfg.out);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
