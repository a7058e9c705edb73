#include <gtest/gtest.h>

#include "racahlab/decompose.hpp"

using namespace racahlab;

namespace {

GR q(long long p, long long d = 1) { return GR::frac(p, d); }

void expect_all_pass(const Report& r) {
  ASSERT_FALSE(r.empty());
  for (const auto& c : r) EXPECT_TRUE(c.pass) << c.identity << " residual terms " << c.residual_term_count;
}

}  // namespace

TEST(Sl2Isotypic, LnIsSingleCopy) {
  Sl2Decomposition d = sl2_isotypic(build_Ln(5));
  ASSERT_EQ(d.copies.size(), 1u);
  EXPECT_EQ(d.copies[0].n, 5);
  EXPECT_EQ(d.copies[0].chain, ExactMatrix::identity(6));
}

TEST(Sl2Isotypic, HypercubeMultiplicities) {
  for (int D = 2; D <= 6; ++D) {
    Sl2Decomposition d = sl2_isotypic(build_hypercube(D).rep);
    for (int k = 0; 2 * k <= D; ++k) EXPECT_EQ(d.multiplicity[D - 2 * k], static_cast<std::size_t>(binomial(D, k) - binomial(D, k - 1)));
  }
}

TEST(Sl2Isotypic, ChangeOfBasisAndErrors) {
  Sl2Rep r = build_Ln(3);
  // conjugate by a unipotent matrix so H is no longer diagonal
  ExactMatrix P = ExactMatrix::identity(4), Pinv = ExactMatrix::identity(4);
  P(0, 2) = q(1);
  Pinv(0, 2) = q(-1);
  Sl2Rep s{P * r.E * Pinv, P * r.F * Pinv, P * r.H * Pinv, {}};
  Sl2Decomposition d = sl2_isotypic(s);
  ASSERT_EQ(d.copies.size(), 1u);
  EXPECT_EQ(d.copies[0].n, 3);

  Sl2Rep bad{ExactMatrix(2, 2), ExactMatrix(2, 2), ExactMatrix(2, 2), {}};
  bad.H(0, 1) = q(1);
  EXPECT_THROW(sl2_isotypic(bad), Error);
}

TEST(Sl2Isotypic, NonDiagonalizableH) {
  // zero E and F satisfy [E,F] = H only when H = 0, so feed the weight-space helper directly
  ExactMatrix H(2, 2);
  H(0, 1) = q(1);
  EXPECT_THROW(detail::weight_spaces(H), NonDiagonalizableH);
  ExactMatrix J = ExactMatrix::diagonal({q(1, 2), q(1)});
  EXPECT_THROW(detail::weight_spaces(J), NonDiagonalizableH);
}

TEST(ExpectedLabels, HalvesOfLn) {
  for (int n = 0; n <= 16; ++n) {
    DecompositionReport r = decompose_Ln(n);
    EXPECT_TRUE(r.complete) << n;
    EXPECT_TRUE(r.invariant) << n;
    expect_all_pass(r.checks);
    const auto families = as_classes(half_family_classes(n));
    for (const auto& s : r.summands) {
      EXPECT_TRUE(s.leonard) << s.label;
      ASSERT_TRUE(s.cls.has_value());
      EXPECT_TRUE(families.count(*s.cls)) << n << " " << s.label;
    }
  }
}

TEST(SplitEvenHalf, Examples) {
  HalfSplit a = split_even_half(3, 0);
  ASSERT_EQ(a.parts.size(), 1u);
  EXPECT_EQ(class_label(a.parts[0].cls), "R_1(-1/4,-1/4,-1/4)");
  HalfSplit b = split_even_half(2, 1);
  ASSERT_EQ(b.parts.size(), 1u);
  EXPECT_EQ(class_label(b.parts[0].cls), "R_0(0,-1/2,0)");
  HalfSplit c = split_even_half(4, 0);
  ASSERT_EQ(c.parts.size(), 2u);
  EXPECT_EQ(class_label(c.parts[0].cls), "R_0(0,1/2,0)");
  EXPECT_EQ(class_label(c.parts[1].cls), "R_1(0,0,0)");
  for (int n = 0; n <= 12; ++n)
    for (int p = 0; p <= (n >= 1 ? 1 : 0); ++p) expect_all_pass(split_even_half(n, p).checks);
}

TEST(SplitEvenHalf, WrongActionIsRejected) {
  RacahRep r = half_racah_closed_form(6, 0);
  EXPECT_THROW(split_even_half(r, 6, 1), DimMismatch);
  // swapping B and C preserves invariance of the pieces but not their classes
  RacahRep swapped(r.A, r.C, r.B, -r.Delta);
  EXPECT_THROW(split_even_half(swapped, 6, 0), ClassMismatch);
}

TEST(ExpectedLabels, SpecificLabels) {
  DecompositionReport r = decompose_Ln(4);
  std::vector<std::string> labels;
  for (const auto& s : r.summands) labels.push_back(s.label);
  std::vector<std::string> want = {"R_0(0,0,1/2)", "R_0(0,1/2,0)", "R_0(1/2,0,0)", "R_1(0,0,0)"};
  std::sort(labels.begin(), labels.end());
  EXPECT_EQ(labels, want);
  EXPECT_EQ(decompose_Ln(7).summands.size(), 1u);
  EXPECT_EQ(decompose_Ln(7).summands[0].label, "R_3(-1/4,-1/4,-1/4)");
  EXPECT_EQ(decompose_Ln(7).summands[0].multiplicity, 2u);
}

TEST(HalfFamilies, FamiliesPairwiseDistinct) {
  std::set<IsoClass> all;
  std::size_t count = 0;
  for (int n = 0; n <= 40; ++n)
    for (const auto& p : half_family_classes(n)) {
      all.insert(iso_class_of(p));
      ++count;
      EXPECT_TRUE(is_irreducible(p)) << params_label(p);
    }
  EXPECT_EQ(all.size(), count);
}

TEST(Hypercube, DecompositionMatchesTables) {
  for (int D = 2; D <= 7; ++D) {
    HypercubeDecomposition h = decompose_hypercube(D);
    EXPECT_TRUE(h.racah.complete) << D;
    EXPECT_TRUE(h.racah.invariant) << D;
    expect_all_pass(h.racah.checks);
  }
}

TEST(Hypercube, GeneratedAlgebra) {
  const std::vector<long long> dims = {4, 5, 11, 14, 24};
  for (int D = 2; D <= 6; ++D) {
    EXPECT_EQ(hypercube_algebra_dim(D), dims[D - 2]);
    Hypercube h = build_hypercube(D);
    HypercubeDecomposition dec = decompose_hypercube(h);
    GeneratedAlgebra g = hypercube_algebra(h, dec.racah);
    EXPECT_EQ(static_cast<long long>(g.dim_racah), dims[D - 2]);
    EXPECT_EQ(g.dim_graph, g.dim_racah);
    expect_all_pass(g.checks);
  }
  EXPECT_EQ(hypercube_algebra_dim(7), 30);
  EXPECT_EQ(hypercube_algebra_dim(8), 45);
}

TEST(Hypercube, ProfileMismatchThrows) {
  DecompositionReport r = decompose_Ln(4);
  EXPECT_THROW(semisimple_profile(8, r), DimMismatch);
  SemisimpleProfile p = semisimple_profile(7, r);
  EXPECT_EQ(p.dim, 7u);
  EXPECT_EQ(p.blocks, (std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {1, 3}}));
  EXPECT_EQ(hypercube_algebra_profile(5).dim, 14u);
  EXPECT_EQ(hypercube_algebra_profile(2).blocks, (std::vector<std::pair<std::size_t, std::size_t>>{{1, 4}}));
}

TEST(HalvedCube, TeVersusRe) {
  TeReComparison c = compare_Te_Re(4);
  EXPECT_EQ(c.te_dim, 11u);
  EXPECT_EQ(c.re_dim, 7u);
  EXPECT_TRUE(c.proper);
  expect_all_pass(c.checks);
  for (int D = 2; D <= 6; ++D) expect_all_pass(compare_Te_Re(D).checks);
}

TEST(Sl2Isotypic, SmallHypercubes) {
  auto d2 = sl2_isotypic(build_hypercube(2).rep);
  EXPECT_EQ(d2.multiplicity.size(), 2u);
  EXPECT_EQ(d2.multiplicity[2], 1u);
  EXPECT_EQ(d2.multiplicity[0], 1u);
  auto d3 = sl2_isotypic(build_hypercube(3).rep);
  EXPECT_EQ(d3.multiplicity[3], 1u);
  EXPECT_EQ(d3.multiplicity[1], 2u);
  EXPECT_EQ(sl2_isotypic(build_Ln(5)).multiplicity.size(), 1u);
}

TEST(Hypercube, SmallDecompositions) {
  DecompositionReport r2 = decompose_hypercube(2).racah;
  std::set<std::string> labels;
  for (const auto& s : r2.summands) {
    labels.insert(s.label);
    EXPECT_EQ(s.dim, 1u);
  }
  EXPECT_EQ(labels, (std::set<std::string>{"R_0(-1/2,-1/2,-1/2)", "R_0(-1/2,0,0)", "R_0(0,0,-1/2)", "R_0(0,-1/2,0)"}));
  DecompositionReport r3 = decompose_hypercube(3).racah;
  ASSERT_EQ(r3.summands.size(), 2u);
  EXPECT_EQ(r3.summands[0].label, "R_0(-1/4,-1/4,-1/4)");
  EXPECT_EQ(r3.summands[1].label, "R_1(-1/4,-1/4,-1/4)");
  std::size_t total = 0;
  for (const auto& s : r3.summands) total += s.dim * s.multiplicity;
  EXPECT_EQ(total, 8u);
  Hypercube h5 = build_hypercube(5);
  RacahRep R = sharp_pullback(h5.rep);
  SemisimpleProfile p = semisimple_profile({R.A, R.B, R.C}, decompose_hypercube(h5).racah);
  EXPECT_EQ(p.dim, 14u);
  EXPECT_EQ(p.blocks, (std::vector<std::pair<std::size_t, std::size_t>>{{3, 1}, {2, 1}, {1, 1}}));
  EXPECT_EQ(compare_Te_Re(3).te_dim, compare_Te_Re(3).re_dim);
}
