#include <gtest/gtest.h>

#include <random>

#include "racahlab/leonard.hpp"
#include "racahlab/rd_modules.hpp"

using namespace racahlab;

namespace {

GR q(long long p, long long d = 1) { return GR::frac(p, d); }

RdParams rd(GR a, GR b, GR c, int d) { return {std::move(a), std::move(b), std::move(c), d}; }

GR random_param(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), pick(0, 5);
  if (pick(rng) == 0) return GR(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
  return q(num(rng), 2);  // half-integers hit the forbidden sets often
}

}  // namespace

TEST(Construct, QuarterModule) {
  RacahRep r = construct(rd(q(-1, 4), q(-1, 4), q(-1, 4), 1));
  EXPECT_EQ(r.A, (ExactMatrix{{q(5, 16), q(0)}, {q(1), q(-3, 16)}}));
  EXPECT_EQ(r.B, (ExactMatrix{{q(5, 16), q(-3, 16)}, {q(0), q(-3, 16)}}));
  EXPECT_EQ(r.C, (ExactMatrix{{q(-7, 16), q(3, 16)}, {q(-1), q(9, 16)}}));
  EXPECT_EQ(rd_central(rd(q(-1, 4), q(-1, 4), q(-1, 4), 1)).delta, q(3, 16));
}

TEST(Construct, OneDimensional) {
  GR a = q(2, 3), b = GR(Rational(1), Rational(-1)), c = q(5);
  RacahRep r = construct(rd(a, b, c, 0));
  EXPECT_EQ(r.A, ExactMatrix{{a * (a + GR(1))}});
  EXPECT_EQ(r.B, ExactMatrix{{b * (b + GR(1))}});
  EXPECT_TRUE(r.Delta.is_zero());
}

TEST(Construct, TraceOfA) { EXPECT_EQ(construct(rd(q(1), q(1), q(1), 2)).A.trace(), q(8)); }

TEST(Irreducibility, Examples) {
  EXPECT_TRUE(is_irreducible(rd(q(-1, 4), q(-1, 4), q(-1, 4), 1)));
  auto red = irreducibility(rd(q(0), q(0), q(1, 2), 1));
  EXPECT_FALSE(red.irreducible);
  EXPECT_NE(red.witness.find("a+b-c"), std::string::npos);
  EXPECT_TRUE(is_irreducible(rd(q(7), q(-3), q(1, 2), 0)));
  EXPECT_FALSE(burnside_irreducible(construct(rd(q(0), q(0), q(1, 2), 1))));
  EXPECT_TRUE(burnside_irreducible(construct(rd(q(-1, 4), q(-1, 4), q(-1, 4), 1))));
}

TEST(IsoClass, Examples) {
  IsoClass k = iso_class(construct(rd(q(-1, 4), q(-1, 4), q(-1, 4), 1)), 1);
  EXPECT_EQ(k.sA, q(-3, 16));
  EXPECT_EQ(k.sB, q(-3, 16));
  EXPECT_EQ(k.sC, q(-3, 16));
  EXPECT_EQ(construct(rd(q(-1, 4), q(-1, 4), q(-1, 4), 1)).A.trace(), q(1, 8));
  RdParams p = rd(q(1, 3), q(2, 5), q(-3, 7), 3);
  RdParams m = rd(GR(-1) - p.a, p.b, p.c, 3);
  EXPECT_EQ(iso_class(construct(p), 3), iso_class(construct(m), 3));
  EXPECT_EQ(iso_class(construct(p), 3), iso_class_of(p));
  EXPECT_THROW(iso_class(construct(rd(q(0), q(0), q(1, 2), 1)), 1), NotIrreducible);
  EXPECT_THROW(iso_class(construct(p), 2), DimensionMismatch);
}

TEST(IsoClass, Labels) {
  EXPECT_EQ(class_label(iso_class_of(rd(q(-1, 4), q(-1, 4), q(-1, 4), 1))), "R_1(-1/4,-1/4,-1/4)");
  EXPECT_EQ(class_label(iso_class_of(rd(q(-1), q(1, 2), q(-3, 2), 0))), "R_0(0,1/2,1/2)");
  EXPECT_EQ(class_label(iso_class_of(rd(q(-1, 2), q(-1, 2), q(-1, 2), 0))), "R_0(-1/2,-1/2,-1/2)");
  GR z(Rational(-1, 2), Rational(3));
  EXPECT_EQ(class_label(iso_class_of(rd(z, z.conj(), q(0), 0))), "R_0(-1/2+3*i,-1/2+3*i,0)");
  // s = 1 has roots (-1 +- sqrt 5)/2 outside Q(i)
  IsoClass raw{0, q(1), q(0), q(0)};
  EXPECT_EQ(class_label(raw), "R_0([s=1],0,0)");
}

TEST(MinPolys, Examples) {
  auto mp = min_polys(rd(q(-1, 4), q(-1, 4), q(-1, 4), 1));
  EXPECT_EQ(mp.A, ExactPolynomial::from_roots({q(5, 16), q(-3, 16)}));
  auto zero = min_polys(rd(q(1, 3), q(2), q(-5), 0));
  EXPECT_EQ(zero.A.degree(), 1);
  EXPECT_EQ(zero.B.degree(), 1);
  EXPECT_EQ(zero.C.degree(), 1);
  // theta_0 = theta_2 = 3/4: the repeated root keeps degree 3 and A is not diagonalizable
  RdParams p = rd(q(-1, 2), q(1), q(1), 2);
  auto rep = min_polys(p);
  EXPECT_EQ(rep.A, ExactPolynomial::from_roots({q(3, 4), q(3, 4), q(-1, 4)}));
  EXPECT_EQ(minimal_polynomial(construct(p).A), rep.A);
  EXPECT_THROW(min_polys(rd(q(0), q(0), q(1, 2), 1)), NotIrreducible);
}

TEST(LeonardCriterion, Examples) {
  EXPECT_TRUE(leonard_criterion(rd(q(-1, 4), q(-1, 4), q(-1, 4), 1)));
  EXPECT_FALSE(leonard_criterion(rd(q(-1, 2), q(1), q(1), 2)));
  EXPECT_TRUE(leonard_criterion(rd(q(-1, 2), q(-1, 2), q(-1, 2), 0)));
  EXPECT_THROW(leonard_criterion(rd(q(0), q(0), q(1, 2), 1)), NotIrreducible);
}

TEST(RdProperties, RandomizedAgreement) {
  std::mt19937 rng(2024);
  int irreducible = 0, reducible = 0, leonard = 0, non_leonard = 0;
  for (int t = 0; t < 60; ++t) {
    RdParams p = rd(random_param(rng), random_param(rng), random_param(rng), t % 6);
    RacahRep r = construct(p);
    ASSERT_TRUE(all_pass(verify_presentation(r))) << params_label(p);
    RdCentral k = rd_central(p);
    CentralValues cv = central_values(r);
    EXPECT_EQ(cv.alpha.scalar, std::optional<GR>(k.alpha));
    EXPECT_EQ(cv.beta.scalar, std::optional<GR>(k.beta));
    EXPECT_EQ(cv.gamma.scalar, std::optional<GR>(k.gamma));
    EXPECT_EQ(cv.delta.scalar, std::optional<GR>(k.delta));
    IsoClass s = iso_class_of(p);
    GR n(p.d + 1);
    EXPECT_EQ(r.A.trace(), n * (s.sA + dd_term(p.d)));
    EXPECT_EQ(r.B.trace(), n * (s.sB + dd_term(p.d)));
    EXPECT_EQ(r.C.trace(), n * (s.sC + dd_term(p.d)));
    bool irr = is_irreducible(p);
    EXPECT_EQ(irr, burnside_irreducible(r)) << params_label(p);
    if (!irr) {
      ++reducible;
      continue;
    }
    ++irreducible;
    auto mp = min_polys(p);
    EXPECT_EQ(minimal_polynomial(r.A), mp.A);
    EXPECT_EQ(minimal_polynomial(r.B), mp.B);
    EXPECT_EQ(minimal_polynomial(r.C), mp.C);
    const std::array<std::pair<const ExactMatrix*, const GR*>, 3> ops = {{{&r.A, &p.a}, {&r.B, &p.b}, {&r.C, &p.c}}};
    for (const auto& [m, x] : ops) {
      auto pm = minimal_polynomial(*m);
      EXPECT_EQ(gcd(pm, pm.derivative()).degree() == 0, diagonalizable_parameter(*x, p.d)) << params_label(p);
    }
    auto hints = eigenvalue_hints(p);
    bool verdict = check(r.A, r.B, r.C, {hints[0], hints[1], hints[2]}).verdict;
    EXPECT_EQ(verdict, leonard_criterion(p)) << params_label(p);
    EXPECT_EQ(verdict, check(r.A, r.B, r.C).verdict);
    (verdict ? leonard : non_leonard)++;
  }
  EXPECT_GT(reducible, 0);
  EXPECT_GT(non_leonard, 0);
  EXPECT_GT(leonard, 0);
  EXPECT_GT(irreducible, 0);
}
