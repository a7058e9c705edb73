#include <gtest/gtest.h>

#include <random>

#include "racahlab/sharp.hpp"

using namespace racahlab;

namespace {

GR q(long long p, long long d = 1) { return GR::frac(p, d); }
const PBWElement E = PBWElement::E(), F = PBWElement::F(), H = PBWElement::H();

PBWElement random_element(std::mt19937& rng, int terms, int max_deg) {
  std::uniform_int_distribution<int> exp(0, max_deg), coef(-3, 3);
  PBWElement x;
  for (int t = 0; t < terms; ++t) {
    std::uint32_t e = exp(rng), f = exp(rng), h = exp(rng);
    while (e + f + h > static_cast<std::uint32_t>(max_deg)) {
      if (e) --e;
      else if (f) --f;
      else --h;
    }
    x.add({e, f, h}, GR(Rational(coef(rng)), Rational(coef(rng))));
  }
  return x;
}

void expect_all_pass(const Report& r) {
  ASSERT_FALSE(r.empty());
  for (const auto& c : r) EXPECT_TRUE(c.pass) << c.identity << " residual terms " << c.residual_term_count;
}

}  // namespace

TEST(Multiply, StraighteningExamples) {
  PBWElement fe = F * E;
  EXPECT_EQ(fe.term_count(), 2u);
  EXPECT_EQ(fe.coeff({1, 1, 0}), q(1));
  EXPECT_EQ(fe.coeff({0, 0, 1}), q(-1));
  EXPECT_EQ(H * E, E * H + E * 2);
  EXPECT_EQ(H * F, F * H - F * 2);
  EXPECT_EQ(E * F - F * E, H);
}

TEST(Multiply, Associative) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::uint32_t> d(0, 2);
  for (int t = 0; t < 60; ++t) {
    PBWElement x = PBWElement::monomial(d(rng), d(rng), d(rng));
    PBWElement y = PBWElement::monomial(d(rng), d(rng), d(rng));
    PBWElement z = PBWElement::monomial(d(rng), d(rng), d(rng));
    EXPECT_EQ((x * y) * z, x * (y * z));
  }
}

TEST(Casimir, NormalFormAndCentral) {
  PBWElement L = casimir();
  EXPECT_EQ(L.term_count(), 3u);
  EXPECT_EQ(L.coeff({1, 1, 0}), q(2));
  EXPECT_EQ(L.coeff({0, 0, 1}), q(-1));
  EXPECT_EQ(L.coeff({0, 0, 2}), q(1, 2));
  EXPECT_TRUE(commutator(L, E).is_zero());
  EXPECT_TRUE(commutator(L, F).is_zero());
  EXPECT_TRUE(commutator(L, H).is_zero());
}

TEST(Grading, Components) {
  auto parts = graded_components(sharp(RacahSymbol::Delta));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].degree, -2);
  EXPECT_EQ(parts[1].degree, 2);
  EXPECT_EQ(parts[0].element, F * F * H / 64 - F * F / 32);
  auto b = graded_components(sharp(RacahSymbol::B));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].degree, 0);
  auto e2 = graded_components(E * E);
  ASSERT_EQ(e2.size(), 1u);
  EXPECT_EQ(e2[0].degree, 2);
}

TEST(Grading, ComponentsReassemble) {
  std::mt19937 rng(8);
  PBWElement x = random_element(rng, 12, 5);
  PBWElement sum;
  for (const auto& c : graded_components(x)) {
    for (const auto& [m, k] : c.element.terms()) EXPECT_EQ(m.degree(), c.degree);
    sum += c.element;
  }
  EXPECT_EQ(sum, x);
}

TEST(Grading, Multiplicative) {
  std::mt19937 rng(21);
  for (int t = 0; t < 8; ++t) {
    PBWElement x = random_element(rng, 4, 3), y = random_element(rng, 4, 3);
    PBWElement xy = x * y;
    for (int n = -6; n <= 6; ++n) {
      PBWElement expect;
      for (int n1 = -3; n1 <= 3; ++n1) expect += homogeneous_component(x, n1) * homogeneous_component(y, n - n1);
      EXPECT_EQ(homogeneous_component(xy, n), expect);
    }
  }
}

TEST(Grading, Evenness) {
  EXPECT_TRUE(is_even(sharp(RacahSymbol::A)));
  EXPECT_FALSE(is_even(E));
  EXPECT_TRUE(is_even(casimir() * H));
  for (auto s : kRacahSymbols) EXPECT_TRUE(is_even(sharp(s))) << symbol_name(s);
}

TEST(Sharp, Images) {
  EXPECT_EQ(sharp(RacahSymbol::B), H * H / 16 - PBWElement(q(1, 4)));
  EXPECT_TRUE(sharp(RacahSymbol::alpha).is_zero());
  EXPECT_TRUE(sharp(RacahSymbol::beta).is_zero());
  EXPECT_TRUE(sharp(RacahSymbol::gamma).is_zero());
  EXPECT_EQ(sharp(RacahSymbol::delta), (casimir() - 6) / 8);
  EXPECT_EQ(sharp(RacahSymbol::OmegaB), casimir_image_closed_form());
  EXPECT_EQ(sharp(RacahSymbol::OmegaA), sharp(RacahSymbol::OmegaB));
  EXPECT_EQ(sharp(RacahSymbol::OmegaC), sharp(RacahSymbol::OmegaB));
}

TEST(Sharp, VerificationReports) {
  EXPECT_EQ(verify_sharp_relations().size(), 7u);
  expect_all_pass(verify_sharp_relations());
  expect_all_pass(verify_casimir_image());
  expect_all_pass(verify_kernel_generators());
  expect_all_pass(verify_equivariance());
  expect_all_pass(verify_even_identities());
  expect_all_pass(verify_homogeneous_tables());
}

TEST(Sharp, ResidualsDetectWrongIdentities) {
  // a wrong Casimir constant must leave a nonzero residual
  PBWElement wrong = sharp(RacahSymbol::OmegaB) - (casimir() - 4) * (casimir() - 12) * q(-3, 1000);
  auto c = residual_check("perturbed", wrong);
  EXPECT_FALSE(c.pass);
  EXPECT_GT(c.residual_term_count, 0u);
  auto t = coordinate_check("perturbed table", sharp(RacahSymbol::B), {{{0, 0, 2}, q(1, 16)}});
  EXPECT_FALSE(t.pass);
  EXPECT_EQ(t.residual_term_count, 1u);
}

TEST(LambdaBasis, CoordinatesRebuildElement) {
  std::mt19937 rng(4);
  PBWElement L = casimir();
  for (int t = 0; t < 10; ++t) {
    PBWElement x = random_element(rng, 6, 4);
    PBWElement even;
    for (const auto& [m, c] : x.terms())
      if (m.degree() % 2 == 0) even.add(m, c);
    PBWElement rebuilt;
    for (const auto& [key, c] : lambda_coordinates(even)) {
      auto [n, i, k] = key;
      PBWElement prefix = n >= 0 ? PBWElement::monomial(2 * n, 0, 0) : PBWElement::monomial(0, -2 * n, 0);
      rebuilt += prefix * pow(L, i) * PBWElement::monomial(0, 0, k, c);
    }
    EXPECT_EQ(rebuilt, even);
  }
  EXPECT_THROW(lambda_coordinates(E), Error);
}

TEST(D3, Examples) {
  EXPECT_EQ(d3_apply(kSigma, d3_apply(kSigma, E)), E);
  PBWElement h = H;
  for (int k = 0; k < 3; ++k) h = d3_apply(kTau, h);
  EXPECT_EQ(h, H);
  for (const auto& g : {kSigma, kTau}) EXPECT_EQ(d3_apply(g, casimir()), casimir());
  EXPECT_EQ(d3_apply(kTau, sharp(RacahSymbol::A)), sharp(RacahSymbol::B));
  EXPECT_EQ(d3_apply(kSigma, sharp(RacahSymbol::B)), sharp(RacahSymbol::B));
  EXPECT_EQ(d3_apply(kSigma, sharp(RacahSymbol::Delta)), -sharp(RacahSymbol::Delta));
}

TEST(D3, GroupStructure) {
  EXPECT_EQ(parse_d3_word("ss"), D3Element{});
  EXPECT_EQ(parse_d3_word("ttt"), D3Element{});
  EXPECT_EQ(parse_d3_word("stst"), D3Element{});
  EXPECT_EQ(parse_d3_word("ts"), parse_d3_word("stt"));
  EXPECT_EQ(parse_d3_word("sigma*tau"), (D3Element{1, 1}));
  EXPECT_EQ(parse_d3_word("\xcf\x83\xcf\x84"), (D3Element{1, 1}));
  EXPECT_THROW(parse_d3_word("x"), ParseError);
  // images of H under the six elements are pairwise distinct
  std::vector<PBWElement> images;
  for (const auto& g : d3_elements()) images.push_back(d3_apply(g, H));
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b) EXPECT_NE(images[a], images[b]);
  EXPECT_EQ(d3_apply(parse_d3_word("tt"), H), E + F);
}

TEST(D3, AutomorphismsRespectProducts) {
  std::mt19937 rng(13);
  for (int t = 0; t < 6; ++t) {
    PBWElement x = random_element(rng, 3, 3), y = random_element(rng, 3, 3);
    for (const auto& g : {kSigma, kTau}) EXPECT_EQ(d3_apply(g, x * y), d3_apply(g, x) * d3_apply(g, y));
  }
}

TEST(D3, RacahSideTables) {
  EXPECT_EQ(d3_apply(kSigma, RacahSymbol::alpha), (SignedSymbol{-1, RacahSymbol::gamma}));
  EXPECT_EQ(d3_apply(kTau, RacahSymbol::OmegaA), (SignedSymbol{1, RacahSymbol::OmegaB}));
  EXPECT_EQ(d3_apply(parse_d3_word("stst"), RacahSymbol::Delta), (SignedSymbol{1, RacahSymbol::Delta}));
}

TEST(PbwText, RoundTrip) {
  PBWElement x = sharp(RacahSymbol::A) * GR(Rational(1), Rational(-2, 3));
  EXPECT_EQ(pbw_from_text(pbw_to_text(x)), x);
  EXPECT_EQ(pbw_to_text(H * 2), "0 0 1 2/1 0/1\n");
  EXPECT_THROW(pbw_from_text("1 2\n"), ParseError);
  EXPECT_THROW(pbw_from_text("-1 0 0 1/1 0/1\n"), ParseError);
}
