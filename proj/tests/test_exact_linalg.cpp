#include <gtest/gtest.h>

#include <random>

#include "racahlab/linalg.hpp"
#include "racahlab/roots.hpp"

using namespace racahlab;

namespace {

GR q(long long p, long long d = 1) { return GR::frac(p, d); }
const GR I = GR::i();

ExactMatrix random_matrix(std::mt19937& rng, std::size_t n, int box) {
  std::uniform_int_distribution<int> dist(-box, box);
  ExactMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = GR(Rational(dist(rng)), Rational(dist(rng) / 2));
  return m;
}

}  // namespace

TEST(Rational, ReducesAndCompares) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(-3, 2).to_string(), "-3/2");
  EXPECT_EQ(Rational(5).to_string(), "5/1");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
  EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
}

TEST(Rational, OverflowPromotesAndDemotes) {
  Rational big(INT64_MAX);
  Rational s = big + big;
  EXPECT_FALSE(s.is_small());
  EXPECT_EQ(s.to_string(), "18446744073709551614/1");
  Rational back = s - big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  Rational p = Rational(1, 3037000500) * Rational(1, 3037000500);
  EXPECT_EQ(p * Rational(3037000500) * Rational(3037000500), Rational(1));
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("12"), Rational(12));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/2").to_string(), "61728394506172839450617283945/1");
  EXPECT_THROW(Rational::parse("1/-2"), ParseError);
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_THROW(Rational::parse("3/0"), DivisionByZero);
}

TEST(Gaussian, FieldArithmetic) {
  EXPECT_EQ(I * I, q(-1));
  GR z(Rational(3, 4), Rational(-2));
  EXPECT_EQ(z * z.inverse(), q(1));
  EXPECT_EQ(z / z, q(1));
  EXPECT_EQ(z.conj() * z, GR(z.norm()));
  EXPECT_THROW(z / GR(), DivisionByZero);
}

TEST(Gaussian, TextTokens) {
  for (const char* tok : {"1/2", "-3/4+5/6*i", "0/1-1/1*i", "-1/1+1/1*i"})
    EXPECT_EQ(GR::parse(tok).to_string(), tok);
  EXPECT_EQ(GR::parse("2-3*i"), GR(Rational(2), Rational(-3)));
  EXPECT_THROW(GR::parse("1/2*i"), ParseError);
  EXPECT_THROW(GR::parse("1/2+i"), ParseError);
}

TEST(Matrix, TextRoundTrip) {
  ExactMatrix m{{q(1, 2), I}, {q(-3), GR(Rational(1, 3), Rational(-1, 5))}};
  EXPECT_EQ(matrix_from_text(to_text(m)), m);
  EXPECT_THROW(matrix_from_text("0 2\n"), ParseError);
  EXPECT_THROW(matrix_from_text("2 2\n1 2 3\n"), ParseError);
}

TEST(Rref, Examples) {
  auto [r3, k3] = rref(ExactMatrix::identity(3));
  EXPECT_EQ(r3, ExactMatrix::identity(3));
  EXPECT_EQ(k3, 3u);
  auto [z, k0] = rref(ExactMatrix(2, 2));
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(k0, 0u);
  ExactMatrix m{{q(1), I}, {I, q(-1)}};
  EXPECT_EQ(rank(m), 1u);
}

TEST(Rref, Idempotent) {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    ExactMatrix m = random_matrix(rng, 4, 2);
    auto first = rref(m).first;
    EXPECT_EQ(rref(first).first, first);
  }
}

TEST(Kernel, AnnihilatesAndHasRightDimension) {
  ExactMatrix m{{q(1), q(2), q(3)}, {q(2), q(4), q(6)}};
  auto ker = kernel(m);
  ASSERT_EQ(ker.size(), 2u);
  for (const auto& v : ker) EXPECT_TRUE(is_zero_vector(m.apply(v)));
}

TEST(Subspace, CanonicalBasis) {
  using V = Vec<GR>;
  ExactSubspace a(3, {V{q(1), q(1), q(0)}, V{q(0), q(1), q(1)}});
  ExactSubspace b(3, {V{q(1), q(0), q(-1)}, V{q(2), q(3), q(1)}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(V{q(1), q(2), q(1)}));
  EXPECT_FALSE(a.contains(V{q(0), q(0), q(1)}));
}

TEST(MinimalPolynomial, Examples) {
  auto p = minimal_polynomial(ExactMatrix::diagonal({q(5, 16), q(-3, 16)}));
  EXPECT_EQ(p, ExactPolynomial::from_roots({q(5, 16), q(-3, 16)}));
  ExactMatrix nil{{q(0), q(1)}, {q(0), q(0)}};
  EXPECT_EQ(minimal_polynomial(nil), (ExactPolynomial{q(0), q(0), q(1)}));
  EXPECT_EQ(minimal_polynomial(ExactMatrix::scalar(3, q(7, 2))), ExactPolynomial::linear_root(q(7, 2)));
}

TEST(MinimalPolynomial, AnnihilatesAndNoProperDivisorDoes) {
  std::mt19937 rng(5);
  for (int t = 0; t < 12; ++t) {
    // block structure forces repeated eigenvalues so the min poly is a proper divisor of the char poly
    ExactMatrix m = ExactMatrix::diagonal({q(1), q(1), q(2), q(t % 3)});
    if (t % 2) m(0, 1) = q(1);
    ExactMatrix s = random_matrix(rng, 4, 1) + ExactMatrix::scalar(4, q(5));
    auto [red, rk] = rref(s);
    if (rk < 4) continue;
    ExactMatrix inv = *solve_columns(s, ExactMatrix::identity(4));
    ExactMatrix conj = s * m * inv;
    auto p = minimal_polynomial(conj);
    EXPECT_TRUE(p(conj).is_zero());
    auto roots = rational_roots(p);
    ASSERT_TRUE(roots.splits);
    // dropping any one linear factor must leave a non-annihilating polynomial
    auto div = divmod(p, ExactPolynomial::linear_root(roots.roots[t % roots.roots.size()])).first;
    EXPECT_FALSE(div(conj).is_zero());
  }
}

TEST(EigenSplit, Examples) {
  auto s = eigen_split(ExactMatrix::diagonal({q(1), q(1), q(2)}), {q(1), q(2)});
  ASSERT_EQ(s.spaces.size(), 2u);
  EXPECT_EQ(s.spaces[0].space.dim(), 2u);
  EXPECT_EQ(s.spaces[1].space.dim(), 1u);
  EXPECT_TRUE(s.diagonalizable);
  ExactMatrix nil{{q(0), q(1)}, {q(0), q(0)}};
  auto n = eigen_split(nil, {q(0)});
  EXPECT_EQ(n.spaces[0].space.dim(), 1u);
  EXPECT_FALSE(n.diagonalizable);
}

TEST(EigenSplit, RootsMismatch) {
  ExactMatrix d = ExactMatrix::diagonal({q(1), q(2)});
  EXPECT_THROW(eigen_split(d, {q(1)}), RootsMismatch);
  EXPECT_THROW(eigen_split(d, {q(1), q(3)}), RootsMismatch);
  EXPECT_THROW(eigen_split(d, {q(1), q(1), q(2)}), RootsMismatch);
}

TEST(EigenSplit, DiagonalizableIffSquareFree) {
  std::mt19937 rng(9);
  for (int t = 0; t < 15; ++t) {
    ExactMatrix m = random_matrix(rng, 3, 1);
    m(2, 0) = m(2, 1) = GR();
    m(1, 0) = GR();
    auto p = minimal_polynomial(m);
    auto roots = rational_roots(p);
    ASSERT_TRUE(roots.splits);
    auto s = eigen_split(m, roots.roots);
    std::size_t total = 0;
    for (const auto& e : s.spaces) total += e.space.dim();
    EXPECT_LE(total, 3u);
    EXPECT_EQ(s.diagonalizable, gcd(p, p.derivative()).degree() == 0);
  }
}

TEST(RationalRoots, Examples) {
  auto a = rational_roots(ExactPolynomial{q(-1), q(0), q(1)});
  EXPECT_TRUE(a.splits);
  EXPECT_EQ(a.roots, (std::vector<GR>{q(-1), q(1)}));
  auto b = rational_roots(ExactPolynomial{q(1), q(0), q(1)});
  EXPECT_TRUE(b.splits);
  EXPECT_EQ(b.roots, (std::vector<GR>{-I, I}));
  auto c = rational_roots(ExactPolynomial{q(-2), q(0), q(1)});
  EXPECT_FALSE(c.splits);
  EXPECT_TRUE(c.roots.empty());
}

TEST(RationalRoots, MixedAndRepeated) {
  std::vector<GR> rs{q(5, 16), q(-3, 16), GR(Rational(1, 2), Rational(-7, 3)), q(0)};
  auto p = ExactPolynomial::from_roots(rs) * ExactPolynomial::linear_root(q(5, 16)) *
           (ExactPolynomial{q(-2), q(0), q(1)});
  auto r = rational_roots(p);
  EXPECT_FALSE(r.splits);
  std::sort(rs.begin(), rs.end());
  EXPECT_EQ(r.roots, rs);
  auto split = rational_roots(ExactPolynomial::from_roots(rs));
  EXPECT_TRUE(split.splits);
}

TEST(RationalRoots, LargeConstantFallsBackToNumericSearch) {
  std::vector<GR> rs{q(1000003, 7), q(-999983, 11), GR(Rational(104729), Rational(-15485863))};
  auto r = rational_roots(ExactPolynomial::from_roots(rs));
  EXPECT_TRUE(r.splits);
  std::sort(rs.begin(), rs.end());
  EXPECT_EQ(r.roots, rs);
}

TEST(AlgebraClosure, Examples) {
  EXPECT_EQ(algebra_closure<GR>({ExactMatrix::identity(2)}, 2).dim, 1u);
  EXPECT_EQ(algebra_closure<GR>({ExactMatrix::diagonal({q(1), q(2)})}, 2).dim, 2u);
  ExactMatrix E{{q(0), q(2), q(0)}, {q(0), q(0), q(1)}, {q(0), q(0), q(0)}};
  ExactMatrix F{{q(0), q(0), q(0)}, {q(1), q(0), q(0)}, {q(0), q(2), q(0)}};
  ExactMatrix H = ExactMatrix::diagonal({q(2), q(0), q(-2)});
  auto cl = algebra_closure<GR>({E, F, H}, 3);
  EXPECT_EQ(cl.dim, 9u);
}

TEST(AlgebraClosure, MultiplicativelyClosed) {
  ExactMatrix a = ExactMatrix::diagonal({q(1), q(1), q(2), q(3)});
  ExactMatrix b(4, 4);
  b(0, 1) = q(1);
  b(2, 3) = I;
  auto cl = algebra_closure<GR>({a, b}, 4);
  for (const auto& x : cl.basis)
    for (const auto& y : cl.basis) EXPECT_TRUE(cl.contains(x * y));
}
