#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pvf/morphism.hpp"
#include "pvf/random.hpp"

namespace pvf {
namespace {

using test::F;
using test::M;
using test::P;

PolyMatrix PM(std::vector<std::vector<std::string>> rows, std::size_t n = 2) {
  std::vector<std::vector<Poly>> out;
  for (const auto& r : rows) {
    std::vector<Poly> row;
    for (const auto& e : r) row.push_back(P(e, n));
    out.push_back(std::move(row));
  }
  return PolyMatrix::from_rows(std::move(out));
}

TEST(Morphism, Compose) {
  const auto phi = M("[x + y^2, y]");
  EXPECT_EQ(compose_maps(PolyMap::identity(2), phi), phi);
  EXPECT_EQ(compose_maps(phi, PolyMap::identity(2)), phi);
  EXPECT_EQ(compose_maps(M("[x - y^2, y]"), phi), PolyMap::identity(2));
  // second o first: first substituted into second.
  EXPECT_EQ(compose_maps(M("[x, y + x^2]"), M("[x + y, y]")), M("[x + y + x^2, y + x^2]"));
}

TEST(Morphism, ComposeIsAssociative) {
  Generator gen(42);
  for (int k = 0; k < 20; ++k) {
    std::vector<PolyMap> maps;
    for (int j = 0; j < 3; ++j) {
      std::vector<Poly> c;
      for (int i = 0; i < 2; ++i) c.push_back(gen.poly(2, 2, 3));
      maps.emplace_back(std::move(c));
    }
    EXPECT_EQ(compose_maps(compose_maps(maps[0], maps[1]), maps[2]),
              compose_maps(maps[0], compose_maps(maps[1], maps[2])));
  }
}

TEST(Morphism, Jacobian) {
  EXPECT_EQ(jacobian(M("[x + y^2, y]")), PM({{"1", "2*y"}, {"0", "1"}}));
  EXPECT_EQ(jacobian(PolyMap::identity(2)), PolyMatrix::identity(2, 2));
  EXPECT_EQ(jacobian(M("[x^2, y]")), PM({{"2*x", "0"}, {"0", "1"}}));
}

TEST(Morphism, DetAndAdjugate) {
  auto r = det_and_adjugate(PM({{"1", "2*y"}, {"0", "1"}}));
  EXPECT_EQ(r.det, P("1"));
  EXPECT_EQ(r.adjugate, PM({{"1", "-2*y"}, {"0", "1"}}));
  r = det_and_adjugate(PolyMatrix::identity(3, 2));
  EXPECT_EQ(r.det, P("1"));
  EXPECT_EQ(r.adjugate, PolyMatrix::identity(3, 2));
  r = det_and_adjugate(PM({{"x", "y"}, {"y", "x"}}));
  EXPECT_EQ(r.det, P("x^2 - y^2"));
  EXPECT_EQ(r.adjugate, PM({{"x", "-y"}, {"-y", "x"}}));
}

TEST(Morphism, AdjugateIdentityRandom) {
  Generator gen(1);
  for (int k = 0; k < 20; ++k) {
    const auto size = static_cast<std::size_t>(gen.integer(1, 4));
    const auto m = gen.poly_matrix(size, 2, 2, 2);
    const auto r = det_and_adjugate(m);
    PolyMatrix scaled(size, size, 2);
    for (std::size_t i = 0; i < size; ++i) scaled(i, i) = r.det;
    EXPECT_EQ(m * r.adjugate, scaled);
    EXPECT_EQ(determinant(m), r.det);
    EXPECT_EQ(determinant(m.transpose()), r.det);
  }
}

TEST(Morphism, Etale) {
  EXPECT_EQ(is_etale(M("[x + y^2, y]")), Rational(1));
  EXPECT_FALSE(is_etale(M("[x^2, y]")).has_value());
  EXPECT_EQ(is_etale(M("[x + y, x - y]")), Rational(-2));
}

TEST(Morphism, Pullback) {
  const auto phi = M("[x + y^2, y]");
  EXPECT_EQ(pullback(phi, F("[1, 0]")), F("[1, 0]"));
  EXPECT_EQ(pullback(phi, F("[0, 1]")), F("[-2*y, 1]"));
  EXPECT_EQ(pullback(M("[2*x, 2*y]"), euler_field(2)), euler_field(2));
  const auto d = F("[x*y^2 - 1, 3*x]");
  EXPECT_EQ(pullback(PolyMap::identity(2), d), d);
  try {
    pullback(M("[x^2, y]"), d);
    FAIL() << "expected NotEtale";
  } catch (const NotEtale& e) {
    EXPECT_EQ(e.jacobian_determinant(), P("2*x"));
    EXPECT_EQ(e.kind(), "not-etale");
  }
}

TEST(Morphism, Words) {
  const AffineLetter shift{RationalMatrix::identity(2), {Rational(3), Rational(-1)}};
  const ElementaryLetter elem{1, P("x^2")};
  const AutWord w(2, {shift, elem});
  // l1 o l2: the elementary letter acts first.
  EXPECT_EQ(materialize(w), M("[x + 3, y + x^2 - 1]"));
  EXPECT_EQ(compose_maps(materialize(w), materialize(w.inverse())), PolyMap::identity(2));
  EXPECT_EQ(materialize(w * w.inverse()), PolyMap::identity(2));
  EXPECT_THROW(AutWord(2, {ElementaryLetter{1, P("y")}}), DomainError);
  EXPECT_THROW(AutWord(2, {AffineLetter{RationalMatrix(2, 2), RationalVector(2)}}), DomainError);
}

TEST(Morphism, AdAction) {
  const auto d = F("[x*y, 1 - y^2]");
  EXPECT_EQ(ad_action(AutWord(2), d), d);
  const AutWord translate(2, {AffineLetter{RationalMatrix::identity(2), {Rational(5), Rational(-2)}}});
  EXPECT_EQ(ad_action(translate, F("[1, 0]")), F("[1, 0]"));
  const AutWord dilate(2, {AffineLetter{Rational(2) * RationalMatrix::identity(2), RationalVector(2)}});
  EXPECT_EQ(ad_action(dilate, F("[x^2, 0]")), F("[1/2*x^2, 0]"));
  EXPECT_EQ(ad_action(dilate, F("[1, 0]")), F("[2, 0]"));
}

TEST(Morphism, AdIsGroupAction) {
  Generator gen(8);
  for (int k = 0; k < 15; ++k) {
    const auto w1 = gen.word(2, 2, 2), w2 = gen.word(2, 2, 2);
    const auto d = gen.field(2, 2);
    EXPECT_EQ(ad_action(w1 * w2, d), ad_action(w1, ad_action(w2, d)));
    EXPECT_EQ(ad_action(w1.inverse(), ad_action(w1, d)), d);
  }
}

TEST(Morphism, TraceAdjugate) {
  auto r = trace_adjugate_check(PM({{"x", "0"}, {"0", "1"}}), 0);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.trace_side, P("1"));
  r = trace_adjugate_check(PM({{"x", "1"}, {"1", "x"}}), 0);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.determinant_side, P("2*x"));
  Generator gen(42);
  for (int k = 0; k < 10; ++k) {
    EXPECT_TRUE(trace_adjugate_check(gen.poly_matrix(3, 2, 2, 3), 1).holds);
  }
}

}  // namespace
}  // namespace pvf
