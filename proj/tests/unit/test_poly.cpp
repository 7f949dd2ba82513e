#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pvf/linalg.hpp"
#include "pvf/random.hpp"

namespace pvf {
namespace {

using test::P;

TEST(Poly, TermsAreCanonical) {
  const Poly p = Poly::from_terms(2, {{Monomial({0, 0}), make_rational(-1, 2)},
                                      {Monomial({2, 1}), Rational(3)},
                                      {Monomial({0, 0}), Rational(0)}});
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.leading_term().first, Monomial({2, 1}));
  EXPECT_EQ(p.coefficient(Monomial({0, 0})), make_rational(-1, 2));
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(Poly(2).degree(), Poly::kZeroDegree);
}

TEST(Poly, GradedLexOrder) {
  // deg first, then x1 > x2 > ...
  EXPECT_GT(Monomial({0, 2}), Monomial({1, 0}));
  EXPECT_GT(Monomial({2, 0}), Monomial({1, 1}));
  EXPECT_GT(Monomial({1, 1}), Monomial({0, 2}));
  const auto ms = monomials_of_degree(3, 2);
  ASSERT_EQ(ms.size(), 6u);
  EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end(), std::greater<>()));
}

TEST(Poly, Arithmetic) {
  EXPECT_EQ(P("(x + y) + (x - y)"), P("2*x"));
  EXPECT_EQ(P("(x + y)*(x - y)"), P("x^2 - y^2"));
  Generator gen(7);
  for (int k = 0; k < 20; ++k) EXPECT_TRUE((gen.poly(3, 3, 5) * Poly(3)).is_zero());
}

TEST(Poly, DimensionIsChecked) {
  EXPECT_THROW(Poly::variable(2, 0) + Poly::variable(3, 0), DimensionMismatch);
  EXPECT_THROW(Poly::variable(2, 0) * Poly::variable(3, 0), DimensionMismatch);
}

TEST(Poly, PartialDerive) {
  EXPECT_EQ(partial_derive(P("x^2*y"), 0), P("2*x*y"));
  EXPECT_EQ(partial_derive(P("7"), 0), Poly(2));
  EXPECT_EQ(partial_derive(P("x^2 + 3*y^3"), 1), P("9*y^2"));
}

TEST(Poly, IntegrateInvertsDerivative) {
  EXPECT_EQ(integrate(P("2*x*y + 1"), 0), P("x^2*y + x"));
  EXPECT_EQ(partial_derive(integrate(P("x*y^2 - 5"), 1), 1), P("x*y^2 - 5"));
}

TEST(Poly, Compose) {
  const Poly x1sq = P("x1^2");
  std::vector<Poly> m = {P("x1 + x2"), P("x2")};
  EXPECT_EQ(compose(x1sq, m), P("x1^2 + 2*x1*x2 + x2^2"));
  const Poly p = P("x^3 - 2*x*y + 1/3");
  std::vector<Poly> id = {P("x"), P("y")};
  EXPECT_EQ(compose(p, id), p);
  std::vector<Poly> swap = {P("y"), P("x")};
  EXPECT_EQ(compose(P("x*y"), swap), P("x*y"));
  // Images may live in another dimension.
  std::vector<Poly> into3 = {P("x + z", 3), P("y", 3)};
  EXPECT_EQ(compose(P("x*y"), into3), P("x*y + y*z", 3));
}

TEST(Poly, Divides) {
  EXPECT_EQ(divides(P("x"), P("x^2*y")), P("x*y"));
  EXPECT_EQ(divides(P("x + y"), P("x^2 - y^2")), P("x - y"));
  EXPECT_FALSE(divides(P("x"), P("x + 1")).has_value());
  EXPECT_EQ(divides(P("3"), P("x + 1")), P("1/3*x + 1/3"));
  EXPECT_EQ(divides(P("x - y"), Poly(2)), Poly(2));
  EXPECT_THROW(divides(Poly(2), P("x")), std::invalid_argument);
}

// Independent oracle: solve for q over all monomials of degree <= deg g -
// deg f as a dense rational system.
std::optional<Poly> dense_divides(const Poly& f, const Poly& g) {
  const std::size_t n = f.dimension();
  if (g.is_zero()) return Poly(n);
  if (g.degree() < f.degree()) return std::nullopt;
  const auto unknowns = monomials_up_to_degree(n, static_cast<unsigned>(g.degree() - f.degree()));
  const auto rows = monomials_up_to_degree(n, static_cast<unsigned>(g.degree()));
  RationalMatrix a(rows.size(), unknowns.size());
  RationalVector b(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    b[r] = g.coefficient(rows[r]);
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
      a(r, c) = (Poly::term(unknowns[c], 1) * f).coefficient(rows[r]);
    }
  }
  const auto x = solve(a, b);
  if (!x) return std::nullopt;
  std::vector<Poly::Term> terms;
  for (std::size_t c = 0; c < unknowns.size(); ++c) terms.emplace_back(unknowns[c], (*x)[c]);
  return Poly::from_terms(n, std::move(terms));
}

TEST(Poly, DividesAgreesWithDenseSolve) {
  Generator gen(42);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    Poly f = gen.poly(n, 2, 3);
    if (f.is_zero()) f = Poly::constant(n, 2);
    const Poly g = gen.coin() ? gen.poly(n, 2, 3) * f : gen.poly(n, 4, 5);
    const auto fast = divides(f, g);
    const auto dense = dense_divides(f, g);
    ASSERT_EQ(fast.has_value(), dense.has_value()) << "case " << k;
    if (fast) {
      EXPECT_EQ(*fast, *dense);
      EXPECT_EQ(*fast * f, g);
    }
  }
}

TEST(Poly, Potential) {
  std::vector<Poly> h = {P("2*x*y"), P("x^2")};
  EXPECT_EQ(potential_of_closed_form(h), P("x^2*y"));
  h = {P("1"), P("1")};
  EXPECT_EQ(potential_of_closed_form(h), P("x + y"));
  h = {P("y"), P("-x")};
  try {
    potential_of_closed_form(h);
    FAIL() << "expected NotClosed";
  } catch (const NotClosed& e) {
    EXPECT_EQ(e.i(), 0u);
    EXPECT_EQ(e.j(), 1u);
    EXPECT_EQ(e.kind(), "not-closed");
  }
}

TEST(Poly, PotentialThenGradientIsIdentity) {
  Generator gen(11);
  for (int k = 0; k < 50; ++k) {
    const Poly p = gen.poly(3, 4, 6);
    std::vector<Poly> grad;
    for (std::size_t i = 0; i < 3; ++i) grad.push_back(partial_derive(p, i));
    const Poly f = potential_of_closed_form(grad);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(partial_derive(f, i), grad[i]);
    EXPECT_EQ(f.coefficient(Monomial(3)), Rational(0));
  }
}

TEST(Poly, Gcd) {
  EXPECT_EQ(gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")), P("x + y"));
  EXPECT_EQ(gcd(P("2*x*y"), P("4*x^2")), P("x"));
  EXPECT_EQ(gcd(P("x + 1"), P("y")), P("1"));
  EXPECT_EQ(gcd(Poly(2), P("3*y - 6")), P("y - 2"));
  EXPECT_EQ(gcd(P("x^2 + 13/4*x"), P("-32*x - 104")), P("x + 13/4"));
  Generator gen(5);
  for (int k = 0; k < 40; ++k) {
    const Poly c = gen.poly(3, 2, 3);
    const Poly a = gen.poly(3, 2, 3) * c, b = gen.poly(3, 2, 3) * c;
    const Poly g = gcd(a, b);
    if (a.is_zero() && b.is_zero()) continue;
    ASSERT_TRUE(divides(g, a).has_value());
    ASSERT_TRUE(divides(g, b).has_value());
    if (!c.is_zero()) EXPECT_TRUE(divides(make_monic(c), g).has_value()) << "case " << k;
  }
}

TEST(Poly, Evaluate) {
  const std::vector<Rational> pt = {make_rational(1, 2), Rational(-3)};
  EXPECT_EQ(P("4*x^2*y + y - 1").evaluate(pt), Rational(-7));
}

}  // namespace
}  // namespace pvf
