#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pvf/affine.hpp"
#include "pvf/random.hpp"

namespace pvf {
namespace {

using test::F;

RationalMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
  RationalMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

RationalVector e(std::size_t n, std::size_t i) {
  RationalVector v(n);
  v[i] = 1;
  return v;
}

TEST(Affine, Embed) {
  EXPECT_EQ(embed({e(2, 0), RationalMatrix(2, 2)}), F("[1, 0]"));
  EXPECT_EQ(embed({RationalVector(2), RationalMatrix::identity(2)}), euler_field(2));
  EXPECT_EQ(embed({RationalVector(2), unit(2, 0, 1)}), F("[y, 0]"));
  EXPECT_FALSE(extract_affine(F("[x^2, 0]")).has_value());
  const AffElement u{{Rational(1), Rational(-2)}, unit(2, 1, 0)};
  EXPECT_EQ(extract_affine(embed(u)), u);
}

TEST(Affine, Bracket) {
  const AffElement a{{Rational(1), Rational(2)}, RationalMatrix(2, 2)};
  const AffElement b{{Rational(-3), Rational(5)}, RationalMatrix(2, 2)};
  const auto ab = aff_bracket(a, b);
  EXPECT_EQ(ab.translation, RationalVector(2));
  EXPECT_TRUE(ab.linear.is_zero());
  // [(0, E12), (e2, 0)]: the field bracket [y d_x, d_y] = -d_x.
  const auto lt = aff_bracket({RationalVector(2), unit(2, 0, 1)}, {e(2, 1), RationalMatrix(2, 2)});
  EXPECT_EQ(lt.translation, -e(2, 0));
  EXPECT_EQ(embed(lt), bracket(F("[y, 0]"), F("[0, 1]")));
  // [(0, A), (0, B)] = (0, BA - AB).
  const auto A = unit(2, 0, 1), B = unit(2, 1, 0);
  const auto ll = aff_bracket({RationalVector(2), A}, {RationalVector(2), B});
  EXPECT_EQ(ll.linear, B * A - A * B);
}

TEST(Affine, SlBasis) {
  const auto basis = sl_basis(3);
  ASSERT_EQ(basis.size(), 8u);
  EXPECT_EQ(basis[0], unit(3, 0, 1));
  EXPECT_EQ(basis[6], unit(3, 0, 0) - unit(3, 1, 1));
  for (const auto& m : basis) EXPECT_EQ(m.trace(), Rational(0));
  Generator gen(2);
  for (int k = 0; k < 10; ++k) {
    RationalMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = gen.integer(-3, 3);
    m(2, 2) = -m(0, 0) - m(1, 1);
    const auto c = sl_coordinates(m);
    RationalMatrix back(3, 3);
    for (std::size_t b = 0; b < basis.size(); ++b) back = back + c[b] * basis[b];
    EXPECT_EQ(back, m);
  }
}

TEST(Affine, Cocycle) {
  EXPECT_TRUE(cocycle_check(SlLinearMap::coboundary(e(2, 0))).is_cocycle);
  EXPECT_TRUE(cocycle_check(SlLinearMap::zero(2)).is_cocycle);

  // l(E12) = e1, all other images zero.
  std::vector<RationalVector> images(3, RationalVector(2));
  images[0] = e(2, 0);
  const SlLinearMap l(2, images);
  const auto r = cocycle_check(l);
  EXPECT_FALSE(r.is_cocycle);
  ASSERT_TRUE(r.failing_pair.has_value());
  const auto basis = sl_basis(2);
  const auto& A = basis[r.failing_pair->first];
  const auto& B = basis[r.failing_pair->second];
  EXPECT_NE(l(A * B - B * A), A * l(B) - B * l(A));
  // The hand-checked pair (H, E12): l([H, E12]) = 2 e1 but H l(E12) - E12 l(H) = e1.
  const auto& H = basis[2];
  const auto& E12 = basis[0];
  EXPECT_EQ(l(H * E12 - E12 * H), Rational(2) * RationalMatrix::identity(2) * e(2, 0));
  EXPECT_EQ(H * l(E12) - E12 * l(H), e(2, 0));
}

TEST(Affine, CoboundarySolve) {
  const RationalVector v = {Rational(3), make_rational(-1, 2)};
  EXPECT_EQ(coboundary_solve(SlLinearMap::coboundary(v)), v);
  EXPECT_EQ(coboundary_solve(SlLinearMap::zero(2)), RationalVector(2));
  Generator gen(42);
  for (int k = 0; k < 10; ++k) {
    const auto w = gen.vector(3, 2);
    EXPECT_EQ(coboundary_solve(SlLinearMap::coboundary(w)), w);
  }
  std::vector<RationalVector> images(3, RationalVector(2));
  images[0] = e(2, 0);
  EXPECT_THROW(coboundary_solve(SlLinearMap(2, images)), DomainError);
}

}  // namespace
}  // namespace pvf
