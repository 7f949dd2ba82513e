#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pvf/random.hpp"
#include "pvf/vecfield.hpp"

namespace pvf {
namespace {

using test::F;
using test::P;

TEST(VectorField, Apply) {
  EXPECT_EQ(apply(F("[1, 0]"), P("x^2")), P("2*x"));
  EXPECT_EQ(apply(euler_field(2), P("x^2*y")), P("3*x^2*y"));
  Generator gen(3);
  for (int k = 0; k < 10; ++k) EXPECT_TRUE(apply(gen.field(2, 3), P("1")).is_zero());
}

TEST(VectorField, BracketOfTranslationWithLinear) {
  // [d_i, x_j d_k] = delta_ij d_k for all index choices in n = 3.
  const std::size_t n = 3;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto lhs = bracket(VectorField::coordinate(n, i),
                                 VectorField::scaled_coordinate(Poly::variable(n, j), k));
        const auto rhs = i == j ? VectorField::coordinate(n, k) : VectorField(n);
        EXPECT_EQ(lhs, rhs) << i << j << k;
      }
    }
  }
}

TEST(VectorField, LinearFieldsCommutator) {
  // [x_i d_j, x_k d_l] = delta_jk x_i d_l - delta_li x_k d_j.
  const std::size_t n = 3;
  auto lin = [&](std::size_t a, std::size_t b) {
    return VectorField::scaled_coordinate(Poly::variable(n, a), b);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          VectorField rhs(n);
          if (j == k) rhs += lin(i, l);
          if (l == i) rhs -= lin(k, j);
          EXPECT_EQ(bracket(lin(i, j), lin(k, l)), rhs);
        }
}

TEST(VectorField, Bracket) {
  EXPECT_EQ(bracket(F("[0, x]"), F("[y, 0]")), F("[x, -y]"));
  EXPECT_EQ(bracket(euler_field(2), F("[1, 0]")), F("[-1, 0]"));
  EXPECT_THROW(bracket(F("[1, 0]"), F("[1, 0, 0]")), DimensionMismatch);
}

TEST(VectorField, Divergence) {
  for (std::size_t n : {2u, 3u, 4u}) EXPECT_EQ(divergence(euler_field(n)), Poly::constant(n, n));
  EXPECT_EQ(divergence(F("[x^2, 0]")), P("2*x"));
  EXPECT_TRUE(divergence(F("[y, -x]")).is_zero());
  EXPECT_TRUE(is_divergence_free(F("[y, -x]")));
  EXPECT_TRUE(has_constant_divergence(F("[x + y^2, 3*y]")));
  EXPECT_FALSE(has_constant_divergence(F("[x^2, 0]")));
}

TEST(VectorField, EulerAndSplit) {
  EXPECT_EQ(euler_field(2), F("[x, y]"));
  const auto e = decompose_vfc(euler_field(2));
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(e->divergence_free.is_zero());
  EXPECT_EQ(e->euler_coefficient, Rational(1));
  const auto dx = decompose_vfc(F("[1, 0]"));
  ASSERT_TRUE(dx.has_value());
  EXPECT_EQ(dx->divergence_free, F("[1, 0]"));
  EXPECT_EQ(dx->euler_coefficient, Rational(0));
  const auto mixed = decompose_vfc(F("[2*x + y^2, 3*y + x]"));
  ASSERT_TRUE(mixed.has_value());
  EXPECT_EQ(mixed->euler_coefficient, make_rational(5, 2));
  EXPECT_TRUE(is_divergence_free(mixed->divergence_free));
  EXPECT_FALSE(decompose_vfc(F("[x^2, 0]")).has_value());
}

TEST(VectorField, Grading) {
  const auto d = F("[1 + x + x^2, 0]");
  EXPECT_EQ(graded_component(d, -1), F("[1, 0]"));
  EXPECT_EQ(graded_component(d, 0), F("[x, 0]"));
  EXPECT_EQ(graded_component(d, 1), F("[x^2, 0]"));
  EXPECT_EQ(graded_component(euler_field(2), 0), euler_field(2));
  EXPECT_TRUE(graded_component(euler_field(2), 1).is_zero());
  EXPECT_EQ(homogeneous_degree(F("[x*y, y^2]")), 1);
  EXPECT_EQ(homogeneous_degree(F("[1, 0]")), -1);
  EXPECT_FALSE(homogeneous_degree(d).has_value());
}

TEST(VectorField, GradedBases) {
  // dim VF_d = n * C(n + d, n - 1).
  EXPECT_EQ(graded_basis(2, -1).basis.size(), 2u);
  EXPECT_EQ(graded_basis(2, 0).basis.size(), 4u);
  EXPECT_EQ(graded_basis(3, 1).basis.size(), 18u);
  // Div maps VF_d onto K[x]_d, so dim VF^0_d = dim VF_d - dim K[x]_d.
  EXPECT_EQ(divergence_free_basis(2, 0).basis.size(), 3u);
  EXPECT_EQ(divergence_free_basis(3, 1).basis.size(), 18u - 3u);
  EXPECT_EQ(constant_divergence_basis(2, 0).basis.size(), 4u);
  for (const auto& b : divergence_free_basis(3, 2).basis) EXPECT_TRUE(is_divergence_free(b));
  const auto coords = graded_coordinates(F("[x*y, 2*y^2]"), 1);
  EXPECT_EQ(coords.size(), 6u);
  EXPECT_THROW(graded_coordinates(F("[x, 1]"), 0), std::invalid_argument);
}

TEST(VectorField, Nilpotence) {
  EXPECT_EQ(nilpotence_probe(F("[1, 0]"), 5), NilpotenceVerdict(Nilpotent{2}));
  EXPECT_EQ(nilpotence_probe(F("[y, 0]"), 5), NilpotenceVerdict(Nilpotent{2}));
  EXPECT_EQ(nilpotence_probe(F("[x, 0]"), 10), NilpotenceVerdict(NilpotenceUnknown{10}));
  EXPECT_EQ(nilpotence_probe(F("[y^2, 1]"), 10), NilpotenceVerdict(Nilpotent{4}));
}

TEST(VectorField, ModuleRank) {
  std::vector<VectorField> xs = {F("[1, 0]"), F("[0, 1]")};
  EXPECT_EQ(module_rank(xs), 2);
  xs = {F("[1, 0]"), F("[y, 0]")};
  EXPECT_EQ(module_rank(xs), 1);
  xs = {F("[x, 0]"), F("[0, y]"), euler_field(2)};
  EXPECT_EQ(module_rank(xs), 2);
  const auto f1 = F("[x*y, y^2, x]"), f2 = F("[x^2, x*y, z]");
  xs = {f1, f2, P("y", 3) * f1 - P("x + 1", 3) * f2};
  EXPECT_EQ(module_rank(xs), 2);
}

TEST(VectorField, DerivedSpan) {
  auto r = derived_span_check(2, -1, 1);
  EXPECT_TRUE(r.full());
  EXPECT_EQ(r.target_dimension, 2u);
  r = derived_span_check(2, 0, 1);
  EXPECT_TRUE(r.full());
  EXPECT_EQ(r.target_dimension, 3u);
  // dim VF^0_1 for n = 3 is dim VF_1 - dim K[x]_1 = 18 - 3 = 15, the kernel
  // of the surjection Div: VF_1 -> K[x]_1.
  r = derived_span_check(3, 1, 2);
  EXPECT_TRUE(r.full());
  EXPECT_EQ(r.target_dimension, 15u);
  EXPECT_THROW(derived_span_check(1, 0, 1), std::invalid_argument);
  EXPECT_THROW(derived_span_check(2, 2, 1), std::invalid_argument);
}

TEST(VectorField, ConstantDivergenceGenerator) {
  Generator gen(9);
  for (int k = 0; k < 20; ++k) {
    const Rational c = gen.integer(-3, 3);
    EXPECT_EQ(divergence(gen.constant_divergence_field(3, 2, c)), Poly::constant(3, c));
  }
}

}  // namespace
}  // namespace pvf
