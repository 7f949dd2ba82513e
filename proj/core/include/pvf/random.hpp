#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "pvf/affine.hpp"
#include "pvf/morphism.hpp"
#include "pvf/poly.hpp"
#include "pvf/poly_matrix.hpp"
#include "pvf/vecfield.hpp"

namespace pvf {

/// Seeded generator of random algebraic objects for property checks.
/// Sequences depend only on the seed and the call order.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  std::mt19937_64& engine() noexcept { return engine_; }

  long integer(long lo, long hi);
  bool coin(double p_true = 0.5);
  // Nonzero integer in [lo, hi].
  long nonzero(long lo, long hi);

  // Sum of up to `max_terms` random monomials of degree <= max_degree with
  // integer coefficients in [-coeff_bound, coeff_bound].
  Poly poly(std::size_t n, unsigned max_degree, std::size_t max_terms, long coeff_bound = 3);
  // Same, restricted to monomials that do not involve x_skip.
  Poly poly_without(std::size_t n, std::size_t skip, unsigned max_degree,
                    std::size_t max_terms, long coeff_bound = 3);
  Poly homogeneous_poly(std::size_t n, unsigned degree, std::size_t max_terms,
                        long coeff_bound = 3);

  VectorField field(std::size_t n, unsigned max_degree, std::size_t max_terms = 4,
                    long coeff_bound = 3);
  VectorField homogeneous_field(std::size_t n, int d, std::size_t max_terms = 3);
  // A field with constant divergence c: a divergence-free part plus c/n * E.
  VectorField constant_divergence_field(std::size_t n, unsigned max_degree, const Rational& c);

  // Invertible matrix with small integer entries.
  RationalMatrix invertible_matrix(std::size_t n, long entry_bound = 2);
  RationalVector vector(std::size_t n, long entry_bound = 2);

  AutLetter affine_letter(std::size_t n);
  AutLetter elementary_letter(std::size_t n, unsigned max_degree);
  // Between 1 and max_letters letters. Elementary shifts are sparse (at
  // most two terms) of degree <= elementary_degree.
  AutWord word(std::size_t n, std::size_t max_letters, unsigned elementary_degree);

  AffElement aff_element(std::size_t n, long entry_bound = 3);
  PolyMatrix poly_matrix(std::size_t size, std::size_t n, unsigned max_degree,
                         std::size_t max_terms = 3);

 private:
  Monomial monomial(std::size_t n, unsigned max_degree);

  std::mt19937_64 engine_;
};

}  // namespace pvf
