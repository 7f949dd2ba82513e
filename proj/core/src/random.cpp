#include "pvf/random.hpp"

#include <stdexcept>

#include "pvf/linalg.hpp"

namespace pvf {

long Generator::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

bool Generator::coin(double p_true) { return std::bernoulli_distribution(p_true)(engine_); }

long Generator::nonzero(long lo, long hi) {
  if (lo == 0 && hi == 0) throw std::invalid_argument("empty nonzero range");
  long v = 0;
  while (v == 0) v = integer(lo, hi);
  return v;
}

Monomial Generator::monomial(std::size_t n, unsigned max_degree) {
  Monomial m(n);
  const auto degree = static_cast<unsigned>(integer(0, max_degree));
  for (unsigned k = 0; k < degree; ++k) m[static_cast<std::size_t>(integer(0, n - 1))] += 1;
  return m;
}

Poly Generator::poly(std::size_t n, unsigned max_degree, std::size_t max_terms,
                     long coeff_bound) {
  std::vector<Poly::Term> terms;
  const auto count = static_cast<std::size_t>(integer(0, static_cast<long>(max_terms)));
  for (std::size_t k = 0; k < count; ++k) {
    terms.emplace_back(monomial(n, max_degree), Rational(nonzero(-coeff_bound, coeff_bound)));
  }
  return Poly::from_terms(n, std::move(terms));
}

Poly Generator::poly_without(std::size_t n, std::size_t skip, unsigned max_degree,
                             std::size_t max_terms, long coeff_bound) {
  std::vector<Poly::Term> terms;
  const auto count = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
  for (std::size_t k = 0; k < count; ++k) {
    Monomial m(n);
    const auto degree = static_cast<unsigned>(integer(0, max_degree));
    for (unsigned e = 0; e < degree && n > 1; ++e) {
      std::size_t v = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 2));
      if (v >= skip) ++v;
      m[v] += 1;
    }
    terms.emplace_back(std::move(m), Rational(nonzero(-coeff_bound, coeff_bound)));
  }
  return Poly::from_terms(n, std::move(terms));
}

Poly Generator::homogeneous_poly(std::size_t n, unsigned degree, std::size_t max_terms,
                                 long coeff_bound) {
  const auto mons = monomials_of_degree(n, degree);
  std::vector<Poly::Term> terms;
  const auto count = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
  for (std::size_t k = 0; k < count; ++k) {
    const auto& m = mons[static_cast<std::size_t>(integer(0, static_cast<long>(mons.size()) - 1))];
    terms.emplace_back(m, Rational(nonzero(-coeff_bound, coeff_bound)));
  }
  return Poly::from_terms(n, std::move(terms));
}

VectorField Generator::field(std::size_t n, unsigned max_degree, std::size_t max_terms,
                             long coeff_bound) {
  std::vector<Poly> components;
  for (std::size_t i = 0; i < n; ++i) components.push_back(poly(n, max_degree, max_terms, coeff_bound));
  return VectorField(std::move(components));
}

VectorField Generator::homogeneous_field(std::size_t n, int d, std::size_t max_terms) {
  std::vector<Poly> components;
  for (std::size_t i = 0; i < n; ++i) {
    components.push_back(coin() ? homogeneous_poly(n, static_cast<unsigned>(d + 1), max_terms)
                                : Poly(n));
  }
  if (VectorField(components).is_zero()) {
    components[0] = homogeneous_poly(n, static_cast<unsigned>(d + 1), max_terms);
  }
  return VectorField(std::move(components));
}

VectorField Generator::constant_divergence_field(std::size_t n, unsigned max_degree,
                                                 const Rational& c) {
  VectorField v = euler_field(n) * (c / static_cast<long>(n));
  if (n < 2) return v;
  // h_j d/dx_i - h_i d/dx_j with h_k = dh/dx_k is divergence free.
  const long pairs = integer(1, 2);
  for (long k = 0; k < pairs; ++k) {
    const auto i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const Poly h = poly(n, max_degree + 1, 3);
    v += VectorField::scaled_coordinate(partial_derive(h, j), i);
    v -= VectorField::scaled_coordinate(partial_derive(h, i), j);
  }
  return v;
}

RationalMatrix Generator::invertible_matrix(std::size_t n, long entry_bound) {
  while (true) {
    RationalMatrix g(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) g(r, c) = integer(-entry_bound, entry_bound);
    }
    if (determinant(g) != 0) return g;
  }
}

RationalVector Generator::vector(std::size_t n, long entry_bound) {
  RationalVector v(n);
  for (auto& x : v) x = integer(-entry_bound, entry_bound);
  return v;
}

AutLetter Generator::affine_letter(std::size_t n) {
  return AffineLetter{invertible_matrix(n, 1), vector(n, 2)};
}

AutLetter Generator::elementary_letter(std::size_t n, unsigned max_degree) {
  const auto i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
  Poly shift(n);
  while (shift.is_zero()) shift = poly_without(n, i, max_degree, 2, 2);
  return ElementaryLetter{i, std::move(shift)};
}

AutWord Generator::word(std::size_t n, std::size_t max_letters, unsigned elementary_degree) {
  AutWord w(n);
  const auto count = static_cast<std::size_t>(integer(1, static_cast<long>(max_letters)));
  for (std::size_t k = 0; k < count; ++k) {
    if (n > 1 && coin(0.65)) {
      w.append(elementary_letter(n, elementary_degree));
    } else {
      w.append(affine_letter(n));
    }
  }
  return w;
}

AffElement Generator::aff_element(std::size_t n, long entry_bound) {
  AffElement u{vector(n, entry_bound), RationalMatrix(n, n)};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) u.linear(r, c) = integer(-entry_bound, entry_bound);
  }
  return u;
}

PolyMatrix Generator::poly_matrix(std::size_t size, std::size_t n, unsigned max_degree,
                                  std::size_t max_terms) {
  PolyMatrix m(size, size, n);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) m(r, c) = poly(n, max_degree, max_terms);
  }
  return m;
}

}  // namespace pvf
