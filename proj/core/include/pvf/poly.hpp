#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pvf/errors.hpp"
#include "pvf/rational.hpp"

namespace pvf {

/// Exponent vector x_1^{e_1} ... x_n^{e_n}. The length is the ambient dimension.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1);

  std::size_t dimension() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  unsigned degree() const noexcept;
  bool is_one() const noexcept;

  // True when every exponent of *this is <= the matching one of other.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Graded lexicographic order with x_1 > x_2 > ... > x_n.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials of total degree `degree` in n variables, in descending grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned degree);
/// All monomials of total degree <= `degree`, descending grlex order.
std::vector<Monomial> monomials_up_to_degree(std::size_t n, unsigned degree);

/// Sparse polynomial in K[x_1..x_n] with exact rational coefficients.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so equality is plain structural comparison.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  // Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Poly(std::size_t n) : n_(n) {}

  static Poly constant(std::size_t n, const Rational& c);
  static Poly variable(std::size_t n, std::size_t i);
  static Poly term(Monomial m, const Rational& c);
  // Accepts terms in any order, with repeats and zeros; canonicalizes.
  static Poly from_terms(std::size_t n, std::vector<Term> terms);

  std::size_t dimension() const noexcept { return n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  int degree() const noexcept;
  // The constant value when the polynomial has no nonconstant terms.
  std::optional<Rational> constant_value() const;
  bool is_constant() const noexcept { return constant_value().has_value(); }
  Rational coefficient(const Monomial& m) const;
  // Leading term in grlex; requires !is_zero().
  const Term& leading_term() const;
  // Largest exponent of x_i over all terms.
  Monomial::Exponent degree_in(std::size_t i) const;
  bool involves(std::size_t i) const { return degree_in(i) > 0; }

  Poly homogeneous_part(unsigned d) const;
  Rational evaluate(std::span<const Rational> point) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  Poly(std::size_t n, std::vector<Term> sorted_terms)
      : n_(n), terms_(std::move(sorted_terms)) {}

  Poly& add_scaled(const Poly& other, const Rational& scale);

  std::size_t n_;
  std::vector<Term> terms_;
};

Poly pow(const Poly& p, unsigned e);

/// Formal partial derivative with respect to x_i (0-based).
Poly partial_derive(const Poly& p, std::size_t i);

/// Antiderivative in x_i with zero integration constant.
Poly integrate(const Poly& p, std::size_t i);

/// Substitutes images[i] for x_i. Every image must have the same dimension,
/// and there must be exactly p.dimension() of them.
Poly compose(const Poly& p, std::span<const Poly> images);

/// Quotient q with g = q * f when one exists. The quotient is found by solving
/// the linear system for the coefficients of q over all monomials of degree
/// <= deg g - deg f. Throws std::invalid_argument when f is zero.
std::optional<Poly> divides(const Poly& f, const Poly& g);

/// Thrown by potential_of_closed_form when dh_i/dx_j != dh_j/dx_i.
class NotClosed : public DomainError {
 public:
  NotClosed(std::size_t i, std::size_t j);
  // 0-based indices of the failing pair, i < j.
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

/// Returns f with df/dx_i = h_i for all i and zero constant term.
/// Throws NotClosed when the one-form h is not closed.
Poly potential_of_closed_form(std::span<const Poly> h);

/// Divides out the rational content so the leading coefficient is 1.
Poly make_monic(const Poly& p);

/// Greatest common divisor, normalized monic (zero only when both are zero).
/// Recursive primitive remainder sequences over the variables; intended for
/// the small inputs met when normalizing syzygies.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace pvf
