#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "pvf/errors.hpp"
#include "pvf/linalg.hpp"
#include "pvf/poly.hpp"
#include "pvf/poly_matrix.hpp"
#include "pvf/vecfield.hpp"

namespace pvf {

/// A polynomial map A^n -> A^n, x |-> (f_1(x), ..., f_n(x)).
class PolyMap {
 public:
  // Every component must have dimension components.size().
  explicit PolyMap(std::vector<Poly> components);
  static PolyMap identity(std::size_t n);

  std::size_t dimension() const noexcept { return components_.size(); }
  const std::vector<Poly>& components() const noexcept { return components_; }
  const Poly& operator[](std::size_t i) const { return components_[i]; }

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  std::vector<Poly> components_;
};

/// Returns second o first, i.e. x |-> second(first(x)): the components of
/// `first` are substituted into those of `second`.
PolyMap compose_maps(const PolyMap& first, const PolyMap& second);

/// Entry (k, j) is df_k/dx_j.
PolyMatrix jacobian(const PolyMap& phi);

/// The Jacobian determinant when it is a nonzero constant.
std::optional<Rational> is_etale(const PolyMap& phi);

class NotEtale : public DomainError {
 public:
  explicit NotEtale(Poly jacobian_determinant);
  const Poly& jacobian_determinant() const noexcept { return det_; }

 private:
  Poly det_;
};

/// The unique field phi^*(delta) with Jac(phi) * phi^*(delta) = delta o phi,
/// computed as det^{-1} * Adj(Jac(phi)) * (delta o phi). Throws NotEtale.
VectorField pullback(const PolyMap& phi, const VectorField& delta);

/// x |-> g x + b with g invertible.
struct AffineLetter {
  RationalMatrix linear;
  RationalVector translation;
  friend bool operator==(const AffineLetter&, const AffineLetter&) = default;
};

/// x_i |-> x_i + p with p not involving x_i (0-based index).
struct ElementaryLetter {
  std::size_t index;
  Poly shift;
  friend bool operator==(const ElementaryLetter&, const ElementaryLetter&) = default;
};

using AutLetter = std::variant<AffineLetter, ElementaryLetter>;

/// An automorphism of A^n as a product of affine and elementary letters.
/// The word l_1 l_2 ... l_k denotes l_1 o l_2 o ... o l_k, so l_k acts first.
class AutWord {
 public:
  explicit AutWord(std::size_t n) : n_(n) {}
  // Validates each letter (invertible linear part, shift free of x_i).
  AutWord(std::size_t n, std::vector<AutLetter> letters);

  std::size_t dimension() const noexcept { return n_; }
  const std::vector<AutLetter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  AutWord& append(AutLetter letter);
  // Letters reversed, each inverted.
  AutWord inverse() const;
  friend AutWord operator*(const AutWord& a, const AutWord& b);
  friend bool operator==(const AutWord&, const AutWord&) = default;

 private:
  std::size_t n_;
  std::vector<AutLetter> letters_;
};

PolyMap letter_map(std::size_t n, const AutLetter& letter);
AutLetter invert_letter(const AutLetter& letter);
PolyMap materialize(const AutWord& w);

/// Ad(w) delta = (w^*)^{-1} o delta o w^*, evaluated as the pullback along
/// materialize(w.inverse()).
VectorField ad_action(const AutWord& w, const VectorField& delta);

struct TraceAdjugateCheck {
  bool holds;
  Poly trace_side;        // tr(dA/dt * Adj(A))
  Poly determinant_side;  // d/dt det(A)
};

/// Compares both sides of tr(dA/dt * Adj(A)) = d/dt det(A), where t is the
/// variable with index `t`.
TraceAdjugateCheck trace_adjugate_check(const PolyMatrix& a, std::size_t t);

}  // namespace pvf
