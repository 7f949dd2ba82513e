#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pvf/linalg.hpp"
#include "pvf/vecfield.hpp"

namespace pvf {

/// Element (a, A) of aff_n acting as the vector field x |-> A x + a.
struct AffElement {
  RationalVector translation;  // a
  RationalMatrix linear;       // A

  std::size_t dimension() const noexcept { return translation.size(); }
  bool in_saff() const { return linear.trace() == 0; }
  friend bool operator==(const AffElement&, const AffElement&) = default;
};

/// sum_i (A x + a)_i d/dx_i.
VectorField embed(const AffElement& u);

/// Inverse of embed on fields with affine components; empty otherwise.
std::optional<AffElement> extract_affine(const VectorField& delta);

/// The bracket transported from vector fields through embed. With this
/// convention [(a, A), (b, B)] = (B a - A b, B A - A B).
AffElement aff_bracket(const AffElement& u, const AffElement& v);

/// The standard basis of sl_n: E_ij for i != j in row-major order, followed
/// by the diagonal differences E_kk - E_{k+1,k+1}.
std::vector<RationalMatrix> sl_basis(std::size_t n);

/// Coordinates of a traceless matrix in sl_basis(n).
RationalVector sl_coordinates(const RationalMatrix& a);

/// A linear map sl_n -> Q^n given by its values on sl_basis(n).
class SlLinearMap {
 public:
  SlLinearMap(std::size_t n, std::vector<RationalVector> images);
  /// l(A) = A v.
  static SlLinearMap coboundary(const RationalVector& v);
  static SlLinearMap zero(std::size_t n);

  std::size_t dimension() const noexcept { return n_; }
  const std::vector<RationalVector>& images() const noexcept { return images_; }
  RationalVector operator()(const RationalMatrix& a) const;

 private:
  std::size_t n_;
  std::vector<RationalVector> images_;
};

struct CocycleResult {
  bool is_cocycle;
  // Basis indices (into sl_basis) of the first pair violating
  // l([A, B]) = A l(B) - B l(A).
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

CocycleResult cocycle_check(const SlLinearMap& l);

/// v with l(A) = A v on all of sl_n. Throws DomainError("not-a-cocycle")
/// when the system is inconsistent.
RationalVector coboundary_solve(const SlLinearMap& l);

}  // namespace pvf
