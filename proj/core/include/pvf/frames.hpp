#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pvf/errors.hpp"
#include "pvf/morphism.hpp"
#include "pvf/poly_matrix.hpp"
#include "pvf/vecfield.hpp"

namespace pvf {

class NotCommuting : public DomainError {
 public:
  NotCommuting(std::size_t i, std::size_t j, VectorField bracket);
  // 0-based indices with i < j, and the nonzero bracket [xi_i, xi_j].
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }
  const VectorField& bracket() const noexcept { return bracket_; }

 private:
  std::size_t i_;
  std::size_t j_;
  VectorField bracket_;
};

class LinearlyDependent : public DomainError {
 public:
  explicit LinearlyDependent(std::vector<Rational> combination);
  // Nontrivial rational coefficients c with sum_i c_i xi_i = 0.
  const std::vector<Rational>& combination() const noexcept { return combination_; }

 private:
  std::vector<Rational> combination_;
};

/// n pairwise commuting, K-linearly independent vector fields on A^n.
class Frame {
 public:
  /// Validates the family. Throws DomainError("wrong-count"), NotCommuting or
  /// LinearlyDependent.
  static Frame make(std::vector<VectorField> fields);

  std::size_t dimension() const noexcept { return fields_.size(); }
  const std::vector<VectorField>& fields() const noexcept { return fields_; }
  const VectorField& operator[](std::size_t i) const { return fields_[i]; }

 private:
  explicit Frame(std::vector<VectorField> fields) : fields_(std::move(fields)) {}
  std::vector<VectorField> fields_;
};

/// Throws NotCommuting for the first pair (in index order) with a nonzero bracket.
void require_commuting(std::span<const VectorField> fields);
/// Throws LinearlyDependent when some nontrivial Q-combination vanishes.
void require_linearly_independent(std::span<const VectorField> fields);

/// Row i lists the components of field i.
PolyMatrix component_matrix(std::span<const VectorField> fields);
inline PolyMatrix component_matrix(const Frame& fr) { return component_matrix(fr.fields()); }

/// Flat coordinates f_1..f_n with xi_i(f_j) = delta_ij and zero constant
/// terms. Requires det(component matrix) to be a nonzero constant; throws
/// DomainError("condition-ii-fails") otherwise.
std::vector<Poly> solve_flat_coordinates(const Frame& fr);

/// Expresses each coordinate field in the frame: row i of the result holds
/// the polynomial coefficients with d/dx_i = sum_k c_ik xi_k.
/// Same precondition as solve_flat_coordinates.
PolyMatrix coordinate_fields_in_frame(const Frame& fr);

/// A common Darboux polynomial of n commuting fields on A^n, decided through
/// the determinant of the component matrix. Empty when none exists. Accepts
/// raw lists: the fields must commute and be K-linearly independent but may
/// be dependent over K[x].
std::optional<Poly> darboux_decide(std::span<const VectorField> fields);

/// True when every xi_i(f) is divisible by f and f is not constant.
bool is_common_darboux(std::span<const VectorField> fields, const Poly& f);

/// Brute-force search over nonconstant polynomials of degree <= max_degree
/// whose coefficients lie in `grid`, normalized to leading coefficient 1.
/// Candidates are scanned by degree, then by leading monomial from the
/// largest (x_1 first), then lexicographically on the remaining coefficients
/// with values ordered 0, 1, -1, 2, -2, ... (by absolute value, positive
/// first); the first common Darboux polynomial wins.
std::optional<Poly> darboux_oracle(std::span<const VectorField> fields, unsigned max_degree,
                                   std::span<const Rational> grid);

struct FrameReport {
  bool condition_ii;
  Poly determinant;
  std::optional<std::vector<Poly>> flat_coordinates;
  std::optional<PolyMap> reconstructed_map;
  std::optional<Poly> darboux_witness;
  int module_rank;
};

/// Evaluates the equivalent conditions for a frame: (ii) det of the
/// component matrix is a nonzero constant; (i)/(iii) the reconstructed
/// etale map and flat coordinates when (ii) holds; (iv) absence of a common
/// Darboux polynomial.
FrameReport equivalence_report(const Frame& fr);

}  // namespace pvf
