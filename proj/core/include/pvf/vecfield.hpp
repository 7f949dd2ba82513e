#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pvf/poly.hpp"

namespace pvf {

/// A polynomial vector field sum_i f_i d/dx_i, i.e. a derivation of K[x_1..x_n].
class VectorField {
 public:
  explicit VectorField(std::size_t n);
  // Every component must have dimension components.size().
  explicit VectorField(std::vector<Poly> components);

  // d/dx_i (0-based).
  static VectorField coordinate(std::size_t n, std::size_t i);
  // f * d/dx_i.
  static VectorField scaled_coordinate(const Poly& f, std::size_t i);

  std::size_t dimension() const noexcept { return components_.size(); }
  const std::vector<Poly>& components() const noexcept { return components_; }
  const Poly& operator[](std::size_t i) const { return components_[i]; }
  bool is_zero() const;
  // Largest component degree (Poly::kZeroDegree for the zero field).
  int degree() const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(const Rational& c);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const Rational& c) { return a *= c; }
  friend VectorField operator*(const Rational& c, VectorField a) { return a *= c; }
  // Module structure over K[x].
  friend VectorField operator*(const Poly& f, const VectorField& v);

  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  std::vector<Poly> components_;
};

/// delta(f) = sum_i delta_i * df/dx_i.
Poly apply(const VectorField& delta, const Poly& f);

/// Lie bracket; component k is delta(eta_k) - eta(delta_k).
VectorField bracket(const VectorField& delta, const VectorField& eta);

Poly divergence(const VectorField& delta);
bool is_divergence_free(const VectorField& delta);
bool has_constant_divergence(const VectorField& delta);

/// E = sum_i x_i d/dx_i.
VectorField euler_field(std::size_t n);

/// Splitting of a constant-divergence field along VF^c = VF^0 + K*E.
struct VfcSplit {
  VectorField divergence_free;
  Rational euler_coefficient;
};
/// Empty when the divergence is not constant.
std::optional<VfcSplit> decompose_vfc(const VectorField& delta);

/// Substitutes a map into each component: (delta o phi)_i = delta_i(phi).
VectorField compose(const VectorField& delta, std::span<const Poly> images);

// Grading: a field is homogeneous of degree d when every component is a
// homogeneous polynomial of degree d + 1. Translations have degree -1,
// linear fields degree 0.

/// Part of delta of degree d (d >= -1).
VectorField graded_component(const VectorField& delta, int d);
/// Degree of a nonzero homogeneous field; empty otherwise.
std::optional<int> homogeneous_degree(const VectorField& delta);

/// A homogeneous piece of VF(A^n) (or a subspace of it) with a chosen basis.
struct GradedPiece {
  int degree;
  std::vector<VectorField> basis;
};

/// Monomial basis x^m d/dx_i of VF_d, ordered by i then descending grlex m.
GradedPiece graded_basis(std::size_t n, int d);
/// Basis of the divergence-free fields VF^0_d (kernel of Div on VF_d).
GradedPiece divergence_free_basis(std::size_t n, int d);
/// Basis of VF^c_d: equals VF^0_d, plus E when d = 0.
GradedPiece constant_divergence_basis(std::size_t n, int d);

/// Coordinates of a field of degree d in the monomial basis of VF_d.
/// Throws std::invalid_argument if delta has parts of other degrees.
std::vector<Rational> graded_coordinates(const VectorField& delta, int d);

struct Nilpotent {
  unsigned order;
  friend bool operator==(const Nilpotent&, const Nilpotent&) = default;
};
struct NilpotenceUnknown {
  unsigned cap;
  friend bool operator==(const NilpotenceUnknown&, const NilpotenceUnknown&) = default;
};
using NilpotenceVerdict = std::variant<Nilpotent, NilpotenceUnknown>;

/// Iterates delta on every coordinate function. Nilpotent(m) means
/// delta^m(x_i) = 0 for all i with m minimal, found within `cap` iterations;
/// by the Leibniz rule this makes delta locally nilpotent. Never claims the
/// opposite: exhausting the cap yields NilpotenceUnknown.
NilpotenceVerdict nilpotence_probe(const VectorField& delta, unsigned cap);

/// Rank over K(x_1..x_n) of the matrix whose rows are the fields' components.
int module_rank(std::span<const VectorField> fields);

struct DerivedSpanReport {
  std::size_t n;
  int degree;
  int source_bound;
  std::size_t target_dimension;  // dim VF^0_d
  std::size_t span_dimension;    // rank of the brackets landing in degree d
  std::size_t brackets_used;
  bool full() const noexcept { return span_dimension == target_dimension; }
};

/// Checks at truncated degree whether brackets [u, v] with u in VF^c_e1,
/// v in VF^c_e2, e1 + e2 = d and -1 <= e1, e2 <= source_bound span VF^0_d.
DerivedSpanReport derived_span_check(std::size_t n, int d, int source_bound);

}  // namespace pvf
