#include "pvf/vecfield.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pvf/linalg.hpp"
#include "pvf/poly_matrix.hpp"

namespace pvf {

VectorField::VectorField(std::size_t n) : components_(n, Poly(n)) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
}

VectorField::VectorField(std::vector<Poly> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("dimension must be positive");
  for (const auto& c : components_) check_dimension(components_.size(), c.dimension());
}

VectorField VectorField::coordinate(std::size_t n, std::size_t i) {
  return scaled_coordinate(Poly::constant(n, 1), i);
}

VectorField VectorField::scaled_coordinate(const Poly& f, std::size_t i) {
  VectorField v(f.dimension());
  if (i >= v.dimension()) throw std::out_of_range("variable index out of range");
  v.components_[i] = f;
  return v;
}

bool VectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

int VectorField::degree() const {
  int d = Poly::kZeroDegree;
  for (const auto& c : components_) d = std::max(d, c.degree());
  return d;
}

VectorField VectorField::operator-() const {
  VectorField v = *this;
  for (auto& c : v.components_) c = -c;
  return v;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  check_dimension(dimension(), other.dimension());
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  check_dimension(dimension(), other.dimension());
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= other.components_[i];
  return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
  for (auto& p : components_) p *= c;
  return *this;
}

VectorField operator*(const Poly& f, const VectorField& v) {
  check_dimension(v.dimension(), f.dimension());
  VectorField out = v;
  for (auto& c : out.components_) c = f * c;
  return out;
}

Poly apply(const VectorField& delta, const Poly& f) {
  check_dimension(delta.dimension(), f.dimension());
  Poly result(f.dimension());
  for (std::size_t i = 0; i < delta.dimension(); ++i) {
    if (delta[i].is_zero() || !f.involves(i)) continue;
    result += delta[i] * partial_derive(f, i);
  }
  return result;
}

VectorField bracket(const VectorField& delta, const VectorField& eta) {
  check_dimension(delta.dimension(), eta.dimension());
  std::vector<Poly> components;
  components.reserve(delta.dimension());
  for (std::size_t k = 0; k < delta.dimension(); ++k) {
    components.push_back(apply(delta, eta[k]) - apply(eta, delta[k]));
  }
  return VectorField(std::move(components));
}

Poly divergence(const VectorField& delta) {
  Poly div(delta.dimension());
  for (std::size_t i = 0; i < delta.dimension(); ++i) div += partial_derive(delta[i], i);
  return div;
}

bool is_divergence_free(const VectorField& delta) { return divergence(delta).is_zero(); }

bool has_constant_divergence(const VectorField& delta) {
  return divergence(delta).is_constant();
}

VectorField euler_field(std::size_t n) {
  std::vector<Poly> components;
  for (std::size_t i = 0; i < n; ++i) components.push_back(Poly::variable(n, i));
  return VectorField(std::move(components));
}

std::optional<VfcSplit> decompose_vfc(const VectorField& delta) {
  const auto c = divergence(delta).constant_value();
  if (!c) return std::nullopt;
  const Rational share = *c / static_cast<long>(delta.dimension());
  return VfcSplit{delta - euler_field(delta.dimension()) * share, share};
}

VectorField compose(const VectorField& delta, std::span<const Poly> images) {
  std::vector<Poly> components;
  for (const auto& c : delta.components()) components.push_back(compose(c, images));
  return VectorField(std::move(components));
}

VectorField graded_component(const VectorField& delta, int d) {
  if (d < -1) throw std::invalid_argument("graded degree must be >= -1");
  std::vector<Poly> components;
  for (const auto& c : delta.components()) {
    components.push_back(c.homogeneous_part(static_cast<unsigned>(d + 1)));
  }
  return VectorField(std::move(components));
}

std::optional<int> homogeneous_degree(const VectorField& delta) {
  std::optional<unsigned> poly_degree;
  for (const auto& c : delta.components()) {
    for (const auto& [m, coeff] : c.terms()) {
      if (poly_degree && *poly_degree != m.degree()) return std::nullopt;
      poly_degree = m.degree();
    }
  }
  if (!poly_degree) return std::nullopt;
  return static_cast<int>(*poly_degree) - 1;
}

namespace {

void check_graded_args(std::size_t n, int d) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  if (d < -1) throw std::invalid_argument("graded degree must be >= -1");
}

VectorField field_from_coordinates(std::size_t n, int d, const std::vector<Rational>& coords) {
  const auto mons = monomials_of_degree(n, static_cast<unsigned>(d + 1));
  std::vector<Poly> components;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Poly::Term> terms;
    for (std::size_t k = 0; k < mons.size(); ++k) {
      const auto& c = coords[i * mons.size() + k];
      if (c != 0) terms.emplace_back(mons[k], c);
    }
    components.push_back(Poly::from_terms(n, std::move(terms)));
  }
  return VectorField(std::move(components));
}

}  // namespace

GradedPiece graded_basis(std::size_t n, int d) {
  check_graded_args(n, d);
  GradedPiece piece{d, {}};
  const auto mons = monomials_of_degree(n, static_cast<unsigned>(d + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& m : mons) {
      piece.basis.push_back(VectorField::scaled_coordinate(Poly::term(m, 1), i));
    }
  }
  return piece;
}

std::vector<Rational> graded_coordinates(const VectorField& delta, int d) {
  const std::size_t n = delta.dimension();
  check_graded_args(n, d);
  const auto mons = monomials_of_degree(n, static_cast<unsigned>(d + 1));
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < mons.size(); ++k) index.emplace(mons[k], k);
  std::vector<Rational> coords(n * mons.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [m, c] : delta[i].terms()) {
      auto it = index.find(m);
      if (it == index.end()) throw std::invalid_argument("field is not homogeneous of degree d");
      coords[i * mons.size() + it->second] = c;
    }
  }
  return coords;
}

GradedPiece divergence_free_basis(std::size_t n, int d) {
  check_graded_args(n, d);
  if (d == -1) return graded_basis(n, d);
  const auto full = graded_basis(n, d);
  const auto targets = monomials_of_degree(n, static_cast<unsigned>(d));
  std::map<Monomial, std::size_t> row_of;
  for (std::size_t r = 0; r < targets.size(); ++r) row_of.emplace(targets[r], r);
  RationalMatrix div(targets.size(), full.basis.size());
  for (std::size_t c = 0; c < full.basis.size(); ++c) {
    const Poly div_c = divergence(full.basis[c]);
    for (const auto& [m, coeff] : div_c.terms()) {
      div(row_of.at(m), c) = coeff;
    }
  }
  GradedPiece piece{d, {}};
  for (const auto& v : kernel_basis(div)) piece.basis.push_back(field_from_coordinates(n, d, v));
  return piece;
}

GradedPiece constant_divergence_basis(std::size_t n, int d) {
  auto piece = divergence_free_basis(n, d);
  if (d == 0) piece.basis.push_back(euler_field(n));
  return piece;
}

NilpotenceVerdict nilpotence_probe(const VectorField& delta, unsigned cap) {
  if (cap == 0) throw std::invalid_argument("nilpotence cap must be positive");
  const std::size_t n = delta.dimension();
  unsigned order = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Poly f = Poly::variable(n, i);
    unsigned m = 0;
    while (!f.is_zero()) {
      if (m == cap) return NilpotenceUnknown{cap};
      f = apply(delta, f);
      ++m;
    }
    order = std::max(order, m);
  }
  return Nilpotent{order};
}

int module_rank(std::span<const VectorField> fields) {
  if (fields.empty()) throw std::invalid_argument("module_rank of an empty family");
  std::vector<std::vector<Poly>> rows;
  for (const auto& f : fields) {
    check_dimension(fields.front().dimension(), f.dimension());
    rows.push_back(f.components());
  }
  return rank_over_fractions(PolyMatrix::from_rows(std::move(rows)));
}

DerivedSpanReport derived_span_check(std::size_t n, int d, int source_bound) {
  if (n < 2) throw std::invalid_argument("derived_span_check needs n >= 2");
  if (d < -1 || d > source_bound) {
    throw std::invalid_argument("derived_span_check needs -1 <= d <= source bound");
  }
  const std::size_t target = divergence_free_basis(n, d).basis.size();
  DerivedSpanReport report{n, d, source_bound, target, 0, 0};
  EchelonBasis span(graded_basis(n, d).basis.size());

  for (int e1 = -1; e1 <= source_bound && span.rank() < target; ++e1) {
    const int e2 = d - e1;
    if (e2 < e1 || e2 > source_bound) continue;
    const auto left = constant_divergence_basis(n, e1).basis;
    const auto right = e1 == e2 ? left : constant_divergence_basis(n, e2).basis;
    for (std::size_t a = 0; a < left.size() && span.rank() < target; ++a) {
      for (std::size_t b = (e1 == e2 ? a + 1 : 0); b < right.size(); ++b) {
        VectorField br = bracket(left[a], right[b]);
        ++report.brackets_used;
        if (br.is_zero()) continue;
        if (!is_divergence_free(br)) {
          throw std::logic_error("bracket of VF^c fields left VF^0");
        }
        span.insert(graded_coordinates(br, d));
        if (span.rank() == target) break;
      }
    }
  }
  report.span_dimension = span.rank();
  return report;
}

}  // namespace pvf
