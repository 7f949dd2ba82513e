#include "pvf/affine.hpp"

#include <stdexcept>

#include "pvf/errors.hpp"

namespace pvf {

VectorField embed(const AffElement& u) {
  const std::size_t n = u.dimension();
  if (u.linear.rows() != n || u.linear.cols() != n) throw DimensionMismatch(n, u.linear.rows());
  std::vector<Poly> components;
  for (std::size_t i = 0; i < n; ++i) {
    Poly c = Poly::constant(n, u.translation[i]);
    for (std::size_t j = 0; j < n; ++j) c += Poly::variable(n, j) * u.linear(i, j);
    components.push_back(std::move(c));
  }
  return VectorField(std::move(components));
}

std::optional<AffElement> extract_affine(const VectorField& delta) {
  const std::size_t n = delta.dimension();
  AffElement u{RationalVector(n), RationalMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (delta[i].degree() > 1) return std::nullopt;
    u.translation[i] = delta[i].coefficient(Monomial(n));
    for (std::size_t j = 0; j < n; ++j) u.linear(i, j) = delta[i].coefficient(Monomial::variable(n, j));
  }
  return u;
}

AffElement aff_bracket(const AffElement& u, const AffElement& v) {
  check_dimension(u.dimension(), v.dimension());
  return *extract_affine(bracket(embed(u), embed(v)));
}

std::vector<RationalMatrix> sl_basis(std::size_t n) {
  if (n < 2) throw std::invalid_argument("sl_n needs n >= 2");
  std::vector<RationalMatrix> basis;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      RationalMatrix e(n, n);
      e(i, j) = 1;
      basis.push_back(std::move(e));
    }
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    RationalMatrix h(n, n);
    h(k, k) = 1;
    h(k + 1, k + 1) = -1;
    basis.push_back(std::move(h));
  }
  return basis;
}

RationalVector sl_coordinates(const RationalMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("sl_coordinates needs a square matrix");
  if (a.trace() != 0) throw std::invalid_argument("matrix is not traceless");
  const std::size_t n = a.rows();
  RationalVector coords;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) coords.push_back(a(i, j));
    }
  }
  // diag(d) = sum_k c_k (E_kk - E_{k+1,k+1}) gives c_k = d_1 + ... + d_k.
  Rational running = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    running += a(k, k);
    coords.push_back(running);
  }
  return coords;
}

SlLinearMap::SlLinearMap(std::size_t n, std::vector<RationalVector> images)
    : n_(n), images_(std::move(images)) {
  if (n < 2) throw std::invalid_argument("sl_n needs n >= 2");
  if (images_.size() != n * n - 1) throw DimensionMismatch(n * n - 1, images_.size());
  for (const auto& v : images_) check_dimension(n, v.size());
}

SlLinearMap SlLinearMap::coboundary(const RationalVector& v) {
  const std::size_t n = v.size();
  std::vector<RationalVector> images;
  for (const auto& a : sl_basis(n)) images.push_back(a * v);
  return SlLinearMap(n, std::move(images));
}

SlLinearMap SlLinearMap::zero(std::size_t n) {
  return SlLinearMap(n, std::vector<RationalVector>(n * n - 1, RationalVector(n)));
}

RationalVector SlLinearMap::operator()(const RationalMatrix& a) const {
  const auto coords = sl_coordinates(a);
  RationalVector out(n_);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    for (std::size_t i = 0; i < n_; ++i) out[i] += coords[k] * images_[k][i];
  }
  return out;
}

CocycleResult cocycle_check(const SlLinearMap& l) {
  const auto basis = sl_basis(l.dimension());
  // Bilinear and antisymmetric in (A, B), so unordered basis pairs suffice.
  for (std::size_t p = 0; p < basis.size(); ++p) {
    for (std::size_t q = p + 1; q < basis.size(); ++q) {
      const auto& a = basis[p];
      const auto& b = basis[q];
      const RationalVector lhs = l(a * b - b * a);
      const RationalVector rhs = a * l.images()[q] - b * l.images()[p];
      if (lhs != rhs) return {false, std::make_pair(p, q)};
    }
  }
  return {true, std::nullopt};
}

RationalVector coboundary_solve(const SlLinearMap& l) {
  const std::size_t n = l.dimension();
  const auto basis = sl_basis(n);
  // Stack A_k v = l(A_k) over the basis: n (n^2 - 1) equations in n unknowns.
  RationalMatrix system(basis.size() * n, n);
  RationalVector rhs(basis.size() * n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) system(k * n + i, j) = basis[k](i, j);
      rhs[k * n + i] = l.images()[k][i];
    }
  }
  auto v = solve(system, rhs);
  if (!v) throw DomainError("not-a-cocycle", "l(A) = A v has no solution; l is not a cocycle");
  return *v;
}

}  // namespace pvf
