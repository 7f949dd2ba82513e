#include "pvf/morphism.hpp"

#include <stdexcept>
#include <string>

namespace pvf {

PolyMap::PolyMap(std::vector<Poly> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("dimension must be positive");
  for (const auto& c : components_) check_dimension(components_.size(), c.dimension());
}

PolyMap PolyMap::identity(std::size_t n) {
  std::vector<Poly> components;
  for (std::size_t i = 0; i < n; ++i) components.push_back(Poly::variable(n, i));
  return PolyMap(std::move(components));
}

PolyMap compose_maps(const PolyMap& first, const PolyMap& second) {
  check_dimension(first.dimension(), second.dimension());
  std::vector<Poly> components;
  for (const auto& c : second.components()) components.push_back(compose(c, first.components()));
  return PolyMap(std::move(components));
}

PolyMatrix jacobian(const PolyMap& phi) {
  const std::size_t n = phi.dimension();
  PolyMatrix jac(n, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) jac(k, j) = partial_derive(phi[k], j);
  }
  return jac;
}

std::optional<Rational> is_etale(const PolyMap& phi) {
  auto c = determinant(jacobian(phi)).constant_value();
  if (!c || *c == 0) return std::nullopt;
  return c;
}

NotEtale::NotEtale(Poly jacobian_determinant)
    : DomainError("not-etale", "map is not etale: Jacobian determinant is not a nonzero constant"),
      det_(std::move(jacobian_determinant)) {}

VectorField pullback(const PolyMap& phi, const VectorField& delta) {
  check_dimension(phi.dimension(), delta.dimension());
  auto [det, adj] = det_and_adjugate(jacobian(phi));
  const auto c = det.constant_value();
  if (!c || *c == 0) throw NotEtale(std::move(det));
  std::vector<Poly> moved = compose(delta, phi.components()).components();
  std::vector<Poly> solution = adj * moved;
  const Rational inv = 1 / *c;
  for (auto& s : solution) s *= inv;
  return VectorField(std::move(solution));
}

namespace {

void validate_letter(std::size_t n, const AutLetter& letter) {
  if (const auto* a = std::get_if<AffineLetter>(&letter)) {
    if (a->linear.rows() != n || a->linear.cols() != n || a->translation.size() != n) {
      throw DimensionMismatch(n, a->linear.rows());
    }
    if (determinant(a->linear) == 0) {
      throw DomainError("singular-letter", "affine letter has a singular linear part");
    }
  } else {
    const auto& e = std::get<ElementaryLetter>(letter);
    check_dimension(n, e.shift.dimension());
    if (e.index >= n) throw std::out_of_range("elementary letter index out of range");
    if (e.shift.involves(e.index)) {
      throw DomainError("invalid-letter", "elementary letter shift for x_" +
                                              std::to_string(e.index + 1) +
                                              " must not involve that variable");
    }
  }
}

}  // namespace

AutWord::AutWord(std::size_t n, std::vector<AutLetter> letters) : n_(n) {
  for (auto& l : letters) append(std::move(l));
}

AutWord& AutWord::append(AutLetter letter) {
  validate_letter(n_, letter);
  letters_.push_back(std::move(letter));
  return *this;
}

AutWord AutWord::inverse() const {
  AutWord inv(n_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    inv.letters_.push_back(invert_letter(*it));
  }
  return inv;
}

AutWord operator*(const AutWord& a, const AutWord& b) {
  check_dimension(a.n_, b.n_);
  AutWord w = a;
  w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
  return w;
}

AutLetter invert_letter(const AutLetter& letter) {
  if (const auto* a = std::get_if<AffineLetter>(&letter)) {
    auto g_inv = inverse(a->linear);
    if (!g_inv) throw DomainError("singular-letter", "affine letter has a singular linear part");
    RationalVector b = -(*g_inv * a->translation);
    return AffineLetter{std::move(*g_inv), std::move(b)};
  }
  const auto& e = std::get<ElementaryLetter>(letter);
  return ElementaryLetter{e.index, -e.shift};
}

PolyMap letter_map(std::size_t n, const AutLetter& letter) {
  validate_letter(n, letter);
  std::vector<Poly> components;
  if (const auto* a = std::get_if<AffineLetter>(&letter)) {
    for (std::size_t i = 0; i < n; ++i) {
      Poly c = Poly::constant(n, a->translation[i]);
      for (std::size_t j = 0; j < n; ++j) c += Poly::variable(n, j) * a->linear(i, j);
      components.push_back(std::move(c));
    }
  } else {
    const auto& e = std::get<ElementaryLetter>(letter);
    for (std::size_t i = 0; i < n; ++i) {
      components.push_back(i == e.index ? Poly::variable(n, i) + e.shift : Poly::variable(n, i));
    }
  }
  return PolyMap(std::move(components));
}

PolyMap materialize(const AutWord& w) {
  PolyMap result = PolyMap::identity(w.dimension());
  // l_1 o ... o l_k: the rightmost letter acts first, so fold from the right.
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    result = compose_maps(result, letter_map(w.dimension(), *it));
  }
  return result;
}

VectorField ad_action(const AutWord& w, const VectorField& delta) {
  check_dimension(w.dimension(), delta.dimension());
  return pullback(materialize(w.inverse()), delta);
}

TraceAdjugateCheck trace_adjugate_check(const PolyMatrix& a, std::size_t t) {
  if (!a.is_square()) throw std::invalid_argument("trace_adjugate_check needs a square matrix");
  if (t >= a.dimension()) throw std::out_of_range("variable index out of range");
  auto [det, adj] = det_and_adjugate(a);
  Poly trace_side = (partial_derive(a, t) * adj).trace();
  Poly det_side = partial_derive(det, t);
  const bool holds = trace_side == det_side;
  return {holds, std::move(trace_side), std::move(det_side)};
}

}  // namespace pvf
