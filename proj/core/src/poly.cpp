#include "pvf/poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace pvf {

// --- Monomial ---------------------------------------------------------------

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent power) {
  if (i >= n) throw std::out_of_range("variable index out of range");
  Monomial m(n);
  m.exps_[i] = power;
  return m;
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  check_dimension(dimension(), other.dimension());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_dimension(dimension(), other.dimension());
  Monomial p = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) p.exps_[i] += other.exps_[i];
  return p;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  if (!divides(other)) throw std::invalid_argument("monomial does not divide");
  Monomial q = other;
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= exps_[i];
  return q;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exps_ <=> b.exps_;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned degree) {
  std::vector<Monomial> out;
  Monomial current(n);
  // Assigning exponents from x_1 down in decreasing order yields descending lex.
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      current[i] = left;
      out.push_back(current);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      current[i] = e;
      fill(i + 1, left - e);
    }
  };
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  fill(0, degree);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t n, unsigned degree) {
  std::vector<Monomial> out;
  for (unsigned d = degree + 1; d-- > 0;) {
    auto part = monomials_of_degree(n, d);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

// --- Poly -------------------------------------------------------------------

namespace {

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<Poly::Term> drain_sorted(Accumulator& acc) {
  std::vector<Poly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.emplace_back(m, std::move(c));
  }
  std::sort(terms.begin(), terms.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return a.first > b.first; });
  return terms;
}

}  // namespace

Poly Poly::constant(std::size_t n, const Rational& c) {
  Poly p(n);
  if (c != 0) p.terms_.emplace_back(Monomial(n), c);
  return p;
}

Poly Poly::variable(std::size_t n, std::size_t i) {
  return term(Monomial::variable(n, i), Rational(1));
}

Poly Poly::term(Monomial m, const Rational& c) {
  Poly p(m.dimension());
  if (c != 0) p.terms_.emplace_back(std::move(m), c);
  return p;
}

Poly Poly::from_terms(std::size_t n, std::vector<Term> terms) {
  Accumulator acc;
  for (auto& [m, c] : terms) {
    check_dimension(n, m.dimension());
    acc[std::move(m)] += c;
  }
  return Poly(n, drain_sorted(acc));
}

int Poly::degree() const noexcept {
  int d = kZeroDegree;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.front().first.is_one()) return terms_.front().second;
  return std::nullopt;
}

Rational Poly::coefficient(const Monomial& m) const {
  check_dimension(n_, m.dimension());
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

const Poly::Term& Poly::leading_term() const {
  if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
  return terms_.front();
}

Monomial::Exponent Poly::degree_in(std::size_t i) const {
  if (i >= n_) throw std::out_of_range("variable index out of range");
  Monomial::Exponent d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
  return d;
}

Poly Poly::homogeneous_part(unsigned d) const {
  std::vector<Term> part;
  for (const auto& t : terms_) {
    if (t.first.degree() == d) part.push_back(t);
  }
  return Poly(n_, std::move(part));
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  check_dimension(n_, point.size());
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (std::size_t i = 0; i < n_; ++i) {
      for (Monomial::Exponent e = 0; e < m[i]; ++e) value *= point[i];
    }
    sum += value;
  }
  return sum;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly& Poly::add_scaled(const Poly& other, const Rational& scale) {
  check_dimension(n_, other.n_);
  if (scale == 0 || other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first > b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first > a->first) {
      merged.emplace_back(b->first, b->second * scale);
      ++b;
    } else {
      Rational c = a->second + b->second * scale;
      if (c != 0) merged.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator+=(const Poly& other) { return add_scaled(other, Rational(1)); }
Poly& Poly::operator-=(const Poly& other) { return add_scaled(other, Rational(-1)); }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly operator*(const Poly& a, const Poly& b) {
  check_dimension(a.n_, b.n_);
  if (a.is_zero() || b.is_zero()) return Poly(a.n_);
  if (b.terms_.size() == 1) {
    const auto& [bm, bc] = b.terms_.front();
    std::vector<Poly::Term> terms;
    terms.reserve(a.terms_.size());
    // Multiplying by a single monomial preserves the term order.
    for (const auto& [m, c] : a.terms_) terms.emplace_back(m * bm, c * bc);
    return Poly(a.n_, std::move(terms));
  }
  if (a.terms_.size() == 1) return b * a;
  Accumulator acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  }
  return Poly(a.n_, drain_sorted(acc));
}

Poly pow(const Poly& p, unsigned e) {
  Poly result = Poly::constant(p.dimension(), 1);
  Poly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly partial_derive(const Poly& p, std::size_t i) {
  if (i >= p.dimension()) throw std::out_of_range("variable index out of range");
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    if (m[i] == 0) continue;
    Monomial dm = m;
    dm[i] -= 1;
    terms.emplace_back(std::move(dm), c * m[i]);
  }
  return Poly::from_terms(p.dimension(), std::move(terms));
}

Poly integrate(const Poly& p, std::size_t i) {
  if (i >= p.dimension()) throw std::out_of_range("variable index out of range");
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    Monomial im = m;
    im[i] += 1;
    terms.emplace_back(std::move(im), c / im[i]);
  }
  return Poly::from_terms(p.dimension(), std::move(terms));
}

Poly compose(const Poly& p, std::span<const Poly> images) {
  check_dimension(p.dimension(), images.size());
  if (images.empty()) return p;
  const std::size_t target_n = images.front().dimension();
  for (const auto& img : images) check_dimension(target_n, img.dimension());

  // powers[i][e] = images[i]^e, filled lazily.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, Monomial::Exponent e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target_n, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Accumulator acc;
  for (const auto& [m, c] : p.terms()) {
    Poly value = Poly::constant(target_n, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (m[i] > 0) value = value * power(i, m[i]);
    }
    for (const auto& [vm, vc] : value.terms()) acc[vm] += vc;
  }
  return Poly::from_terms(target_n, drain_sorted(acc));
}

std::optional<Poly> divides(const Poly& f, const Poly& g) {
  check_dimension(f.dimension(), g.dimension());
  if (f.is_zero()) throw std::invalid_argument("divides: divisor is zero");
  const std::size_t n = f.dimension();
  if (g.is_zero()) return Poly(n);
  const int bound = g.degree() - f.degree();
  if (bound < 0) return std::nullopt;
  const auto& [f_lead, f_lc] = f.leading_term();
  if (!f_lead.divides(g.leading_term().first)) return std::nullopt;

  // Unknowns: coefficients q_m for every monomial m of degree <= bound. The
  // column of q_m is m*f, whose lowest-ordered row in grlex is m*LM(f); those
  // rows are distinct, so the system is triangular and solved by substitution
  // from the largest unknown down. Whatever is left in `residual` at the end
  // is the inconsistency.
  Poly residual = g;
  std::vector<Poly::Term> quotient;
  for (const auto& m : monomials_up_to_degree(n, static_cast<unsigned>(bound))) {
    const Rational r = residual.coefficient(f_lead * m);
    if (r == 0) continue;
    const Rational qm = r / f_lc;
    residual -= Poly::term(m, qm) * f;
    quotient.emplace_back(m, qm);
  }
  if (!residual.is_zero()) return std::nullopt;
  return Poly::from_terms(n, std::move(quotient));
}

NotClosed::NotClosed(std::size_t i, std::size_t j)
    : DomainError("not-closed", "one-form is not closed: dh_" + std::to_string(i + 1) +
                                    "/dx_" + std::to_string(j + 1) + " != dh_" +
                                    std::to_string(j + 1) + "/dx_" + std::to_string(i + 1)),
      i_(i),
      j_(j) {}

Poly potential_of_closed_form(std::span<const Poly> h) {
  if (h.empty()) throw std::invalid_argument("empty one-form");
  const std::size_t n = h.size();
  for (const auto& hi : h) check_dimension(n, hi.dimension());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (partial_derive(h[i], j) != partial_derive(h[j], i)) throw NotClosed(i, j);
    }
  }
  Poly f = integrate(h[0], 0);
  for (std::size_t k = 1; k < n; ++k) {
    // For a closed form the correction does not involve x_1..x_{k-1}.
    f += integrate(h[k] - partial_derive(f, k), k);
  }
  return f;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.leading_term().second);
}

namespace {

// Coefficient of x_v^k, as a polynomial not involving x_v.
Poly coefficient_in(const Poly& p, std::size_t v, Monomial::Exponent k) {
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    if (m[v] != k) continue;
    Monomial reduced = m;
    reduced[v] = 0;
    terms.emplace_back(std::move(reduced), c);
  }
  return Poly::from_terms(p.dimension(), std::move(terms));
}

std::optional<std::size_t> main_variable(const Poly& a, const Poly& b) {
  for (std::size_t v = a.dimension(); v-- > 0;) {
    if (a.involves(v) || b.involves(v)) return v;
  }
  return std::nullopt;
}

Poly exact_quotient(const Poly& divisor, const Poly& dividend) {
  auto q = divides(divisor, dividend);
  if (!q) throw std::logic_error("gcd: inexact division");
  return *q;
}

Poly content_in(const Poly& p, std::size_t v) {
  Poly c(p.dimension());
  for (Monomial::Exponent k = 0; k <= p.degree_in(v); ++k) {
    c = gcd(c, coefficient_in(p, v, k));
    if (!c.is_zero() && c.is_constant()) break;
  }
  return c;
}

Poly pseudo_remainder(Poly a, const Poly& b, std::size_t v) {
  const auto db = b.degree_in(v);
  const Poly lcb = coefficient_in(b, v, db);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const auto da = a.degree_in(v);
    const Poly lca = coefficient_in(a, v, da);
    a = lcb * a - lca * Poly::term(Monomial::variable(a.dimension(), v, da - db), 1) * b;
  }
  return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  check_dimension(a.dimension(), b.dimension());
  const std::size_t n = a.dimension();
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(n, 1);
  const std::size_t v = *main_variable(a, b);
  if (!a.involves(v)) return gcd(a, content_in(b, v));
  if (!b.involves(v)) return gcd(content_in(a, v), b);

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  Poly pa = exact_quotient(ca, a);
  Poly pb = exact_quotient(cb, b);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? std::move(r) : make_monic(exact_quotient(content_in(r, v), r));
  }
  if (pa.degree_in(v) == 0) pa = Poly::constant(n, 1);
  return make_monic(gcd(ca, cb) * exact_quotient(content_in(pa, v), pa));
}

}  // namespace pvf
