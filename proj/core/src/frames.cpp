#include "pvf/frames.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "pvf/linalg.hpp"

namespace pvf {

NotCommuting::NotCommuting(std::size_t i, std::size_t j, VectorField bracket)
    : DomainError("not-commuting", "fields " + std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1) + " do not commute"),
      i_(i),
      j_(j),
      bracket_(std::move(bracket)) {}

LinearlyDependent::LinearlyDependent(std::vector<Rational> combination)
    : DomainError("linearly-dependent", "fields are linearly dependent over K"),
      combination_(std::move(combination)) {}

namespace {

void require_square_family(std::span<const VectorField> fields) {
  if (fields.empty()) throw DomainError("wrong-count", "empty family of fields");
  const std::size_t n = fields.front().dimension();
  for (const auto& f : fields) check_dimension(n, f.dimension());
  if (fields.size() != n) {
    throw DomainError("wrong-count", "expected " + std::to_string(n) + " fields on A^" +
                                         std::to_string(n) + ", got " +
                                         std::to_string(fields.size()));
  }
}

bool is_nonzero_constant(const Poly& p) {
  auto c = p.constant_value();
  return c && *c != 0;
}

}  // namespace

void require_commuting(std::span<const VectorField> fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    for (std::size_t j = i + 1; j < fields.size(); ++j) {
      VectorField b = bracket(fields[i], fields[j]);
      if (!b.is_zero()) throw NotCommuting(i, j, std::move(b));
    }
  }
}

void require_linearly_independent(std::span<const VectorField> fields) {
  // One row per (component, monomial) occurring anywhere, one column per field.
  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
  for (const auto& f : fields) {
    for (std::size_t k = 0; k < f.dimension(); ++k) {
      for (const auto& [m, c] : f[k].terms()) row_of.try_emplace({k, m}, row_of.size());
    }
  }
  RationalMatrix coeffs(std::max<std::size_t>(row_of.size(), 1), fields.size());
  for (std::size_t col = 0; col < fields.size(); ++col) {
    for (std::size_t k = 0; k < fields[col].dimension(); ++k) {
      for (const auto& [m, c] : fields[col][k].terms()) coeffs(row_of.at({k, m}), col) = c;
    }
  }
  auto kernel = kernel_basis(coeffs);
  if (!kernel.empty()) throw LinearlyDependent(std::move(kernel.front()));
}

Frame Frame::make(std::vector<VectorField> fields) {
  require_square_family(fields);
  require_commuting(fields);
  require_linearly_independent(fields);
  return Frame(std::move(fields));
}

PolyMatrix component_matrix(std::span<const VectorField> fields) {
  std::vector<std::vector<Poly>> rows;
  for (const auto& f : fields) rows.push_back(f.components());
  return PolyMatrix::from_rows(std::move(rows));
}

PolyMatrix coordinate_fields_in_frame(const Frame& fr) {
  auto [det, adj] = det_and_adjugate(component_matrix(fr));
  const auto c = det.constant_value();
  if (!c || *c == 0) {
    throw DomainError("condition-ii-fails",
                      "determinant of the component matrix is not a nonzero constant");
  }
  const Rational inv = 1 / *c;
  for (std::size_t r = 0; r < adj.rows(); ++r) {
    for (std::size_t col = 0; col < adj.cols(); ++col) adj(r, col) *= inv;
  }
  return adj;
}

std::vector<Poly> solve_flat_coordinates(const Frame& fr) {
  const PolyMatrix inv = coordinate_fields_in_frame(fr);
  const std::size_t n = fr.dimension();
  std::vector<Poly> flat;
  for (std::size_t k = 0; k < n; ++k) {
    // Column k is the gradient of f_k; commuting fields make it closed.
    std::vector<Poly> gradient;
    for (std::size_t i = 0; i < n; ++i) gradient.push_back(inv(i, k));
    flat.push_back(potential_of_closed_form(gradient));
  }
  return flat;
}

bool is_common_darboux(std::span<const VectorField> fields, const Poly& f) {
  if (f.is_constant()) return false;
  return std::all_of(fields.begin(), fields.end(), [&](const VectorField& xi) {
    return divides(f, apply(xi, f)).has_value();
  });
}

namespace {

std::vector<std::size_t> first_subset(std::size_t k) {
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  return s;
}

bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
  const std::size_t k = s.size();
  for (std::size_t i = k; i-- > 0;) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  PolyMatrix s(rows.size(), cols.size(), m.dimension());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = m(rows[r], cols[c]);
  }
  return s;
}

// A primitive relation sum_i f_i row_i = 0 over K[x] between `rows` of m,
// where all but the last listed row are independent over K(x) and the
// whole list is dependent.
std::vector<Poly> syzygy(const PolyMatrix& m, const std::vector<std::size_t>& rows) {
  const std::size_t r = rows.size() - 1;
  const std::size_t n = m.dimension();
  if (r == 0) return {Poly::constant(n, 1)};  // the single row is zero
  const std::vector<std::size_t> head(rows.begin(), rows.end() - 1);
  auto cols = first_subset(r);
  do {
    if (!determinant(submatrix(m, head, cols)).is_zero()) break;
  } while (next_subset(cols, m.cols()));

  // Signed maximal minors of the (r+1) x r submatrix span its left kernel.
  std::vector<Poly> relation;
  for (std::size_t drop = 0; drop <= r; ++drop) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i <= r; ++i) {
      if (i != drop) kept.push_back(rows[i]);
    }
    Poly minor = determinant(submatrix(m, kept, cols));
    relation.push_back(drop % 2 == 0 ? std::move(minor) : -minor);
  }
  Poly common(n);
  for (const auto& f : relation) common = gcd(common, f);
  for (auto& f : relation) f = *divides(common, f);
  return relation;
}

}  // namespace

std::optional<Poly> darboux_decide(std::span<const VectorField> fields) {
  require_square_family(fields);
  require_commuting(fields);
  require_linearly_independent(fields);
  const PolyMatrix h = component_matrix(fields);
  const Poly det = determinant(h);

  if (is_nonzero_constant(det)) return std::nullopt;
  if (!det.is_zero()) {
    // xi_k(det) = Div(xi_k) * det for commuting fields.
    Poly witness = make_monic(det);
    if (!is_common_darboux(fields, witness)) {
      throw std::logic_error("determinant of a commuting family is not a Darboux polynomial");
    }
    return witness;
  }

  // Degenerate case: grow an independent set of rows until one is dependent.
  std::vector<std::size_t> rows;
  int current_rank = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    rows.push_back(i);
    const int r = rank_over_fractions(submatrix(h, rows, first_subset(h.cols())));
    if (r == current_rank) break;
    current_rank = r;
  }
  for (const auto& f : syzygy(h, rows)) {
    if (f.is_constant()) continue;
    Poly witness = make_monic(f);
    if (is_common_darboux(fields, witness)) return witness;
  }
  throw std::logic_error("relation of a commuting family yielded no Darboux polynomial");
}

std::optional<Poly> darboux_oracle(std::span<const VectorField> fields, unsigned max_degree,
                                   std::span<const Rational> grid) {
  if (fields.empty()) throw std::invalid_argument("darboux_oracle of an empty family");
  if (max_degree < 1) throw std::invalid_argument("darboux_oracle needs degree bound >= 1");
  for (long required : {0L, 1L, -1L}) {
    if (std::find(grid.begin(), grid.end(), Rational(required)) == grid.end()) {
      throw std::invalid_argument("coefficient grid must contain 0, 1 and -1");
    }
  }
  const std::size_t n = fields.front().dimension();
  for (const auto& f : fields) check_dimension(n, f.dimension());

  // Canonical scan order 0, 1, -1, 2, -2, ... so the result does not depend
  // on how the grid was listed.
  std::vector<Rational> values(grid.begin(), grid.end());
  std::sort(values.begin(), values.end(), [](const Rational& a, const Rational& b) {
    const Rational abs_a = abs(a), abs_b = abs(b);
    if (abs_a != abs_b) return abs_a < abs_b;
    return a > b;
  });
  values.erase(std::unique(values.begin(), values.end()), values.end());

  const auto all = monomials_up_to_degree(n, max_degree);
  for (unsigned d = 1; d <= max_degree; ++d) {
    for (const auto& lead : monomials_of_degree(n, d)) {
      std::vector<Monomial> rest;
      for (const auto& m : all) {
        if (m < lead) rest.push_back(m);
      }
      std::sort(rest.begin(), rest.end(), std::greater<>());
      std::vector<std::size_t> digit(rest.size(), 0);
      while (true) {
        std::vector<Poly::Term> terms{{lead, Rational(1)}};
        for (std::size_t k = 0; k < rest.size(); ++k) terms.emplace_back(rest[k], values[digit[k]]);
        Poly candidate = Poly::from_terms(n, std::move(terms));
        if (is_common_darboux(fields, candidate)) return candidate;
        // Odometer: the last coefficient varies fastest.
        std::size_t k = rest.size();
        while (k > 0 && ++digit[k - 1] == values.size()) digit[--k] = 0;
        if (k == 0) break;
      }
    }
  }
  return std::nullopt;
}

FrameReport equivalence_report(const Frame& fr) {
  const PolyMatrix h = component_matrix(fr);
  FrameReport report{false, determinant(h), std::nullopt, std::nullopt, std::nullopt,
                     module_rank(fr.fields())};
  report.condition_ii = is_nonzero_constant(report.determinant);
  if (report.condition_ii) {
    report.flat_coordinates = solve_flat_coordinates(fr);
    report.reconstructed_map = PolyMap(*report.flat_coordinates);
  }
  report.darboux_witness = darboux_decide(fr.fields());
  if (report.condition_ii == report.darboux_witness.has_value()) {
    throw std::logic_error("frame report: condition (ii) and (iv) disagree");
  }
  return report;
}

}  // namespace pvf
