#include "pvf/poly_matrix.hpp"

#include "pvf/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>

namespace pvf {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t n)
    : rows_(rows), cols_(cols), n_(n), entries_(rows * cols, Poly(n)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("empty matrix");
}

PolyMatrix PolyMatrix::from_rows(std::vector<std::vector<Poly>> rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty matrix");
  const std::size_t cols = rows.front().size();
  const std::size_t n = rows.front().front().dimension();
  PolyMatrix m(rows.size(), cols, n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      check_dimension(n, rows[r][c].dimension());
      m(r, c) = std::move(rows[r][c]);
    }
  }
  return m;
}

PolyMatrix PolyMatrix::identity(std::size_t size, std::size_t n) {
  PolyMatrix m(size, size, n);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = Poly::constant(n, 1);
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, n_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Poly PolyMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Poly t(n_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
  check_dimension(a.n_, b.n_);
  PolyMatrix p(a.rows_, b.cols_, a.n_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  }
  return p;
}

std::vector<Poly> operator*(const PolyMatrix& a, const std::vector<Poly>& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("shape mismatch");
  std::vector<Poly> out(a.rows_, Poly(a.n_));
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      check_dimension(a.n_, v[j].dimension());
      if (!a(i, j).is_zero()) out[i] += a(i, j) * v[j];
    }
  }
  return out;
}

namespace {

// Laplace expansion along rows; state is (row, set of columns still free).
// Row is implied by the popcount of the used columns, so memoize on the mask.
class MinorExpander {
 public:
  MinorExpander(const PolyMatrix& m, std::vector<std::size_t> rows,
                std::vector<std::size_t> cols)
      : m_(m), rows_(std::move(rows)), cols_(std::move(cols)) {
    if (cols_.size() > 20) throw std::invalid_argument("matrix too large for cofactor expansion");
  }

  Poly det() { return expand(0, (std::uint32_t{1} << cols_.size()) - 1); }

 private:
  Poly expand(std::size_t depth, std::uint32_t free_cols) {
    if (depth == rows_.size()) return Poly::constant(m_.dimension(), 1);
    if (auto it = memo_.find(free_cols); it != memo_.end()) return it->second;
    Poly sum(m_.dimension());
    int sign = 1;
    for (std::size_t k = 0; k < cols_.size(); ++k) {
      if (!(free_cols & (std::uint32_t{1} << k))) continue;
      const Poly& entry = m_(rows_[depth], cols_[k]);
      if (!entry.is_zero()) {
        Poly term = entry * expand(depth + 1, free_cols & ~(std::uint32_t{1} << k));
        if (sign > 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      sign = -sign;
    }
    memo_.emplace(free_cols, sum);
    return sum;
  }

  const PolyMatrix& m_;
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> cols_;
  std::unordered_map<std::uint32_t, Poly> memo_;
};

std::vector<std::size_t> all_but(std::size_t size, std::size_t skip) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < size; ++i) {
    if (i != skip) idx.push_back(i);
  }
  return idx;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  return MinorExpander(m, all_but(m.rows(), m.rows()), all_but(m.cols(), m.cols())).det();
}

DetAdjugate det_and_adjugate(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("adjugate of non-square matrix");
  const std::size_t size = m.rows();
  PolyMatrix adj(size, size, m.dimension());
  if (size == 1) {
    adj(0, 0) = Poly::constant(m.dimension(), 1);
    return {m(0, 0), std::move(adj)};
  }
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      Poly minor = MinorExpander(m, all_but(size, r), all_but(size, c)).det();
      // Adj(m)(c, r) is the (r, c) cofactor.
      adj(c, r) = (r + c) % 2 == 0 ? std::move(minor) : -minor;
    }
  }
  // Expansion along the first row reuses the cofactors.
  Poly det(m.dimension());
  for (std::size_t c = 0; c < size; ++c) det += m(0, c) * adj(c, 0);
  return {std::move(det), std::move(adj)};
}

PolyMatrix partial_derive(const PolyMatrix& m, std::size_t i) {
  PolyMatrix d(m.rows(), m.cols(), m.dimension());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) d(r, c) = partial_derive(m(r, c), i);
  }
  return d;
}

namespace {

// Rank of m at a point; a lower bound for the rank over the fraction field.
std::size_t rank_at(const PolyMatrix& m, std::span<const Rational> point) {
  RationalMatrix values(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) values(r, c) = m(r, c).evaluate(point);
  }
  return rank(values);
}

}  // namespace

int rank_over_fractions(const PolyMatrix& m) {
  // A few fixed evaluation points settle the common full-rank case without
  // any polynomial arithmetic.
  const std::size_t full = std::min(m.rows(), m.cols());
  for (long shift = 0; shift < 3; ++shift) {
    std::vector<Rational> point;
    for (std::size_t i = 0; i < m.dimension(); ++i) {
      point.push_back(make_rational(static_cast<long>(2 + 3 * i) + 5 * shift, static_cast<long>(i + shift + 1)));
    }
    if (rank_at(m, point) == full) return static_cast<int>(full);
  }

  std::vector<std::vector<Poly>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Poly> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  int rank = 0;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    const auto& pivot_row = rows[next];
    for (std::size_t r = next + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Poly factor = rows[r][c];
      Poly content(m.dimension());
      for (std::size_t k = c; k < m.cols(); ++k) {
        rows[r][k] = pivot_row[c] * rows[r][k] - factor * pivot_row[k];
        content = gcd(content, rows[r][k]);
      }
      if (!content.is_zero() && !content.is_constant()) {
        for (std::size_t k = c; k < m.cols(); ++k) rows[r][k] = *divides(content, rows[r][k]);
      }
    }
    ++next;
    ++rank;
  }
  return rank;
}

}  // namespace pvf
