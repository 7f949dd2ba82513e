#include "pvf/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace pvf {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Rational RationalMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  RationalMatrix s = a;
  for (std::size_t k = 0; k < s.data_.size(); ++k) s.data_[k] += b.data_[k];
  return s;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  RationalMatrix s = a;
  for (std::size_t k = 0; k < s.data_.size(); ++k) s.data_[k] -= b.data_[k];
  return s;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
  RationalMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  }
  return p;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix p = a;
  for (auto& x : p.data_) x *= s;
  return p;
}

RationalVector operator*(const RationalMatrix& a, std::span<const Rational> v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("shape mismatch");
  RationalVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  RationalVector s = a;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
  return s;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  RationalVector s = a;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] -= b[i];
  return s;
}

RationalVector operator-(const RationalVector& a) {
  RationalVector s = a;
  for (auto& x : s) x = -x;
  return s;
}

RowEchelon row_reduce(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(pivot_row, k));
    }
    const Rational inv = 1 / m(pivot_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(pivot_row, k) *= inv;
    for (std::size_t rr = 0; rr < m.rows(); ++rr) {
      if (rr == pivot_row || m(rr, c) == 0) continue;
      const Rational factor = m(rr, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (m(pivot_row, k) != 0) m(rr, k) -= factor * m(pivot_row, k);
      }
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) {
  EchelonBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    basis.insert(RationalVector(row.begin(), row.end()));
  }
  return basis.rank();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const auto [reduced, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
  RationalMatrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = rhs[r];
  }
  const auto [reduced, pivots] = row_reduce(std::move(augmented));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = reduced(r, m.cols());
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = 1;
  }
  const auto [reduced, pivots] = row_reduce(std::move(augmented));
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced(r, n + c);
  }
  return inv;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a(r, c) == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(r, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t rr = c + 1; rr < n; ++rr) {
      if (a(rr, c) == 0) continue;
      const Rational factor = a(rr, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(rr, k) -= factor * a(c, k);
    }
  }
  return det;
}

bool EchelonBasis::insert(RationalVector v) {
  if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p] == 0) continue;
    const Rational factor = v[p];
    const auto& row = rows_[k];
    for (std::size_t c = p; c < dim_; ++c) {
      if (row[c] != 0) v[c] -= factor * row[c];
    }
  }
  std::size_t p = 0;
  while (p < dim_ && v[p] == 0) ++p;
  if (p == dim_) return false;
  const Rational inv = 1 / v[p];
  for (std::size_t c = p; c < dim_; ++c) v[c] *= inv;
  // Keep earlier rows reduced against the new pivot so later inserts stay
  // a single pass.
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    const Rational factor = row[p];
    for (std::size_t c = p; c < dim_; ++c) {
      if (v[c] != 0) row[c] -= factor * v[c];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace pvf
