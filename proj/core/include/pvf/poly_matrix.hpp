#pragma once

#include <cstddef>
#include <vector>

#include "pvf/poly.hpp"

namespace pvf {

/// Rectangular matrix of polynomials sharing one ambient dimension.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t n);
  // Rows must be nonempty, equally long, and share a dimension.
  static PolyMatrix from_rows(std::vector<std::vector<Poly>> rows);
  static PolyMatrix identity(std::size_t size, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t dimension() const noexcept { return n_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Poly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  PolyMatrix transpose() const;
  Poly trace() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend std::vector<Poly> operator*(const PolyMatrix& a, const std::vector<Poly>& v);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t n_;
  std::vector<Poly> entries_;
};

/// Determinant by cofactor expansion, memoized over column subsets.
/// Intended for sizes up to about 5.
Poly determinant(const PolyMatrix& m);

struct DetAdjugate {
  Poly det;
  PolyMatrix adjugate;  // m * adjugate == det * I
};
DetAdjugate det_and_adjugate(const PolyMatrix& m);

/// Entrywise d/dx_i.
PolyMatrix partial_derive(const PolyMatrix& m, std::size_t i);

/// Rank over the fraction field. Full rank is detected by evaluating at a few
/// fixed points; otherwise fraction-free elimination with polynomial pivots,
/// dividing each updated row by the gcd of its entries.
int rank_over_fractions(const PolyMatrix& m);

}  // namespace pvf
