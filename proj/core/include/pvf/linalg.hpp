#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pvf/rational.hpp"

namespace pvf {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Rows must all have the same length.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  RationalMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
  friend RationalVector operator*(const RationalMatrix& a, std::span<const Rational> v);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a);

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
/// Basis of {v : m v = 0}, one vector per free column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);
/// Some solution of m x = rhs (free variables set to zero), if consistent.
std::optional<RationalVector> solve(const RationalMatrix& m, std::span<const Rational> rhs);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

/// Row space built one vector at a time; insert() reports whether the vector
/// was independent of everything inserted so far.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  bool insert(RationalVector v);
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dimension() const noexcept { return dim_; }

 private:
  std::size_t dim_;
  // Each stored row is normalized so its pivot entry is 1.
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace pvf
