#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "bordx/integer.hpp"

namespace bordx {

using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  IntMatrix select_columns(std::span<const std::size_t> cols) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntVector operator*(const IntMatrix& m, const IntVector& x);

struct RankKernel {
  std::size_t rank = 0;
  // Primitive integer vectors x with M x = 0, one per non-pivot column.
  std::vector<IntVector> kernel_basis;
};

// Fraction-free (Bareiss) elimination over the integers.
RankKernel lattice_rank_kernel(const IntMatrix& m);
std::size_t matrix_rank(const IntMatrix& m);
Integer determinant(const IntMatrix& m);

// Row-style Hermite normal form of the lattice spanned by the rows of m:
// pivots positive, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped, so the result has rank(m) rows.
IntMatrix hermite_normal_form(const IntMatrix& m);

struct HermiteTransform {
  IntMatrix h;  // echelon form, same shape as the input, zero rows last
  IntMatrix u;  // unimodular with u * input = h
  std::size_t rank = 0;
};
HermiteTransform hermite_with_transform(const IntMatrix& m);

// Integer solution of a x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Integer> b);

// Divides out the content and makes the first nonzero entry positive.
void make_primitive(IntVector& v);

}  // namespace bordx
