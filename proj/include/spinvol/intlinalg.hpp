#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "spinvol/error.hpp"

namespace spinvol {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>> &rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

  Integer &operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] std::span<const Integer> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] bool is_zero() const;

  /// Columns [first, first + count) as a new matrix.
  [[nodiscard]] IntMatrix column_block(std::size_t first,
                                       std::size_t count) const;
  /// Rows [first, first + count) as a new matrix.
  [[nodiscard]] IntMatrix row_block(std::size_t first,
                                    std::size_t count) const;
  /// Square principal block starting at (first, first).
  [[nodiscard]] IntMatrix principal_block(std::size_t first,
                                          std::size_t count) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer &factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer &factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
IntMatrix operator-(const IntMatrix &a, const IntMatrix &b);
IntMatrix operator-(const IntMatrix &a);

/// Block-diagonal matrix with the given blocks in order.
IntMatrix block_diagonal(std::span<const IntMatrix> blocks);

/// u * input * v == d, with u and v unimodular and d in Smith form.
/// v_inv is carried along so that kernel coordinates can be read off
/// without a separate inversion.
struct SNFResult {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix v_inv;
  std::size_t rank = 0;

  /// Diagonal entries d(0,0), d(1,1), ... up to min(rows, cols).
  [[nodiscard]] std::vector<Integer> invariant_factors() const;
};

/// Smith normal form. Pivot is the entry of smallest nonzero absolute value
/// in the active submatrix, ties broken by lowest (row, col), so the output
/// is a deterministic function of the input.
SNFResult smith_normal_form(const IntMatrix &m);

/// Basis of the integer kernel {x : m x = 0} as columns. The lattice it
/// spans is saturated in Z^cols.
IntMatrix integer_kernel(const IntMatrix &m);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  [[nodiscard]] long signature() const {
    return static_cast<long>(positive) - static_cast<long>(negative);
  }
  friend bool operator==(const Inertia &, const Inertia &) = default;
};

/// Sign counts of a rational congruence diagonalization of a symmetric
/// matrix (Lagrange reduction; a zero diagonal falls back to a 2x2
/// hyperbolic pivot contributing one positive and one negative square).
Inertia inertia(const IntMatrix &m);

/// Exact determinant by Bareiss fraction-free elimination.
Integer determinant(const IntMatrix &m);

} // namespace spinvol
