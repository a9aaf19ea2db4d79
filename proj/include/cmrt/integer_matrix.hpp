#pragma once

#include <iosfwd>
#include <vector>

#include "cmrt/bigint.hpp"

namespace cmrt {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols);
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntegerMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Integer& operator()(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const std::vector<Integer>& entries() const { return entries_; }

  IntegerMatrix transpose() const;
  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[target] += factor * row[source]
  void add_row_multiple(int target, int source, const Integer& factor);
  void add_col_multiple(int target, int source, const Integer& factor);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& out, const IntegerMatrix& m);

struct SNFResult {
  /// d_1 | d_2 | ... for the nonzero part, followed by zeros; length min(rows, cols).
  std::vector<Integer> divisors;
  int rank = 0;
  /// Product of the nonzero divisors: the order of the cokernel's torsion.
  Integer torsion_order = 1;
};

/// SNF together with unimodular transforms: left * M * right == diag(divisors).
struct SNFDecomposition {
  SNFResult result;
  IntegerMatrix left;
  IntegerMatrix right;
};

SNFResult smith_normal_form(const IntegerMatrix& m);
SNFDecomposition smith_decomposition(const IntegerMatrix& m);

/// Rank over Q by fraction-free (Bareiss) elimination.
int matrix_rank(const IntegerMatrix& m);

/// Determinant of a square matrix by fraction-free elimination.
Integer determinant(const IntegerMatrix& m);

/// Text format: first line "rows cols", then `rows` lines of `cols` integers.
IntegerMatrix read_matrix(std::istream& in);

}  // namespace cmrt
