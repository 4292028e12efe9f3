#pragma once

#include "hibi/numeric.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hibi {

/// Dense rectangular integer matrix. Generators are stored as rows.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);

/// Nonzero invariant factors d_1 | d_2 | ... | d_r of the Smith normal form,
/// r = rank. Pivots on the entry of least absolute value to limit growth.
std::vector<BigInt> smith_normal_form(IntMatrix m);

/// A nonzero primitive integer vector c with sum_i c_i * row_i = 0, or
/// nullopt when the rows are linearly independent.
std::optional<std::vector<BigInt>> row_dependency(const IntMatrix& m);

/// A dependency among the rows with minimal support: all supports up to
/// size `exhaustive_up_to` are searched first, then a row dependency is
/// shrunk greedily to a circuit.
std::optional<std::vector<BigInt>> minimal_row_dependency(const IntMatrix& m,
                                                          std::size_t exhaustive_up_to = 4);

}  // namespace hibi
