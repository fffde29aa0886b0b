#pragma once

#include <cstddef>
#include <vector>

#include "fewnomial/numeric.hpp"

namespace fewnomial {

/// Dense matrix over the exact rationals. Small (n is the variable count of a
/// system), so plain Gaussian elimination is used throughout.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds from row-major nested vectors; rows must all have the same length.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_square() const { return rows_ == cols_; }

  /// Exact determinant; requires a square matrix.
  Rational determinant() const;

  /// Exact rank by Gaussian elimination.
  std::size_t rank() const;

  /// Exact inverse; throws InvalidTransformError if singular.
  RationalMatrix inverse() const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

}  // namespace fewnomial
