#include "fewnomial/matrix.hpp"

namespace fewnomial {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return RationalMatrix(0, 0);
  const std::size_t cols = rows[0].size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Rational RationalMatrix::determinant() const {
  if (!is_square()) throw ShapeError("determinant of a non-square matrix");
  RationalMatrix work = *this;
  const std::size_t n = rows_;
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(work.at(pivot, c), work.at(col, c));
      det = -det;
    }
    det *= work.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work.at(r, col) == 0) continue;
      const Rational factor = work.at(r, col) / work.at(col, col);
      for (std::size_t c = col; c < n; ++c) {
        work.at(r, c) -= factor * work.at(col, c);
      }
    }
  }
  return det;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix work = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && work.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < cols_; ++c) std::swap(work.at(pivot, c), work.at(rank, c));
    }
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (work.at(r, col) == 0) continue;
      const Rational factor = work.at(r, col) / work.at(rank, col);
      for (std::size_t c = col; c < cols_; ++c) {
        work.at(r, c) -= factor * work.at(rank, c);
      }
    }
    ++rank;
  }
  return rank;
}

RationalMatrix RationalMatrix::inverse() const {
  if (!is_square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix work = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) throw InvalidTransformError("singular matrix has no inverse");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    const Rational scale = work.at(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work.at(col, c) /= scale;
      inv.at(col, c) /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      const Rational factor = work.at(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work.at(r, c) -= factor * work.at(col, c);
        inv.at(r, c) -= factor * inv.at(col, c);
      }
    }
  }
  return inv;
}

}  // namespace fewnomial
