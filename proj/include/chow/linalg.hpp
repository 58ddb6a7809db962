#pragma once

#include <cstddef>
#include <vector>

#include "chow/integer.hpp"

namespace chow {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Square only.
Integer determinant(IntMatrix m);

/// Rank over the rationals.
std::size_t rank(IntMatrix m);

/// Nonzero invariant factors of the Smith normal form, in divisibility order.
std::vector<Integer> smith_invariants(IntMatrix m);

}  // namespace chow
