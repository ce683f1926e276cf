#pragma once

#include "veronese/numeric.hpp"

#include <cstdint>
#include <vector>

namespace veronese {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  IntMatrix transpose() const;
  /// this * other; throws on a shape mismatch.
  IntMatrix multiply(const IntMatrix& other) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

/// Rank over Q by fraction-free elimination with row-content reduction. Works
/// in 64-bit arithmetic and restarts with big integers on overflow.
std::size_t rank(const IntMatrix& m);

/// Rank over Q by the classic one-step Bareiss recurrence on big integers.
std::size_t rank_bareiss(const IntMatrix& m);

}  // namespace veronese
