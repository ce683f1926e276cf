#include "veronese/integer_matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace veronese {

bool IntMatrix::is_zero() const {
  for (auto x : a_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix::multiply: shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

namespace {

struct Overflow {};

struct Checked {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
  static std::int64_t abs(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
  }
};

struct Big {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
  static BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
  static BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
};

template <class T, class Ops>
std::size_t eliminate(std::vector<std::vector<T>>& m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Prefer a unit pivot; otherwise the smallest in absolute value.
    std::size_t best = rows;
    T best_abs = 0;
    for (std::size_t j = r; j < rows; ++j) {
      if (m[j][c] == 0) continue;
      T a = Ops::abs(m[j][c]);
      if (best == rows || a < best_abs) {
        best = j;
        best_abs = a;
        if (a == 1) break;
      }
    }
    if (best == rows) continue;
    std::swap(m[r], m[best]);
    nz.clear();
    for (std::size_t k = c + 1; k < cols; ++k)
      if (m[r][k] != 0) nz.push_back(k);
    const T piv = m[r][c];
    for (std::size_t j = r + 1; j < rows; ++j) {
      const T f = m[j][c];
      if (f == 0) continue;
      auto& row = m[j];
      if (f % piv == 0) {
        const T q = f / piv;
        for (std::size_t k : nz) row[k] = Ops::sub(row[k], Ops::mul(q, m[r][k]));
      } else {
        for (std::size_t k = c + 1; k < cols; ++k)
          if (row[k] != 0) row[k] = Ops::mul(row[k], piv);
        for (std::size_t k : nz) row[k] = Ops::sub(row[k], Ops::mul(f, m[r][k]));
        T g = 0;
        for (std::size_t k = c + 1; k < cols; ++k)
          if (row[k] != 0) g = Ops::gcd(g, row[k]);
        if (g > 1)
          for (std::size_t k = c + 1; k < cols; ++k)
            if (row[k] != 0) row[k] /= g;
      }
      row[c] = 0;
    }
    ++r;
  }
  return r;
}

template <class T>
std::vector<std::vector<T>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<T>> out(m.rows(), std::vector<T>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  const IntMatrix& src = m;
  const bool flip = m.cols() > m.rows();
  const IntMatrix t = flip ? m.transpose() : IntMatrix();
  const IntMatrix& use = flip ? t : src;
  try {
    auto rows = rows_of<std::int64_t>(use);
    return eliminate<std::int64_t, Checked>(rows, use.cols());
  } catch (const Overflow&) {
    auto rows = rows_of<BigInt>(use);
    return eliminate<BigInt, Big>(rows, use.cols());
  }
}

std::size_t rank_bareiss(const IntMatrix& m) {
  auto a = rows_of<BigInt>(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t j = r; j < rows; ++j)
      if (a[j][c] != 0) {
        piv = j;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t j = r + 1; j < rows; ++j) {
      for (std::size_t k = c + 1; k < cols; ++k) a[j][k] = (a[r][c] * a[j][k] - a[j][c] * a[r][k]) / prev;
      a[j][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace veronese
