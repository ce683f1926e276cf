#pragma once

#include "veronese/partition.hpp"

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace veronese {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept;
};

/// Semistandard Young tableau; labels are 1-based.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  bool is_semistandard() const;
  /// Number of occurrences of each label 1..k.
  std::vector<int> content(int k) const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Row-content parameterization of a tableau of weight (d^p): t(i,j) counts
/// the label j+1 in row i+1 (0-based storage). Diagonal entries are derived
/// from the level: t(j,j) = d - sum_{k<j} t(k,j).
class RowContentMatrix {
 public:
  /// `upper` lists t(i,j) for i<j in row-major order: (0,1),(0,2),...,(1,2),...
  RowContentMatrix(int p, long d, const std::vector<long>& upper);

  int p() const { return p_; }
  long d() const { return d_; }
  long operator()(int i, int j) const { return t_[static_cast<std::size_t>(i * p_ + j)]; }
  std::vector<long> upper() const;

  /// Description of the first failing defining inequality, if any.
  std::optional<std::string> first_violation() const;
  bool valid() const { return !first_violation(); }

  /// lambda_i = sum_{j >= i} t(i,j).
  Partition shape() const;

 private:
  int p_;
  long d_;
  std::vector<long> t_;
};

/// Memoized Kostka numbers keyed on (remaining shape, weight prefix). Not
/// thread safe; use one cache per thread.
class KostkaCache {
 public:
  BigInt operator()(const Partition& lambda, const std::vector<int>& weight);

 private:
  BigInt rec(const std::vector<int>& shape, const std::vector<int>& weight, std::size_t k);
  std::unordered_map<std::vector<int>, BigInt, VectorHash> memo_;
};

/// Number of SSYT of shape lambda and weight mu (a composition).
/// Throws std::invalid_argument when sizes differ.
BigInt kostka(const Partition& lambda, const std::vector<int>& mu);

/// Visits every SSYT of shape lambda and weight mu exactly once, in a fixed
/// order (label strips placed from the largest label down, larger rows first).
void for_each_ssyt(const Partition& lambda, const std::vector<int>& mu,
                   const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> enumerate_ssyt(const Partition& lambda, const std::vector<int>& mu);

RowContentMatrix tableau_to_matrix(const Tableau& t, int p, long d);
Tableau matrix_to_tableau(const RowContentMatrix& m);

}  // namespace veronese
