#pragma once

#include "veronese/numeric.hpp"

#include <compare>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace veronese {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction so equality is plain sequence equality; reads past
/// the stored parts return 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Sorts (decreasing) and strips zeros instead of rejecting unsorted input.
  static Partition from_unsorted(std::vector<int> parts);

  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t length() const { return parts_.size(); }
  long size() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  /// Parts padded with zeros to exactly n entries (n >= length()).
  std::vector<int> padded(std::size_t n) const;

  std::string str() const;  // "(3,1)"; "()" for the empty partition

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic order on the zero-padded sequences.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

Partition conjugate(const Partition& lambda);
Partition add(const Partition& lambda, const Partition& mu);
Partition scale(int k, const Partition& lambda);
/// (1^k): a single column of k boxes.
Partition column(int k);

/// Dominance order. Throws std::invalid_argument on a size mismatch.
bool dominates(const Partition& lambda, const Partition& mu);

/// All mu containing lambda with mu/lambda a horizontal strip of b boxes, in
/// decreasing lexicographic order. With max_length set, longer results are dropped.
std::vector<Partition> pieri(const Partition& lambda, int b,
                             std::optional<std::size_t> max_length = std::nullopt);

/// Partitions of n with at most max_parts parts (unbounded if absent), decreasing lex.
std::vector<Partition> partitions_of(int n, std::optional<int> max_parts = std::nullopt);
BigInt count_partitions(int n, std::optional<int> max_parts = std::nullopt);

/// Number of standard Young tableaux of shape mu (hook length formula).
BigInt sym_group_irrep_dim(const Partition& mu);

/// dim S_lambda(C^n), via the hook-content formula; 0 when length > n.
BigInt schur_dimension(const Partition& lambda, int n);

}  // namespace veronese
