#include "veronese/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace veronese {

namespace {
void strip_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}
}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  strip_zeros(parts_);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
      throw std::invalid_argument("not a partition: parts must be nonnegative and weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

std::vector<int> Partition::padded(std::size_t n) const {
  std::vector<int> out(std::max(n, parts_.size()), 0);
  std::copy(parts_.begin(), parts_.end(), out.begin());
  return out;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

Partition add(const Partition& lambda, const Partition& mu) {
  const std::size_t n = std::max(lambda.length(), mu.length());
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lambda[i] + mu[i];
  return Partition(std::move(out));
}

Partition scale(int k, const Partition& lambda) {
  if (k < 0) throw std::invalid_argument("scale: negative factor");
  std::vector<int> out = lambda.parts();
  for (int& x : out) x *= k;
  return Partition(std::move(out));
}

Partition column(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(k, 0)), 1)); }

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominates: partitions of different sizes");
  long a = 0, b = 0;
  const std::size_t n = std::max(lambda.length(), mu.length());
  for (std::size_t i = 0; i < n; ++i) {
    a += lambda[i];
    b += mu[i];
    if (a < b) return false;
  }
  return true;
}

std::vector<Partition> pieri(const Partition& lambda, int b, std::optional<std::size_t> max_length) {
  if (b < 0) throw std::invalid_argument("pieri: negative strip size");
  const std::size_t len = lambda.length();
  std::vector<int> mu(len + 1, 0);
  std::vector<Partition> out;
  // Row 0 is unbounded above; row i >= 1 may grow up to lambda[i-1].
  std::function<void(std::size_t, int)> rec = [&](std::size_t row, int left) {
    if (row == len + 1) {
      if (left == 0) out.emplace_back(mu);
      return;
    }
    const int base = lambda[row];
    const int cap = row == 0 ? left : std::min(left, lambda[row - 1] - base);
    for (int add = cap; add >= 0; --add) {
      mu[row] = base + add;
      rec(row + 1, left - add);
    }
  };
  rec(0, b);
  if (max_length) {
    std::erase_if(out, [&](const Partition& p) { return p.length() > *max_length; });
  }
  return out;  // the recursion visits candidates in decreasing lex order
}

std::vector<Partition> partitions_of(int n, std::optional<int> max_parts) {
  std::vector<Partition> out;
  if (n < 0) return out;
  const int limit = max_parts.value_or(n);
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == limit) return;
    for (int part = std::min(left, maxpart); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

BigInt count_partitions(int n, std::optional<int> max_parts) {
  if (n < 0) return 0;
  const int k = max_parts.value_or(n);
  // table[j] = partitions of j into parts of size <= current bound; parts <= k
  // is equinumerous with at most k parts, by conjugation.
  std::vector<BigInt> table(static_cast<std::size_t>(n) + 1, 0);
  table[0] = 1;
  for (int part = 1; part <= std::min(k, n); ++part)
    for (int j = part; j <= n; ++j) table[static_cast<std::size_t>(j)] += table[static_cast<std::size_t>(j - part)];
  return table[static_cast<std::size_t>(n)];
}

BigInt sym_group_irrep_dim(const Partition& mu) {
  const Partition conj = conjugate(mu);
  BigInt hooks = 1;
  for (std::size_t i = 0; i < mu.length(); ++i)
    for (int j = 0; j < mu[i]; ++j) hooks *= (mu[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
  return factorial(mu.size()) / hooks;
}

BigInt schur_dimension(const Partition& lambda, int n) {
  if (static_cast<int>(lambda.length()) > n) return 0;
  const Partition conj = conjugate(lambda);
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      num *= n + j - static_cast<int>(i);
      den *= (lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    }
  }
  return num / den;
}

}  // namespace veronese
