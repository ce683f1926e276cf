#include "veronese/tableau.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace veronese {

std::size_t VectorHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = v.size();
  for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool Tableau::is_semistandard() const {
  if (rows.size() != shape.length()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != shape[i]) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j + 1 < rows[i].size() && rows[i][j] > rows[i][j + 1]) return false;
      if (i + 1 < rows.size() && j < rows[i + 1].size() && rows[i][j] >= rows[i + 1][j]) return false;
    }
  }
  return true;
}

std::vector<int> Tableau::content(int k) const {
  std::vector<int> c(static_cast<std::size_t>(k), 0);
  for (const auto& row : rows)
    for (int x : row)
      if (x >= 1 && x <= k) ++c[static_cast<std::size_t>(x - 1)];
  return c;
}

RowContentMatrix::RowContentMatrix(int p, long d, const std::vector<long>& upper)
    : p_(p), d_(d), t_(static_cast<std::size_t>(p * p), 0) {
  if (p < 1) throw std::invalid_argument("RowContentMatrix: p must be positive");
  if (upper.size() != static_cast<std::size_t>(p * (p - 1) / 2))
    throw std::invalid_argument("RowContentMatrix: expected p(p-1)/2 strictly upper entries");
  std::size_t idx = 0;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) t_[static_cast<std::size_t>(i * p + j)] = upper[idx++];
  for (int j = 0; j < p; ++j) {
    long s = 0;
    for (int k = 0; k < j; ++k) s += (*this)(k, j);
    t_[static_cast<std::size_t>(j * p + j)] = d - s;
  }
}

std::vector<long> RowContentMatrix::upper() const {
  std::vector<long> out;
  for (int i = 0; i < p_; ++i)
    for (int j = i + 1; j < p_; ++j) out.push_back((*this)(i, j));
  return out;
}

std::optional<std::string> RowContentMatrix::first_violation() const {
  for (int i = 0; i < p_; ++i)
    for (int j = i + 1; j < p_; ++j)
      if ((*this)(i, j) < 0) {
        std::ostringstream os;
        os << "negative entry t(" << i + 1 << ',' << j + 1 << ')';
        return os.str();
      }
  for (int j = 0; j < p_; ++j)
    if ((*this)(j, j) < 0) {
      std::ostringstream os;
      os << "diagonal condition fails at j=" << j + 1;
      return os.str();
    }
  // Column strictness between rows i and i+1 (1-based i < p, j in 1..p);
  // empty sums are zero.
  for (int i = 0; i + 1 < p_; ++i) {
    for (int j = 0; j < p_; ++j) {
      long lhs = 0, rhs = 0;
      for (int k = i; k <= j - 1; ++k) lhs += (*this)(i, k);
      for (int k = i + 1; k <= j; ++k) rhs += (*this)(i + 1, k);
      if (lhs < rhs) {
        std::ostringstream os;
        os << "tableau condition fails at (i,j)=(" << i + 1 << ',' << j + 1 << ')';
        return os.str();
      }
    }
  }
  return std::nullopt;
}

Partition RowContentMatrix::shape() const {
  std::vector<int> parts(static_cast<std::size_t>(p_), 0);
  for (int i = 0; i < p_; ++i) {
    long s = 0;
    for (int j = i; j < p_; ++j) s += (*this)(i, j);
    parts[static_cast<std::size_t>(i)] = static_cast<int>(s);
  }
  return Partition::from_unsorted(parts);
}

BigInt KostkaCache::operator()(const Partition& lambda, const std::vector<int>& weight) {
  long total = 0;
  for (int w : weight) {
    if (w < 0) throw std::invalid_argument("kostka: negative weight entry");
    total += w;
  }
  if (total != lambda.size()) throw std::invalid_argument("kostka: size mismatch between shape and weight");
  return rec(lambda.parts(), weight, weight.size());
}

BigInt KostkaCache::rec(const std::vector<int>& shape, const std::vector<int>& weight, std::size_t k) {
  if (shape.empty()) return 1;  // remaining letters all have weight 0
  if (k == 0 || shape.size() > k) return 0;
  if (k == 1) return shape.size() == 1 && shape[0] == weight[0] ? 1 : 0;
  if (k == 2 && shape.size() <= 2) {
    // Strip the second letter: possible iff shape[1] <= weight[0] <= shape[0].
    const int second = shape.size() > 1 ? shape[1] : 0;
    return second <= weight[0] && weight[0] <= shape[0] ? 1 : 0;
  }

  std::vector<int> key = shape;
  key.push_back(-1);
  key.insert(key.end(), weight.begin(), weight.begin() + static_cast<long>(k));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // Remove a horizontal strip of weight[k-1] boxes holding the largest label.
  const int strip = weight[k - 1];
  BigInt total = 0;
  std::vector<int> nu = shape;
  const std::size_t len = shape.size();
  std::function<void(std::size_t, int)> strips = [&](std::size_t row, int left) {
    if (row == len) {
      if (left != 0) return;
      std::vector<int> trimmed = nu;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      total += rec(trimmed, weight, k - 1);
      return;
    }
    const int below = row + 1 < len ? shape[row + 1] : 0;
    const int room = shape[row] - below;
    for (int take = std::min(room, left); take >= 0; --take) {
      nu[row] = shape[row] - take;
      strips(row + 1, left - take);
    }
    nu[row] = shape[row];
  };
  strips(0, strip);
  memo_.emplace(std::move(key), total);
  return total;
}

BigInt kostka(const Partition& lambda, const std::vector<int>& mu) {
  KostkaCache cache;
  return cache(lambda, mu);
}

void for_each_ssyt(const Partition& lambda, const std::vector<int>& mu,
                   const std::function<void(const Tableau&)>& visit) {
  long total = 0;
  for (int w : mu) {
    if (w < 0) throw std::invalid_argument("enumerate_ssyt: negative weight entry");
    total += w;
  }
  if (total != lambda.size()) throw std::invalid_argument("enumerate_ssyt: size mismatch between shape and weight");

  // chain[k] = shape filled by labels 1..k; built top-down from lambda.
  const std::size_t k = mu.size();
  std::vector<std::vector<int>> chain(k + 1);
  chain[k] = lambda.padded(lambda.length());
  std::function<void(std::size_t)> descend = [&](std::size_t letter) {
    if (letter == 0) {
      for (int x : chain[0])
        if (x != 0) return;
      Tableau t{lambda, std::vector<std::vector<int>>(lambda.length())};
      for (std::size_t lab = 1; lab <= k; ++lab)
        for (std::size_t r = 0; r < lambda.length(); ++r)
          for (int c = chain[lab - 1][r]; c < chain[lab][r]; ++c) t.rows[r].push_back(static_cast<int>(lab));
      visit(t);
      return;
    }
    const std::vector<int>& outer = chain[letter];
    std::vector<int>& inner = chain[letter - 1];
    inner = outer;
    const std::size_t len = outer.size();
    std::function<void(std::size_t, int)> strips = [&](std::size_t row, int left) {
      if (row == len) {
        if (left == 0) descend(letter - 1);
        return;
      }
      const int below = row + 1 < len ? outer[row + 1] : 0;
      const int room = outer[row] - below;
      for (int take = std::min(room, left); take >= 0; --take) {
        inner[row] = outer[row] - take;
        strips(row + 1, left - take);
      }
      inner[row] = outer[row];
    };
    strips(0, mu[letter - 1]);
  };
  descend(k);
}

std::vector<Tableau> enumerate_ssyt(const Partition& lambda, const std::vector<int>& mu) {
  std::vector<Tableau> out;
  for_each_ssyt(lambda, mu, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

RowContentMatrix tableau_to_matrix(const Tableau& t, int p, long d) {
  if (static_cast<int>(t.rows.size()) > p) throw std::invalid_argument("tableau_to_matrix: more than p rows");
  for (const auto& row : t.rows)
    for (int x : row)
      if (x < 1 || x > p) throw std::invalid_argument("tableau_to_matrix: label out of range");
  for (int c : t.content(p))
    if (c != d) throw std::invalid_argument("tableau_to_matrix: weight is not (d^p)");
  std::vector<long> upper;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      long count = 0;
      if (static_cast<std::size_t>(i) < t.rows.size())
        for (int x : t.rows[static_cast<std::size_t>(i)]) count += x == j + 1;
      upper.push_back(count);
    }
  return RowContentMatrix(p, d, upper);
}

Tableau matrix_to_tableau(const RowContentMatrix& m) {
  if (auto bad = m.first_violation()) throw std::invalid_argument("matrix_to_tableau: " + *bad);
  Tableau t;
  t.shape = m.shape();
  t.rows.resize(t.shape.length());
  for (int i = 0; i < static_cast<int>(t.shape.length()); ++i)
    for (int j = i; j < m.p(); ++j)
      for (long c = 0; c < m(i, j); ++c) t.rows[static_cast<std::size_t>(i)].push_back(j + 1);
  return t;
}

}  // namespace veronese
