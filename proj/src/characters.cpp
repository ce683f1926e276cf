#include "veronese/characters.hpp"

#include <algorithm>
#include <numeric>

namespace veronese {

bool is_dominant(const Weight& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  return true;
}

Weight dominant_representative(Weight w) {
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

BigInt orbit_size(const Weight& w) {
  Weight s = dominant_representative(w);
  BigInt r = factorial(static_cast<long>(s.size()));
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    r /= factorial(static_cast<long>(j - i));
    i = j;
  }
  return r;
}

std::vector<Weight> monomials(int d, int n) {
  std::vector<Weight> out;
  if (n < 1 || d < 0) return out;
  Weight cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n - 1) {
      cur[static_cast<std::size_t>(var)] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[static_cast<std::size_t>(var)] = e;
      rec(var + 1, left - e);
    }
  };
  rec(0, d);
  return out;
}

// ---------------------------------------------------------------- WeightTable

void WeightTable::add(const Weight& w, const BigInt& m) {
  if (static_cast<int>(w.size()) != n_ || !is_dominant(w))
    throw std::invalid_argument("WeightTable::add: weight must be dominant with n entries");
  if (std::accumulate(w.begin(), w.end(), 0L) != degree_)
    throw std::invalid_argument("WeightTable::add: weight of the wrong degree");
  if (m == 0) return;
  auto [it, inserted] = entries_.try_emplace(w, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) entries_.erase(it);
  }
}

BigInt WeightTable::at(const Weight& w) const {
  auto it = entries_.find(dominant_representative(w));
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt WeightTable::dimension() const {
  BigInt total = 0;
  for (const auto& [w, m] : entries_) total += m * orbit_size(w);
  return total;
}

// -------------------------------------------------------------- FullCharacter

FullCharacter FullCharacter::unit(int n) {
  FullCharacter c(n, 0);
  c.add(Weight(static_cast<std::size_t>(n), 0), 1);
  return c;
}

FullCharacter FullCharacter::sym(int d, int n) {
  FullCharacter c(n, d);
  for (auto& m : monomials(d, n)) c.add(m, 1);
  return c;
}

FullCharacter FullCharacter::from_table(const WeightTable& t) {
  FullCharacter c(t.n(), t.degree());
  for (const auto& [w, m] : t.entries()) {
    Weight perm = w;
    std::sort(perm.begin(), perm.end());
    do {
      c.add(perm, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return c;
}

void FullCharacter::add(const Weight& w, const BigInt& m) {
  if (m == 0) return;
  auto [it, inserted] = entries_.try_emplace(w, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) entries_.erase(it);
  }
}

FullCharacter FullCharacter::times(const FullCharacter& other, const ResourceLimits& limits) const {
  if (n_ != other.n_) throw std::invalid_argument("FullCharacter::times: different n");
  FullCharacter out(n_, degree_ + other.degree_);
  Weight w(static_cast<std::size_t>(n_));
  for (const auto& [a, ma] : entries_) {
    for (const auto& [b, mb] : other.entries_) {
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = a[i] + b[i];
      out.add(w, ma * mb);
    }
    limits.check_entries(out.entries_.size(), "character product");
  }
  return out;
}

WeightTable FullCharacter::dominant_part() const {
  WeightTable t(n_, degree_);
  for (const auto& [w, m] : entries_)
    if (is_dominant(w)) t.add(w, m);
  return t;
}

// ------------------------------------------------------------ SchurExpansion

void SchurExpansion::add(const Partition& lambda, const BigInt& m) {
  if (lambda.size() != degree_) throw std::invalid_argument("SchurExpansion::add: partition of the wrong size");
  if (static_cast<int>(lambda.length()) > n_) throw std::invalid_argument("SchurExpansion::add: partition longer than n");
  if (m == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt SchurExpansion::multiplicity(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt SchurExpansion::dimension() const {
  BigInt total = 0;
  for (const auto& [lambda, m] : terms_) total += m * schur_dimension(lambda, n_);
  return total;
}

// ------------------------------------------------------------------ plethysm

WeightTable char_sym_product(const std::vector<int>& degrees, int n, const ResourceLimits& limits) {
  if (n < 1) throw std::invalid_argument("char_sym_product: n must be positive");
  FullCharacter acc = FullCharacter::unit(n);
  for (int d : degrees) {
    if (d < 0) throw std::invalid_argument("char_sym_product: negative degree");
    acc = acc.times(FullCharacter::sym(d, n), limits);
  }
  return acc.dominant_part();
}

WeightTable char_tensor_sym(int p, int d, int n, const ResourceLimits& limits) {
  if (p < 0) throw std::invalid_argument("char_tensor_sym: negative p");
  return char_sym_product(std::vector<int>(static_cast<std::size_t>(p), d), n, limits);
}

namespace {

// Coefficient of z^p in prod_m (1 + z x^m) (exterior) or prod_m 1/(1 - z x^m)
// (symmetric), as a full character. Monomials are processed in decreasing lex
// order; layer k holds the degree k*d part.
WeightTable plethysm_dp(int p, int d, int n, bool exterior, const ResourceLimits& limits) {
  if (p < 0 || d < 0 || n < 1) throw std::invalid_argument("plethysm: invalid parameters");
  const auto monos = monomials(d, n);
  if (exterior && p > static_cast<int>(monos.size())) return WeightTable(n, static_cast<long>(p) * d);

  std::vector<FullCharacter> layer;
  layer.reserve(static_cast<std::size_t>(p) + 1);
  for (int k = 0; k <= p; ++k) layer.emplace_back(n, static_cast<long>(k) * d);
  layer[0] = FullCharacter::unit(n);

  Weight w(static_cast<std::size_t>(n));
  auto shift_into = [&](const FullCharacter& src, FullCharacter& dst, const Weight& m) {
    for (const auto& [v, c] : src.entries()) {
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = v[i] + m[i];
      dst.add(w, c);
    }
  };

  for (const auto& m : monos) {
    if (exterior) {
      for (int k = p; k >= 1; --k) shift_into(layer[static_cast<std::size_t>(k - 1)], layer[static_cast<std::size_t>(k)], m);
    } else {
      for (int k = 1; k <= p; ++k) shift_into(layer[static_cast<std::size_t>(k - 1)], layer[static_cast<std::size_t>(k)], m);
    }
    limits.check_entries(layer[static_cast<std::size_t>(p)].entries().size(), "plethysm table");
  }
  return layer[static_cast<std::size_t>(p)].dominant_part();
}

}  // namespace

WeightTable char_wedge_sym(int p, int d, int n, const ResourceLimits& limits) {
  return plethysm_dp(p, d, n, true, limits);
}

WeightTable char_sym_sym(int p, int d, int n, const ResourceLimits& limits) {
  return plethysm_dp(p, d, n, false, limits);
}

WeightTable schur_character(const Partition& lambda, int n) {
  WeightTable t(n, lambda.size());
  if (static_cast<int>(lambda.length()) > n) return t;
  KostkaCache kostka_of;
  for (const auto& mu : partitions_of(static_cast<int>(lambda.size()), n)) {
    if (!dominates(lambda, mu)) continue;
    t.add(mu.padded(static_cast<std::size_t>(n)), kostka_of(lambda, mu.padded(static_cast<std::size_t>(n))));
  }
  return t;
}

WeightTable char_multiply(const WeightTable& a, const WeightTable& b, const ResourceLimits& limits) {
  return FullCharacter::from_table(a).times(FullCharacter::from_table(b), limits).dominant_part();
}

SchurExpansion schur_decompose(const WeightTable& table) {
  const int n = table.n();
  SchurExpansion out(n, table.degree());
  WeightTable::Entries rest = table.entries();
  const auto all = partitions_of(static_cast<int>(table.degree()), n);
  KostkaCache kostka_of;

  while (!rest.empty()) {
    auto top = rest.begin();  // lex-greatest remaining dominant weight
    const Weight lambda_w = top->first;
    const BigInt m = top->second;
    if (m < 0) throw NotACharacter("schur_decompose: negative remainder at the top weight");
    const Partition lambda(lambda_w);
    out.add(lambda, m);
    for (const auto& mu : all) {
      if (mu > lambda || !dominates(lambda, mu)) continue;
      const Weight mu_w = mu.padded(static_cast<std::size_t>(n));
      const BigInt k = kostka_of(lambda, mu_w);
      if (k == 0) continue;
      auto it = rest.find(mu_w);
      if (it == rest.end()) throw NotACharacter("schur_decompose: negative remainder at " + mu.str());
      it->second -= m * k;
      if (it->second < 0) throw NotACharacter("schur_decompose: negative remainder at " + mu.str());
      if (it->second == 0) rest.erase(it);
    }
  }
  return out;
}

SchurExpansion tensor_with_sym(const SchurExpansion& e, int b) {
  SchurExpansion out(e.n(), e.degree() + b);
  for (const auto& [lambda, m] : e.terms())
    for (const auto& mu : pieri(lambda, b, static_cast<std::size_t>(e.n()))) out.add(mu, m);
  return out;
}

BigInt total_multiplicity(const SchurExpansion& e) {
  BigInt total = 0;
  for (const auto& [lambda, m] : e.terms()) total += m;
  return total;
}

BigInt complexity(const SchurExpansion& e) { return BigInt(e.terms().size()); }

}  // namespace veronese
