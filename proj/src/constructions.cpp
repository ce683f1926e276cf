#include "veronese/constructions.hpp"

#include "veronese/koszul.hpp"
#include "veronese/parallel.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace veronese {

void CheckReport::expect(bool cond, const std::string& what) {
  ++checks;
  if (cond) return;
  ok = false;
  if (failures.size() < 20) failures.push_back(what);
}

namespace {

BigInt mult_of(const SchurExpansion& e, const Partition& lambda) { return e.multiplicity(lambda); }

std::string describe(const std::string& lhs, const BigInt& a, const std::string& rhs, const BigInt& b) {
  return lhs + " = " + a.str() + " but " + rhs + " = " + b.str();
}

}  // namespace

// ----------------------------------------------------------- Newell and BCI

CheckReport newell_check(int p, int d, int n, const ResourceLimits& limits) {
  if (p < 1 || d < 0 || n < p) throw std::invalid_argument("newell_check: need p >= 1, d >= 0, n >= p");
  const auto sym_d = schur_decompose(char_sym_sym(p, d, n, limits));
  const auto wedge_d = schur_decompose(char_wedge_sym(p, d, n, limits));
  const auto sym_d1 = schur_decompose(char_sym_sym(p, d + 1, n, limits));
  const auto wedge_d1 = schur_decompose(char_wedge_sym(p, d + 1, n, limits));
  const Partition ones = column(p);
  CheckReport rep;
  for (const auto& lambda : partitions_of(p * d, p)) {
    const Partition up = add(lambda, ones);
    const BigInt a = mult_of(wedge_d1, up), b = mult_of(sym_d, lambda);
    rep.expect(a == b, describe("(wedge^p S^(d+1), " + up.str() + ")", a, "(S^p S^d, " + lambda.str() + ")", b));
    const BigInt c = mult_of(sym_d1, up), e = mult_of(wedge_d, lambda);
    rep.expect(c == e, describe("(S^p S^(d+1), " + up.str() + ")", c, "(wedge^p S^d, " + lambda.str() + ")", e));
  }
  return rep;
}

CheckReport bci_check(int p, int d, int n, const ResourceLimits& limits) {
  if (p < 1 || d < 0 || n < p) throw std::invalid_argument("bci_check: need p >= 1, d >= 0, n >= p");
  const auto sym_2d = schur_decompose(char_sym_sym(p, 2 * d, n, limits));
  const auto sym_2d1 = schur_decompose(char_sym_sym(p, 2 * d + 1, n, limits));
  const auto wedge_2d1 = schur_decompose(char_wedge_sym(p, 2 * d + 1, n, limits));
  const auto wedge_2d2 = schur_decompose(char_wedge_sym(p, 2 * d + 2, n, limits));
  const Partition ones = column(p), row({p});
  CheckReport rep;
  for (const auto& lambda : partitions_of(p * d, p)) {
    const Partition two = scale(2, lambda);
    const BigInt m = mult_of(sym_2d, two);
    rep.expect(m > 0, "(S^p S^2d, " + two.str() + ") = 0");
    const Partition w1 = add(two, ones);
    const BigInt a = mult_of(wedge_2d1, w1);
    rep.expect(a == m && a > 0, describe("(wedge^p S^(2d+1), " + w1.str() + ")", a, "(S^p S^2d, " + two.str() + ")", m));
    const Partition w2 = add(w1, row), s2 = add(two, row);
    const BigInt b = mult_of(wedge_2d2, w2), c = mult_of(sym_2d1, s2);
    rep.expect(b == c && b > 0, describe("(wedge^p S^(2d+2), " + w2.str() + ")", b, "(S^p S^(2d+1), " + s2.str() + ")", c));
  }
  return rep;
}

// ---------------------------------------------------------- exponent lemma

Partition remove_visible_boxes(const Partition& lambda, int k) {
  if (k < 0) throw std::invalid_argument("remove_visible_boxes: negative k");
  if (lambda[0] < k) throw std::invalid_argument("remove_visible_boxes: need lambda_1 >= k");
  std::vector<int> cols = conjugate(lambda).parts();
  for (std::size_t i = cols.size() - static_cast<std::size_t>(k); i < cols.size(); ++i) --cols[i];
  return conjugate(Partition::from_unsorted(cols));
}

bool L1Witness::well_formed() const {
  if (levels.empty() || levels.back() != 0) return false;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) return false;
    if (i + 1 < exponents.size() && exponents[i] <= exponents[i + 1]) return false;
  }
  return true;
}

namespace {

long ceil_frac(long num, long den) { return ceil_to_long(Rational(num, den)); }

L1Witness run_exponents(const Partition& lambda, int b, int p, int shift) {
  if (p < 1 || b < 0) throw std::invalid_argument("l1_exponents: need p >= 1, b >= 0");
  const long L0 = lambda.size() - (b + 1);
  if (L0 < static_cast<long>(p) * (p + 1) / 2)
    throw std::invalid_argument("l1_exponents: need |lambda| - (b+1) >= p(p+1)/2");
  L1Witness w{lambda, b, p, {}, {L0}};
  long L = L0;
  for (int i = 0; i <= p; ++i) {
    // ceil(L/m + (m-1)/2) with m = p+1-i (+shift)
    const long m = p + 1 - i + shift;
    const long e = ceil_frac(2 * L + m * (m - 1), 2 * m);
    w.exponents.push_back(e);
    L -= e;
    w.levels.push_back(L);
  }
  return w;
}

}  // namespace

L1Witness l1_exponents(const Partition& lambda, int b, int p) { return run_exponents(lambda, b, p, 0); }
L1Witness l1_exponents_literal(const Partition& lambda, int b, int p) { return run_exponents(lambda, b, p, 1); }

std::string to_string(L1Verdict v) {
  switch (v) {
    case L1Verdict::constructed: return "constructed";
    case L1Verdict::conditions_fail: return "conditions-fail";
    case L1Verdict::pieri_fail: return "pieri-fail";
  }
  return "?";
}

namespace {

bool contained_in(const Partition& mu, const Partition& lambda) {
  if (mu.length() > lambda.length()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i)
    if (mu[i] > lambda[i]) return false;
  return true;
}

bool pieri_chain(const Partition& target, const std::vector<long>& steps, std::size_t k, std::size_t rows,
                 std::vector<Partition>& chain, std::set<std::pair<std::size_t, Partition>>& dead) {
  const Partition& cur = chain.back();
  if (k == steps.size()) return cur == target;
  if (dead.count({k, cur})) return false;
  for (const auto& next : pieri(cur, static_cast<int>(steps[k]), rows)) {
    if (!contained_in(next, target)) continue;
    chain.push_back(next);
    if (pieri_chain(target, steps, k + 1, rows, chain, dead)) return true;
    chain.pop_back();
  }
  dead.insert({k, cur});
  return false;
}

}  // namespace

L1Result l1_membership(const Partition& lambda, int b, int p, int d, int n) {
  if (n < 2) throw std::invalid_argument("l1_membership: n >= 2");
  if (static_cast<int>(lambda.length()) != n - 1 || n - 1 > p + 2)
    throw std::invalid_argument("l1_membership: need length(lambda) = n-1 <= p+2");
  if (lambda[static_cast<std::size_t>(n - 2)] <= b + 1)
    throw std::invalid_argument("l1_membership: need lambda_{n-1} > b+1");
  L1Result res;
  res.witness = l1_exponents(lambda, b, p);
  const auto& e = res.witness.exponents;
  res.trimmed = remove_visible_boxes(lambda, b + 1);
  if (!res.witness.well_formed()) {
    res.detail = "exponents not strictly decreasing";
    return res;
  }
  long lhs = 0, rhs = 0;
  for (int k = 1; k <= n - 2; ++k) {
    lhs += res.trimmed[static_cast<std::size_t>(k - 1)];
    rhs += e[static_cast<std::size_t>(k - 1)];
    if (lhs < rhs) {
      res.detail = "prefix condition fails at k = " + std::to_string(k);
      return res;
    }
  }
  if (e[0] > d - 1) {
    res.detail = "e_0 = " + std::to_string(e[0]) + " exceeds d-1";
    return res;
  }
  res.chain = {Partition({b + 1})};
  std::set<std::pair<std::size_t, Partition>> dead;
  if (pieri_chain(lambda, e, 0, static_cast<std::size_t>(n - 1), res.chain, dead)) {
    res.verdict = L1Verdict::constructed;
  } else {
    res.verdict = L1Verdict::pieri_fail;
    res.chain.clear();
    res.detail = "no Pieri chain reaches lambda";
  }
  return res;
}

std::vector<L1Sample> random_l1_inputs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return static_cast<int>(lo + rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  std::vector<L1Sample> out;
  while (out.size() < count) {
    const int p = pick(1, 3), b = pick(0, 2);
    const int len = pick(1, p + 2);
    // staircase of gaps on top of the floor b+2
    std::vector<int> parts(static_cast<std::size_t>(len));
    int acc = pick(0, 3);
    for (int i = len - 1; i >= 0; --i) {
      parts[static_cast<std::size_t>(i)] = b + 2 + acc;
      acc += pick(0, 4);
    }
    long size = 0;
    for (int v : parts) size += v;
    const long margin = static_cast<long>(p) * (p + 1) / 2 + p;
    if (size - (b + 1) < margin) parts[0] += static_cast<int>(margin - (size - (b + 1)));
    Partition lambda(parts);
    const long e0 = l1_exponents(lambda, b, p).exponents[0];
    const int d = static_cast<int>(std::max<long>(1, e0 + pick(-1, 3)));
    out.push_back({lambda, b, p, d, len + 1});
  }
  return out;
}

// -------------------------------------------------------------- Green bound

BigInt h0_projective(int n, long e) {
  if (n < 1 || e < 0) throw std::invalid_argument("h0_projective: need n >= 1, e >= 0");
  return binomial(n - 1 + e, n - 1);
}

GreenN max_n_green(int p, int b, int q, int d) {
  if (p < 0 || b < 0 || q < 0 || d < 1) throw std::invalid_argument("max_n_green: invalid parameters");
  const long e = b + 1 + static_cast<long>(q - 1) * d;
  if (e <= 0) throw std::invalid_argument("max_n_green: exponent b+1+(q-1)d must be positive");
  if (h0_projective(2, e) > p + 1) throw std::invalid_argument("max_n_green: no n >= 2 satisfies the bound");
  GreenN g;
  g.n = 2;
  while (h0_projective(g.n + 1, e) <= p + 1) ++g.n;
  const BigInt target = BigInt(p + 1) * factorial(b + 1);
  int m = 0;
  for (;;) {
    BigInt pw = 1;
    for (int i = 0; i <= b; ++i) pw *= m + 1;
    if (pw > target) break;
    ++m;
  }
  g.lower_bound = m;
  g.lower_bound_holds = g.n >= m;
  return g;
}

// ----------------------------------------------------------- twin patterns

bool is_twin_pattern(const Partition& lambda, std::size_t len) {
  if (lambda.length() != len || len < 2) return false;
  const std::size_t m = len / 2;
  for (std::size_t i = 0; i < m; ++i)
    if (lambda[2 * i] != lambda[2 * i + 1]) return false;
  if (len % 2 == 1 && lambda[len - 1] != lambda[len - 2]) return false;
  return true;
}

namespace {

struct TwinBounds {
  Rational B;
  long lo, hi;
};

TwinBounds twin_bounds(int p, int b, int d, int n) {
  Rational B = std::max(Rational(b + 2), Rational(static_cast<long>(p) * (p + 1) / 2 + b + 1, n - 1));
  const long lo = ceil_to_long(B);
  const long hi = floor_to_long((Rational(static_cast<long>(p) * d) - Rational(n - 3) * B) / 2);
  return {B, lo, hi};
}

Rational twin_D(long lambda1, int d, int p, int n) {
  const Rational a(lambda1);
  const Rational b = Rational(static_cast<long>(p) * d - 2 * lambda1, n - 3);
  const Rational c = Rational(2 * (p - n + 1), static_cast<long>(n - 2) * (n - 3)) * lambda1 -
                     Rational(static_cast<long>(p + 1) * (p + 2), 2 * (n - 3));
  return std::min({a, b, c});
}

Partition twin_from_values(const std::vector<long>& v, std::size_t len) {
  std::vector<int> parts;
  for (long x : v) {
    parts.push_back(static_cast<int>(x));
    parts.push_back(static_cast<int>(x));
  }
  if (len % 2 == 1) parts.push_back(static_cast<int>(v.back()));
  return Partition(parts);
}

}  // namespace

std::vector<Partition> twin_pattern_partitions(int p, int b, int d, int n) {
  if (n < 5) throw std::invalid_argument("twin_pattern_partitions: n >= 5");
  const auto tb = twin_bounds(p, b, d, n);
  const std::size_t len = static_cast<std::size_t>(n - 1), m = len / 2;
  std::vector<Partition> out;
  std::vector<long> v(m);
  for (long l1 = tb.lo; l1 <= tb.hi; ++l1) {
    const long top = floor_to_long(twin_D(l1, d, p, n));
    v[0] = l1;
    // weakly decreasing v[1..m-1] in [lo, top]
    std::function<void(std::size_t, long)> rec = [&](std::size_t k, long cap) {
      if (k == m) {
        out.push_back(twin_from_values(v, len));
        return;
      }
      for (long x = cap; x >= tb.lo; --x) {
        v[k] = x;
        rec(k + 1, x);
      }
    };
    if (m == 1 || top >= tb.lo) rec(1, top);
  }
  return out;
}

std::vector<Partition> lotss_partitions(int p, int b, int d, int n) {
  if (n < 2) throw std::invalid_argument("lotss_partitions: n >= 2");
  const std::size_t rows = static_cast<std::size_t>(n - 1);
  // F[k] after processing degrees 0..e-1: shapes using k distinct degrees
  std::vector<std::set<Partition>> F(static_cast<std::size_t>(p) + 2);
  F[0].insert(Partition({b + 1}));
  for (int e = 0; e <= d - 1; ++e)
    for (int k = std::min(p + 1, e + 1); k >= 1; --k)
      for (const auto& mu : F[static_cast<std::size_t>(k - 1)])
        for (auto& nu : pieri(mu, e, rows)) F[static_cast<std::size_t>(k)].insert(std::move(nu));
  const auto& last = F[static_cast<std::size_t>(p) + 1];
  return {last.rbegin(), last.rend()};
}

PatternReport twin_pattern_census(int p, int b, int d, bool cross_check) {
  if (b < 1 || p < b + 1) throw std::invalid_argument("twin_pattern_census: need p >= b+1 >= 2");
  PatternReport rep;
  rep.kind = "twin";
  rep.p = p;
  rep.b = b;
  rep.d = d;
  rep.n = max_n_green(p, b, 1, d).n;
  const int n = rep.n;
  if (n < 5) {
    rep.path = "lotss";
    rep.B = std::max(Rational(b + 2), Rational(static_cast<long>(p) * (p + 1) / 2 + b + 1, n - 1));
    const auto parts = lotss_partitions(p, b, d, n);
    if (n == 2) {
      // one-row shapes: sums of p+1 distinct degrees in [0, d-1] plus b+1 form an interval
      rep.partitions = d >= p + 1 ? BigInt(static_cast<long>(p + 1) * (d - 1 - p) + 1) : BigInt(0);
      rep.direct_count = BigInt(parts.size());
    } else {
      rep.partitions = BigInt(parts.size());
    }
    for (const auto& lam : parts) rep.sample_ok = rep.sample_ok && static_cast<int>(lam.length()) <= n - 1;
    return rep;
  }
  rep.path = "twin";
  const auto tb = twin_bounds(p, b, d, n);
  rep.B = tb.B;
  rep.lambda1_min = tb.lo;
  rep.lambda1_max = tb.hi;
  const long m = (n - 1) / 2, k = (n - 5) / 2;
  BigInt total = 0, literal = 0;
  for (long l1 = tb.lo; l1 <= tb.hi; ++l1) {
    const long top = floor_to_long(twin_D(l1, d, p, n));
    const long span = top - tb.lo;
    if (span >= 0 || m == 1) total += binomial(span + m - 1, m - 1);
    if (span + k >= 0) literal += binomial(span + k, k);
  }
  rep.partitions = total;
  rep.literal_count = literal;
  if (cross_check) {
    const auto parts = twin_pattern_partitions(p, b, d, n);
    rep.direct_count = BigInt(parts.size());
    for (const auto& lam : parts)
      rep.sample_ok = rep.sample_ok && is_twin_pattern(lam, static_cast<std::size_t>(n - 1)) &&
                      Rational(lam[static_cast<std::size_t>(n - 2)]) >= tb.B &&
                      Rational(lam[2]) <= twin_D(lam[0], d, p, n);
  }
  return rep;
}

// --------------------------------------------------- almost-triplet patterns

bool is_almost_triplet(const Partition& lambda) {
  if (lambda.empty()) return false;
  const std::size_t len = lambda.length();
  std::vector<int> bar;
  for (std::size_t i = 0; i < len; ++i)
    if (lambda[i] - 1 > 0) bar.push_back(lambda[i] - 1);
  if (bar.size() < 3 || bar.size() % 3 != 0) return false;
  if (bar[1] != bar[2]) return false;
  for (std::size_t g = 3; g < bar.size(); g += 3)
    if (bar[g] != bar[g + 1] || bar[g] != bar[g + 2]) return false;
  return true;
}

Partition mold(const Partition& lambda) {
  if (!is_almost_triplet(lambda)) throw std::invalid_argument("mold: " + lambda.str() + " has no almost triplet pattern");
  std::vector<int> bar;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    if (lambda[i] > 1) bar.push_back(lambda[i] - 1);
  bar[0] = bar[1];
  return Partition(bar);
}

namespace {

// 2*nu + (1^w) + eps*(w) in row 1, with nu = triple(mu) and any remainder of
// the target size |nu| = w*e placed in row 1: a member of wedge^w S^{2e+1+eps}.
std::vector<int> wedge_block(const Partition& mu, int w, int e, int eps) {
  const long target = static_cast<long>(w) * e;
  std::vector<int> nu;
  for (int v : mu.parts())
    for (int t = 0; t < 3; ++t) nu.push_back(v);
  long have = 3 * mu.size();
  if (nu.empty()) nu.push_back(0);
  nu[0] += static_cast<int>(target - have);
  std::vector<int> out(static_cast<std::size_t>(w), 1);
  for (std::size_t i = 0; i < nu.size(); ++i) out[i] += 2 * nu[i];
  out[0] += eps * w;
  return out;
}

struct TripletPlan {
  int r = 0;
  int e1 = 0, eps1 = 0;
  std::vector<std::vector<int>> fixed;  // contributions of the other blocks
  long row_extra = 0;                   // one-row factors and S^{b+1}
};

TripletPlan plan_triplets(int p, int b, int n, int d, bool multi) {
  if (b < 0) throw std::invalid_argument("almost_triplet: b >= 0");
  if (multi) {
    if (n < 5 || n > p + 1) throw std::invalid_argument("almost_triplet (multi-wedge): need 5 <= n <= p+1");
    if (d < 3 * ((p + 1) / (n - 4)) + 3) throw std::invalid_argument("almost_triplet (multi-wedge): d too small");
  } else {
    if (n < 4 || n > p + 1) throw std::invalid_argument("almost_triplet: need 4 <= n <= p+1");
    if (d < p + 2 || d < 3 * ((p + 1) / (n - 3)) + 3)
      throw std::invalid_argument("almost_triplet: need d >= max(p+2, 3[(p+1)/(n-3)]+3)");
  }
  TripletPlan plan;
  for (int r = 1; r <= 3; ++r)
    if (((d - r) % 3 + 3) % 3 == 1) plan.r = r;
  const int d1 = d - plan.r;
  plan.eps1 = (d1 - 1) % 2;
  plan.e1 = (d1 - 1 - plan.eps1) / 2;
  plan.row_extra = b + 1;
  if (!multi) {
    for (int k = 0; k <= p - n + 1; ++k) plan.row_extra += d1 - 1 - k;
    return plan;
  }
  const int w = 3 * ((n - 1) / 3);
  int remaining = p + 1 - (n - 1);
  std::set<int> used = {d1};
  int deg = d1;
  while (remaining >= w) {
    deg -= 3;
    if (deg < 1) throw std::invalid_argument("almost_triplet (multi-wedge): not enough wedge degrees");
    used.insert(deg);
    const int eps = (deg - 1) % 2, e = (deg - 1 - eps) / 2;
    const Partition mu({(w * e) / 3});
    plan.fixed.push_back(wedge_block(mu, w, e, eps));
    remaining -= w;
  }
  for (int j = d - 1; j >= 0 && remaining > 0; --j) {
    if (used.count(j)) continue;
    plan.row_extra += j;
    --remaining;
  }
  if (remaining > 0) throw std::invalid_argument("almost_triplet (multi-wedge): not enough free degrees");
  return plan;
}

}  // namespace

std::vector<Partition> almost_triplet_partitions(int p, int b, int n, int d, const TripletOptions& opt) {
  const TripletPlan plan = plan_triplets(p, b, n, d, opt.multi_wedge);
  const int w = n - 1;
  const int l = w / 3;
  std::vector<Partition> out;
  for (const auto& mu : partitions_of(static_cast<int>((static_cast<long>(w) * plan.e1) / 3), l)) {
    std::vector<int> parts = wedge_block(mu, w, plan.e1, plan.eps1);
    for (const auto& blk : plan.fixed)
      for (std::size_t i = 0; i < blk.size(); ++i) parts[i] += blk[i];
    parts[0] += static_cast<int>(plan.row_extra);
    out.push_back(Partition(parts));
  }
  return out;
}

PatternReport almost_triplet_census(int p, int b, int n, int d, const TripletOptions& opt) {
  PatternReport rep;
  rep.kind = "almost-triplet";
  rep.path = opt.multi_wedge ? "multi-wedge" : "single-wedge";
  rep.p = p;
  rep.b = b;
  rep.d = d;
  rep.n = n;
  const auto parts = almost_triplet_partitions(p, b, n, d, opt);
  std::set<Partition> molds;
  for (const auto& lam : parts) {
    const bool ok = static_cast<int>(lam.length()) == n - 1 && is_almost_triplet(lam);
    rep.sample_ok = rep.sample_ok && ok;
    if (ok) molds.insert(mold(lam));
  }
  rep.partitions = BigInt(parts.size());
  rep.molds = BigInt(molds.size());
  return rep;
}

// ------------------------------------------------------------ ratio harness

std::vector<std::string> ratio_theorems() { return {"kp10d-N", "t2sw", "remtctb-N", "remtctb-c", "asy1", "t2p"}; }

namespace {

BigInt N_of(const WeightTable& t) { return total_multiplicity(schur_decompose(t)); }
BigInt c_of(const WeightTable& t) { return complexity(schur_decompose(t)); }

WeightTable schur_plethysm(const Partition& mu, int d, int n, const ResourceLimits& limits) {
  const int p = static_cast<int>(mu.size());
  if (mu == Partition({p})) return char_sym_sym(p, d, n, limits);
  if (mu == column(p)) return char_wedge_sym(p, d, n, limits);
  if (mu == Partition({2, 1})) {
    // S_(2,1) appears twice in the tensor cube: (T - S^3 - wedge^3) / 2
    const auto t = char_tensor_sym(3, d, n, limits);
    const auto s = char_sym_sym(3, d, n, limits);
    const auto w = char_wedge_sym(3, d, n, limits);
    WeightTable out(n, t.degree());
    for (const auto& [wt, m] : t.entries()) {
      const BigInt v = m - s.at(wt) - w.at(wt);
      if (v < 0 || v % 2 != 0) throw NotACharacter("S_(2,1) character is not integral");
      out.add(wt, v / 2);
    }
    return out;
  }
  throw std::invalid_argument("t2p: supported mu are (p), (1^p) and (2,1)");
}

}  // namespace

RatioTable ratio_experiment(const std::string& theorem, const RatioParams& params, const std::vector<int>& ds,
                            const ResourceLimits& limits) {
  RatioTable tab;
  tab.theorem = theorem;
  tab.p = params.p;
  tab.b = params.b;
  tab.mu = params.mu;
  const int p = params.p, b = params.b;
  if (p < 1 || b < 0) throw std::invalid_argument("ratio_experiment: need p >= 1, b >= 0");
  std::function<std::pair<BigInt, BigInt>(int)> eval;
  if (theorem == "kp10d-N") {
    tab.n = params.n.value_or(p + 1);
    tab.limit = Rational(BigInt(p), factorial(p + 1));
    eval = [&](int d) {
      return std::pair{total_multiplicity(syzygy_decompose({p, 1, 0, d, tab.n}, limits)),
                       N_of(char_tensor_sym(p + 1, d, tab.n, limits))};
    };
  } else if (theorem == "t2sw") {
    tab.n = params.n.value_or(p);
    tab.limit = 1;
    eval = [&](int d) {
      return std::pair{N_of(char_sym_sym(p, d, tab.n, limits)), N_of(char_wedge_sym(p, d, tab.n, limits))};
    };
  } else if (theorem == "remtctb-N" || theorem == "remtctb-c") {
    tab.n = params.n.value_or(p + 1);
    const bool mult = theorem == "remtctb-N";
    tab.limit = mult ? Rational(binomial(b + p, p)) : Rational(b + 1);
    eval = [&, mult](int d) {
      std::vector<int> degs(static_cast<std::size_t>(p), d);
      const auto base = char_sym_product(degs, tab.n, limits);
      degs.push_back(b);
      const auto twisted = char_sym_product(degs, tab.n, limits);
      return mult ? std::pair{N_of(twisted), N_of(base)} : std::pair{c_of(twisted), c_of(base)};
    };
  } else if (theorem == "asy1") {
    tab.n = params.n.value_or(p + 1);
    tab.limit = Rational(BigInt(1), factorial(p));
    eval = [&](int d) {
      const auto w = char_multiply(char_wedge_sym(p, d, tab.n, limits), char_sym_product({d}, tab.n, limits), limits);
      return std::pair{N_of(w), N_of(char_tensor_sym(p + 1, d, tab.n, limits))};
    };
  } else if (theorem == "t2p") {
    if (params.mu.size() != p) throw std::invalid_argument("t2p: mu must be a partition of p");
    tab.n = params.n.value_or(p);
    tab.limit = Rational(sym_group_irrep_dim(params.mu), factorial(p));
    eval = [&](int d) {
      return std::pair{N_of(schur_plethysm(params.mu, d, tab.n, limits)), N_of(char_tensor_sym(p, d, tab.n, limits))};
    };
  } else {
    throw std::invalid_argument("ratio_experiment: unknown theorem id '" + theorem + "'");
  }
  tab.rows.resize(ds.size());
  parallel_for(ds.size(), limits.threads, [&](std::size_t i) {
    const int d = ds[i];
    if (d < 1) throw std::invalid_argument("ratio_experiment: d >= 1");
    auto [num, den] = eval(d);
    if (den == 0) throw std::invalid_argument("ratio_experiment: denominator vanishes at d = " + std::to_string(d));
    tab.rows[i] = {d, num, den, Rational(num, den)};
  });
  std::sort(tab.rows.begin(), tab.rows.end(), [](const RatioRow& a, const RatioRow& b) { return a.d < b.d; });
  return tab;
}

}  // namespace veronese
