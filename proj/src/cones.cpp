#include "veronese/cones.hpp"

#include "veronese/parallel.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace veronese {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

Functional normalized(Functional f) {
  long g = std::abs(f.c);
  for (long v : f.a) g = std::gcd(g, std::abs(v));
  if (g > 1) {
    for (long& v : f.a) v /= g;
    f.c /= g;
  }
  return f;
}

bool is_constant(const Functional& f) {
  return std::all_of(f.a.begin(), f.a.end(), [](long v) { return v == 0; });
}

/// Removes exact duplicates and, for equal normals, keeps the tightest constant.
std::vector<Functional> tidy(const std::vector<Functional>& in) {
  std::map<std::vector<long>, long> best;
  for (const auto& f0 : in) {
    Functional f = normalized(f0);
    auto [it, inserted] = best.try_emplace(f.a, f.c);
    if (!inserted) it->second = std::min(it->second, f.c);
  }
  std::vector<Functional> out;
  out.reserve(best.size());
  for (const auto& [a, c] : best) out.push_back({a, c});
  return out;
}

std::vector<Functional> eliminate(const std::vector<Functional>& in, std::size_t var) {
  std::vector<Functional> keep, pos, neg;
  for (const auto& f : in) {
    if (f.a[var] > 0)
      pos.push_back(f);
    else if (f.a[var] < 0)
      neg.push_back(f);
    else
      keep.push_back(f);
  }
  for (const auto& P : pos)
    for (const auto& N : neg) {
      const long mp = -N.a[var], mn = P.a[var];
      Functional f;
      f.a.resize(P.a.size());
      for (std::size_t i = 0; i < P.a.size(); ++i) f.a[i] = mp * P.a[i] + mn * N.a[i];
      f.a[var] = 0;
      f.c = mp * P.c + mn * N.c;
      keep.push_back(f);
    }
  return tidy(keep);
}

}  // namespace

Rational Functional::eval(const std::vector<Rational>& x, const Rational& level) const {
  Rational s = Rational(c) * level;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * x[i];
  return s;
}

ConeCrossSection::ConeCrossSection(std::string label, std::size_t dim, std::vector<Functional> inequalities)
    : label_(std::move(label)), dim_(dim) {
  for (auto& f : inequalities) {
    if (f.a.size() != dim) throw std::invalid_argument("ConeCrossSection: functional of the wrong dimension");
    if (is_constant(f) && f.c >= 0) continue;
    ineq_.push_back(normalized(f));
  }
  ineq_ = tidy(ineq_);
  stages_.resize(dim);
  std::vector<Functional> cur = ineq_;
  for (std::size_t j = dim; j-- > 0;) {
    bool lower = false, upper = false;
    for (const auto& f : cur) {
      if (f.a[j] == 0) continue;
      stages_[j].push_back(f);
      (f.a[j] > 0 ? lower : upper) = true;
    }
    if (!lower || !upper) throw std::invalid_argument(label_ + ": slice is unbounded in coordinate " + std::to_string(j));
    cur = eliminate(cur, j);
  }
}

bool ConeCrossSection::contains(const std::vector<Rational>& x, const Rational& level) const {
  for (const auto& f : ineq_)
    if (f.eval(x, level) < 0) return false;
  return true;
}

bool ConeCrossSection::strictly_contains(const std::vector<Rational>& x, const Rational& level) const {
  for (const auto& f : ineq_)
    if (f.eval(x, level) <= 0) return false;
  return true;
}

bool ConeCrossSection::contains(const std::vector<long>& x, long level) const {
  for (const auto& f : ineq_) {
    long s = f.c * level;
    for (std::size_t i = 0; i < dim_; ++i) s += f.a[i] * x[i];
    if (s < 0) return false;
  }
  return true;
}

std::pair<Rational, Rational> ConeCrossSection::coordinate_range(std::size_t i) const {
  if (i >= dim_) throw std::out_of_range("coordinate_range");
  std::vector<Functional> cur = ineq_;
  for (std::size_t j = dim_; j-- > 0;)
    if (j != i) cur = eliminate(cur, j);
  std::optional<Rational> lo, hi;
  for (const auto& f : cur) {
    if (f.a[i] > 0) {
      Rational v(-f.c, f.a[i]);
      if (!lo || v > *lo) lo = v;
    } else if (f.a[i] < 0) {
      Rational v(f.c, -f.a[i]);
      if (!hi || v < *hi) hi = v;
    }
  }
  if (!lo || !hi) throw std::logic_error(label_ + ": coordinate unbounded");
  return {*lo, *hi};
}

// ------------------------------------------------------------------ builders

ConeCrossSection build_Y(int p) {
  if (p < 1) throw std::invalid_argument("build_Y: p >= 1");
  const std::size_t dim = static_cast<std::size_t>(p - 1);
  std::vector<Functional> ineq;
  if (p >= 2) {
    // lambda_1 - lambda_2 >= 0 with lambda_1 = p t - sum_{k>=2} lambda_k
    Functional f{std::vector<long>(dim, -1), p};
    f.a[0] = -2;
    ineq.push_back(f);
    for (std::size_t k = 0; k + 1 < dim; ++k) {
      Functional g{std::vector<long>(dim, 0), 0};
      g.a[k] = 1;
      g.a[k + 1] = -1;
      ineq.push_back(g);
    }
    Functional last{std::vector<long>(dim, 0), 0};
    last.a[dim - 1] = 1;
    ineq.push_back(last);
  }
  return ConeCrossSection("Y(" + std::to_string(p) + ")", dim, ineq);
}

std::size_t multY_index(int p, int i, int j) {
  // rows 0..i-1 contribute (p-1) + (p-2) + ... + (p-i) entries
  const int before = i * (2 * p - i - 1) / 2;
  return static_cast<std::size_t>(before + (j - i - 1));
}

ConeCrossSection build_multY(int p) {
  if (p < 1) throw std::invalid_argument("build_multY: p >= 1");
  const std::size_t dim = static_cast<std::size_t>(p * (p - 1) / 2);
  // Entry t_ij as a functional in (coordinates, level).
  auto entry = [&](int i, int j) {
    Functional f{std::vector<long>(dim, 0), 0};
    if (i < j) {
      f.a[multY_index(p, i, j)] = 1;
    } else if (i == j) {
      f.c = 1;
      for (int k = 0; k < j; ++k) f.a[multY_index(p, k, j)] = -1;
    }
    return f;
  };
  auto axpy = [](Functional& acc, const Functional& f, long s) {
    for (std::size_t i = 0; i < acc.a.size(); ++i) acc.a[i] += s * f.a[i];
    acc.c += s * f.c;
  };
  std::vector<Functional> ineq;
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) ineq.push_back(entry(i, j));
  for (int i = 0; i + 1 < p; ++i)
    for (int j = 0; j < p; ++j) {
      Functional f{std::vector<long>(dim, 0), 0};
      for (int k = i; k <= j - 1; ++k) axpy(f, entry(i, k), 1);
      for (int k = i + 1; k <= j; ++k) axpy(f, entry(i + 1, k), -1);
      ineq.push_back(f);
    }
  return ConeCrossSection("multY(" + std::to_string(p) + ")", dim, ineq);
}

// --------------------------------------------------------------- enumeration

namespace {

struct Enumerator {
  const ConeCrossSection& cone;
  long level;
  const ResourceLimits& limits;
  std::uint64_t nodes = 0;
  std::vector<long> x;

  std::pair<long, long> bounds(std::size_t j) const {
    long lo = std::numeric_limits<long>::min(), hi = std::numeric_limits<long>::max();
    for (const auto& f : cone.stage(j)) {
      long s = f.c * level;
      for (std::size_t i = 0; i < j; ++i) s += f.a[i] * x[i];
      if (f.a[j] > 0)
        lo = std::max(lo, ceil_div(-s, f.a[j]));
      else
        hi = std::min(hi, floor_div(s, -f.a[j]));
    }
    return {lo, hi};
  }

  template <class Visit>
  void rec(std::size_t j, Visit& visit) {
    if (++nodes > limits.max_nodes) limits.check_nodes(nodes, "lattice enumeration");
    if (j == cone.dim()) {
      visit(x);
      return;
    }
    auto [lo, hi] = bounds(j);
    for (long v = lo; v <= hi; ++v) {
      x[j] = v;
      rec(j + 1, visit);
    }
  }
};

bool constants_hold(const ConeCrossSection& cone, long level) {
  // constant rows are kept only when they can fail: a == 0, c < 0
  for (const auto& f : cone.inequalities()) {
    bool zero = true;
    for (long v : f.a) zero = zero && v == 0;
    if (zero && f.c * level < 0) return false;
  }
  return true;
}

}  // namespace

void for_each_point(const ConeCrossSection& cone, long d, const std::function<void(const std::vector<long>&)>& visit,
                    const ResourceLimits& limits) {
  if (d < 0 || !constants_hold(cone, d)) return;
  Enumerator e{cone, d, limits, 0, std::vector<long>(cone.dim(), 0)};
  auto v = [&](const std::vector<long>& x) {
    if (cone.contains(x, d)) visit(x);
  };
  e.rec(0, v);
}

BigInt lattice_count(const ConeCrossSection& cone, long d, const ResourceLimits& limits) {
  if (d < 0 || !constants_hold(cone, d)) return 0;
  if (cone.dim() == 0) return 1;
  Enumerator top{cone, d, limits, 0, std::vector<long>(cone.dim(), 0)};
  auto [lo, hi] = top.bounds(0);
  if (hi < lo) return 0;
  const std::size_t branches = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::uint64_t> counts(branches, 0);
  parallel_for(branches, limits.threads, [&](std::size_t b) {
    Enumerator e{cone, d, limits, 0, std::vector<long>(cone.dim(), 0)};
    e.x[0] = lo + static_cast<long>(b);
    std::uint64_t c = 0;
    auto v = [&](const std::vector<long>&) { ++c; };
    e.rec(1, v);
    counts[b] = c;
  });
  BigInt total = 0;
  for (auto c : counts) total += c;
  return total;
}

// ------------------------------------------------------------ special points

std::vector<Rational> interior_point_Y(int p) {
  // lambda_k = 2 (p - k + 1) / (p + 1), which sums to p
  std::vector<Rational> x;
  for (int k = 2; k <= p; ++k) x.emplace_back(2 * (p - k + 1), p + 1);
  return x;
}

std::vector<Rational> perturbed_point_multY(int p, bool geometric_rows) {
  const std::size_t dim = static_cast<std::size_t>(p * (p - 1) / 2);
  std::vector<Rational> x(dim);
  Rational eps(1);
  for (int k = 0; k < p + 2; ++k) eps /= p;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      const int row = i + 1;
      const int e = geometric_rows ? row : p - row;
      Rational base(1);
      for (int k = 0; k < e; ++k) base *= p;
      x[multY_index(p, i, j)] = base * eps;
    }
  return x;
}

std::vector<long> moment_map(const RowContentMatrix& m) {
  if (!m.valid()) throw std::invalid_argument("moment_map: " + *m.first_violation());
  std::vector<long> out;
  for (int i = 1; i < m.p(); ++i) {
    long s = 0;
    for (int j = i; j < m.p(); ++j) s += m(i, j);
    out.push_back(s);
  }
  out.push_back(m.d());
  return out;
}

// ----------------------------------------------------------- max multiplicity

MaxMultiplicityReport max_multiplicity(int p, int d) {
  if (p < 1 || d < 0) throw std::invalid_argument("max_multiplicity: p >= 1, d >= 0");
  MaxMultiplicityReport rep;
  KostkaCache kc;
  const std::vector<int> weight(static_cast<std::size_t>(p), d);
  for (const auto& lambda : partitions_of(p * d, p)) {
    BigInt k = kc(lambda, weight);
    if (k > rep.value) {
      rep.value = k;
      rep.argmax = lambda;
    }
  }
  const int e = (p - 1) * (p - 2) / 2;
  if (p > 4) {
    rep.diagnostic = "box constant not computed for p > 4";
    return rep;
  }
  // Coordinates t_ij with j >= i+2 complete the moment map to a linear
  // isomorphism; the box is taken over those.
  const auto cone = build_multY(p);
  long l = 0;
  for (int i = 0; i < p; ++i)
    for (int j = i + 2; j < p; ++j) {
      auto [lo, hi] = cone.coordinate_range(multY_index(p, i, j));
      l = std::max({l, ceil_to_long(abs(lo)), ceil_to_long(abs(hi))});
    }
  rep.box_constant = l;
  BigInt bound = 1;
  for (int k = 0; k < e; ++k) bound *= 3 * l * std::max(1, d);
  rep.bound = bound;
  rep.bound_holds = rep.value <= bound;
  return rep;
}

// ------------------------------------------------------------- extrapolation

FitReport fit_leading_coefficient(std::vector<std::pair<long, BigInt>> samples, int degree) {
  if (degree < 0) throw std::invalid_argument("fit_leading_coefficient: negative degree");
  std::sort(samples.begin(), samples.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < samples.size(); ++i)
    if (samples[i].first == samples[i + 1].first)
      throw std::invalid_argument("fit_leading_coefficient: repeated d");
  if (samples.size() < static_cast<std::size_t>(degree) + 2)
    throw std::invalid_argument("fit_leading_coefficient: need at least degree+2 samples");
  for (const auto& s : samples)
    if (s.first <= 0) throw std::invalid_argument("fit_leading_coefficient: d must be positive");

  const std::size_t w = static_cast<std::size_t>(degree) + 1;
  std::vector<Rational> xs, ys;
  for (const auto& [d, c] : samples) {
    xs.emplace_back(1, d);
    Rational y(c);
    for (int k = 0; k < degree; ++k) y /= d;
    ys.push_back(y);
  }
  FitReport rep;
  for (std::size_t start = 0; start + w <= samples.size(); ++start) {
    // Neville's scheme evaluated at x = 0.
    std::vector<Rational> t(ys.begin() + static_cast<std::ptrdiff_t>(start),
                            ys.begin() + static_cast<std::ptrdiff_t>(start + w));
    for (std::size_t m = 1; m < w; ++m)
      for (std::size_t i = 0; i + m < w; ++i) {
        const Rational& xi = xs[start + i];
        const Rational& xj = xs[start + i + m];
        t[i] = (xi * t[i + 1] - xj * t[i]) / (xi - xj);
      }
    rep.window_estimates.push_back(t[0]);
  }
  rep.estimate = rep.window_estimates.back();
  const Rational& prev = rep.window_estimates[rep.window_estimates.size() - 2];
  const Rational diff = abs(rep.estimate - prev);
  rep.residual = rep.estimate == 0 ? diff : Rational(diff / abs(rep.estimate));
  return rep;
}

}  // namespace veronese
