#include "veronese/koszul.hpp"

#include "veronese/parallel.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace veronese {

KoszulComplex::KoszulComplex(const KoszulSpec& spec, const ResourceLimits& limits)
    : spec_(spec), limits_(limits) {
  if (spec.p < 0 || spec.q < 0 || spec.b < 0 || spec.d < 1 || spec.n < 1)
    throw std::invalid_argument("KoszulSpec: need p,q,b >= 0 and d,n >= 1");
  mono_ = monomials(spec.d, spec.n);
}

std::vector<std::vector<int>> KoszulComplex::basis(const Weight& w, int k) const {
  std::vector<std::vector<int>> out;
  const int wedge = spec_.wedge_exponent(k);
  if (wedge < 0 || spec_.sym_degree(k) < 0 || wedge > static_cast<int>(mono_.size())) return out;
  const std::size_t n = static_cast<std::size_t>(spec_.n);
  Weight rest = w;
  std::vector<int> tuple;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(tuple.size()) == wedge) {
      out.push_back(tuple);
      limits_.check_dim(out.size(), "Koszul basis");
      return;
    }
    const std::size_t need = static_cast<std::size_t>(wedge) - tuple.size();
    for (std::size_t j = from; j + need <= mono_.size(); ++j) {
      const Weight& m = mono_[j];
      bool fits = true;
      for (std::size_t v = 0; v < n; ++v)
        if (m[v] > rest[v]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (std::size_t v = 0; v < n; ++v) rest[v] -= m[v];
      tuple.push_back(static_cast<int>(j));
      rec(j + 1);
      tuple.pop_back();
      for (std::size_t v = 0; v < n; ++v) rest[v] += m[v];
    }
  };
  rec(0);
  return out;
}

IntMatrix KoszulComplex::differential(const std::vector<std::vector<int>>& source,
                                      const std::vector<std::vector<int>>& target) const {
  IntMatrix m(target.size(), source.size());
  if (source.empty() || target.empty()) return m;
  std::unordered_map<std::vector<int>, std::size_t, VectorHash> index;
  index.reserve(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);
  std::vector<int> face;
  for (std::size_t c = 0; c < source.size(); ++c) {
    const auto& t = source[c];
    for (std::size_t i = 0; i < t.size(); ++i) {
      face.assign(t.begin(), t.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      auto it = index.find(face);
      if (it == index.end()) throw std::logic_error("Koszul differential: face outside target basis");
      m(it->second, c) += (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

KoszulBlock KoszulComplex::block(const Weight& w) const {
  if (static_cast<int>(w.size()) != spec_.n) throw std::invalid_argument("KoszulComplex::block: weight size != n");
  KoszulBlock blk;
  blk.weight = w;
  if (std::accumulate(w.begin(), w.end(), 0L) != spec_.degree()) return blk;
  for (int v : w)
    if (v < 0) return blk;
  auto left = basis(w, 0);
  auto mid = basis(w, 1);
  auto right = basis(w, 2);
  blk.dims = {left.size(), mid.size(), right.size()};
  limits_.check_entries(mid.size() * (left.size() + right.size()), "Koszul block matrices");
  blk.d_in = differential(left, mid);
  blk.d_out = differential(mid, right);
  return blk;
}

std::vector<Weight> KoszulComplex::dominant_weights() const {
  std::vector<Weight> out;
  const long deg = spec_.degree();
  const int wedge = spec_.wedge_exponent(1);
  if (wedge < 0 || spec_.sym_degree(1) < 0 || wedge > static_cast<int>(mono_.size())) return out;
  for (const auto& lambda : partitions_of(static_cast<int>(deg), spec_.n)) {
    Weight w = lambda.padded(static_cast<std::size_t>(spec_.n));
    if (!basis(w, 1).empty()) out.push_back(std::move(w));
  }
  return out;
}

std::size_t cohomology_dimension(const KoszulBlock& block) {
  const std::size_t r_in = rank(block.d_in);
  const std::size_t r_out = rank(block.d_out);
  if (r_in + r_out > block.dims[1])
    throw std::logic_error("negative cohomology dimension at a Koszul block");
  return block.dims[1] - r_in - r_out;
}

bool composite_is_zero(const KoszulBlock& block) {
  if (block.d_in.cols() == 0 || block.d_out.rows() == 0) return true;
  return block.d_out.multiply(block.d_in).is_zero();
}

void for_each_block(const KoszulSpec& spec, const std::function<void(const KoszulBlock&)>& visit,
                    const ResourceLimits& limits) {
  KoszulComplex cx(spec, limits);
  for (const auto& w : cx.dominant_weights()) visit(cx.block(w));
}

std::vector<KoszulBlock> build_blocks(const KoszulSpec& spec, const ResourceLimits& limits) {
  std::vector<KoszulBlock> out;
  for_each_block(spec, [&](const KoszulBlock& b) { out.push_back(b); }, limits);
  return out;
}

WeightTable syzygy_character(const KoszulSpec& spec, const ResourceLimits& limits) {
  KoszulComplex cx(spec, limits);
  const auto weights = cx.dominant_weights();
  std::vector<std::size_t> dims(weights.size());
  parallel_for(weights.size(), limits.threads,
               [&](std::size_t i) { dims[i] = cohomology_dimension(cx.block(weights[i])); });
  WeightTable table(spec.n, spec.degree());
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (dims[i] > 0) table.add(weights[i], BigInt(dims[i]));
  return table;
}

SchurExpansion syzygy_decompose(const KoszulSpec& spec, const ResourceLimits& limits) {
  return schur_decompose(syzygy_character(spec, limits));
}

bool green_vanishing_predicted(int p, int q, int b, int d) {
  if (b != 0) throw std::invalid_argument("green_vanishing_predicted: untwisted statement needs b = 0");
  return q >= 2 && d >= p;
}

bool green_vanishing_predicted_twisted(int p, int q, int b, int d) { return q >= 2 && d >= p + b; }

SchurExpansion raicu_predicted_kp0(int p, int d, int n, const ResourceLimits& limits) {
  if (p < 0) throw std::invalid_argument("raicu_predicted_kp0: p must be nonnegative");
  if (d < 2) throw std::invalid_argument("raicu_predicted_kp0: need d >= 2");
  if (n < p + 2) throw std::invalid_argument("raicu_predicted_kp0: need n >= p+2 for the column shift");
  const SchurExpansion base = schur_decompose(char_sym_sym(p + 1, d - 1, n, limits));
  SchurExpansion out(n, static_cast<long>(p + 1) * d + 1);
  const Partition col = column(p + 2);
  for (const auto& [lambda, m] : base.terms()) out.add(add(lambda, col), m);
  return out;
}

}  // namespace veronese
