#pragma once

#include "veronese/characters.hpp"
#include "veronese/integer_matrix.hpp"

#include <array>
#include <functional>
#include <vector>

namespace veronese {

/// Parameters of the three-term complex
///   wedge^{p+1} S^d (x) S^{(q-1)d+b} -> wedge^p S^d (x) S^{qd+b} -> wedge^{p-1} S^d (x) S^{(q+1)d+b}
/// evaluated on C^n. Terms with a negative exponent are zero.
struct KoszulSpec {
  int p = 0;
  int q = 0;
  int b = 0;
  int d = 1;
  int n = 1;

  /// Torus degree shared by all three terms: (p+q)d + b.
  long degree() const { return static_cast<long>(p + q) * d + b; }
  /// Exterior exponent and symmetric degree of term k in {0 = left, 1 = middle, 2 = right}.
  int wedge_exponent(int k) const { return p + 1 - k; }
  long sym_degree(int k) const { return static_cast<long>(q - 1 + k) * d + b; }
  /// n < p+1 may drop Schur functors: the middle term only has partitions of length <= p+1.
  bool truncated() const { return n < p + 1; }
};

/// Smallest n for which K_{p,q}(C^n, b; d) sees every Schur functor.
inline int default_koszul_n(int p) { return p + 1 > 1 ? p + 1 : 1; }

/// One torus-weight block of the complex.
struct KoszulBlock {
  Weight weight;
  std::array<std::size_t, 3> dims{};  // left, middle, right
  IntMatrix d_in;                     // middle x left
  IntMatrix d_out;                    // right x middle
};

/// Assembles block matrices for one spec. The monomial basis of S^d is in
/// decreasing lex order; wedge factors are index tuples i_0 < i_1 < ...
class KoszulComplex {
 public:
  explicit KoszulComplex(const KoszulSpec& spec, const ResourceLimits& limits = {});

  const KoszulSpec& spec() const { return spec_; }

  /// Block at any weight with n entries (not necessarily dominant).
  KoszulBlock block(const Weight& w) const;
  /// Dominant weights at which the middle term is nonzero, decreasing lex.
  std::vector<Weight> dominant_weights() const;

 private:
  std::vector<std::vector<int>> basis(const Weight& w, int k) const;
  IntMatrix differential(const std::vector<std::vector<int>>& source,
                         const std::vector<std::vector<int>>& target) const;

  KoszulSpec spec_;
  ResourceLimits limits_;
  std::vector<Weight> mono_;
};

/// middle - rank(d_in) - rank(d_out); throws std::logic_error if negative.
std::size_t cohomology_dimension(const KoszulBlock& block);
bool composite_is_zero(const KoszulBlock& block);

/// All blocks at dominant weights with a nonzero middle term.
std::vector<KoszulBlock> build_blocks(const KoszulSpec& spec, const ResourceLimits& limits = {});
void for_each_block(const KoszulSpec& spec, const std::function<void(const KoszulBlock&)>& visit,
                    const ResourceLimits& limits = {});

/// Character of the middle cohomology on dominant weights.
WeightTable syzygy_character(const KoszulSpec& spec, const ResourceLimits& limits = {});
SchurExpansion syzygy_decompose(const KoszulSpec& spec, const ResourceLimits& limits = {});

/// Vanishing for q >= 2 and d >= p in the untwisted case. Requires b == 0.
bool green_vanishing_predicted(int p, int q, int b, int d);
/// Conservative twisted variant: q >= 2 and d >= p + b.
bool green_vanishing_predicted_twisted(int p, int q, int b, int d);

/// Decomposition of S^{p+1} S^{d-1} (C^n) with every lambda replaced by
/// lambda + (1^{p+2}); the predicted value of K_{p+1,0}(C^n, 1; d).
/// Requires n >= p+2 and d >= 2.
SchurExpansion raicu_predicted_kp0(int p, int d, int n, const ResourceLimits& limits = {});

}  // namespace veronese
