#pragma once

#include "veronese/numeric.hpp"
#include "veronese/partition.hpp"
#include "veronese/tableau.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace veronese {

/// a.x + c*t >= 0, where t is the level coordinate. Stored in primitive
/// integer form.
struct Functional {
  std::vector<long> a;
  long c = 0;

  Rational eval(const std::vector<Rational>& x, const Rational& level) const;
  friend bool operator==(const Functional&, const Functional&) = default;
};

/// Rational polyhedral cone given by its level-1 cross section. On
/// construction the system is projected coordinate by coordinate
/// (Fourier-Motzkin) so that lattice points can be enumerated with exact
/// per-coordinate bounds; an unbounded coordinate is rejected.
class ConeCrossSection {
 public:
  ConeCrossSection(std::string label, std::size_t dim, std::vector<Functional> inequalities);

  const std::string& label() const { return label_; }
  /// Number of slice coordinates (the level is extra).
  std::size_t dim() const { return dim_; }
  const std::vector<Functional>& inequalities() const { return ineq_; }

  bool contains(const std::vector<Rational>& x, const Rational& level) const;
  bool strictly_contains(const std::vector<Rational>& x, const Rational& level) const;
  bool contains(const std::vector<long>& x, long level) const;

  /// Exact [min, max] of coordinate i over the level-1 slice.
  std::pair<Rational, Rational> coordinate_range(std::size_t i) const;

  /// Constraints of the projection onto the first j+1 coordinates that
  /// involve coordinate j.
  const std::vector<Functional>& stage(std::size_t j) const { return stages_[j]; }

 private:
  std::string label_;
  std::size_t dim_;
  std::vector<Functional> ineq_;
  std::vector<std::vector<Functional>> stages_;
};

/// Y(p): coordinates (lambda_2, ..., lambda_p) with lambda_1 = p*t - sum.
ConeCrossSection build_Y(int p);
/// The row-content cone: coordinates t_ij (1 <= i < j <= p) in row-major order,
/// diagonal entries t_jj = t - sum_{k<j} t_kj substituted.
ConeCrossSection build_multY(int p);

/// Index of t_ij (0-based, i < j) in the coordinate vector of build_multY(p).
std::size_t multY_index(int p, int i, int j);

/// Number of integer points at level d.
BigInt lattice_count(const ConeCrossSection& cone, long d, const ResourceLimits& limits = {});
/// Visits the integer points at level d in lexicographic order.
void for_each_point(const ConeCrossSection& cone, long d,
                    const std::function<void(const std::vector<long>&)>& visit,
                    const ResourceLimits& limits = {});

/// Interior point of the Y(p) slice: lambda proportional to (p, p-1, ..., 1).
std::vector<Rational> interior_point_Y(int p);
/// Candidate interior point of the multY(p) slice with t_ij = base(i) * eps,
/// eps = p^{-p-2}, 1-based i. `geometric_rows` selects base(i) = p^i; otherwise
/// base(i) = p^{p-i}.
std::vector<Rational> perturbed_point_multY(int p, bool geometric_rows);

/// (lambda_2, ..., lambda_p, d) with lambda_i = sum_{j >= i} t_ij.
std::vector<long> moment_map(const RowContentMatrix& m);

struct MaxMultiplicityReport {
  BigInt value;
  Partition argmax;
  /// Box constant for the fiber coordinates and the resulting bound; absent
  /// when p is too large for the exact range computation.
  std::optional<long> box_constant;
  std::optional<BigInt> bound;
  bool bound_holds = true;
  std::string diagnostic;
};

/// max over lambda |- pd with at most p parts of K_{lambda,(d^p)}.
MaxMultiplicityReport max_multiplicity(int p, int d);

struct FitReport {
  Rational estimate;
  Rational residual;                       // relative change against the previous window
  std::vector<Rational> window_estimates;  // one per window of degree+1 consecutive samples
};

/// Extrapolates lim count(d)/d^degree. Fitting a polynomial of the given
/// degree in 1/d to count(d)/d^degree over the last degree+1 samples and
/// evaluating at 0 removes the lower order terms. Needs degree+2 distinct d.
FitReport fit_leading_coefficient(std::vector<std::pair<long, BigInt>> samples, int degree);

}  // namespace veronese
