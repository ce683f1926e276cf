#pragma once

#include "veronese/characters.hpp"
#include "veronese/numeric.hpp"
#include "veronese/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace veronese {

/// Outcome of an exhaustive identity check.
struct CheckReport {
  bool ok = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;  // first few counterexamples

  void expect(bool cond, const std::string& what);
};

/// Both duality identities between wedge^p S^{d+1} and S^p S^d (and with the
/// roles swapped), for every lambda |- pd with at most p parts. Needs n >= p.
CheckReport newell_check(int p, int d, int n, const ResourceLimits& limits = {});

/// (S^p S^{2d}, 2 lambda) > 0 for every lambda |- pd with at most p parts, and
/// the two wedge consequences obtained by adding (1^p) and (p). Needs n >= p.
CheckReport bci_check(int p, int d, int n, const ResourceLimits& limits = {});

/// Deletes the bottom box of each of the rightmost k columns. Throws when lambda_1 < k.
Partition remove_visible_boxes(const Partition& lambda, int k);

struct L1Witness {
  Partition lambda;
  int b = 0;
  int p = 0;
  std::vector<long> exponents;  // e_0, ..., e_p
  std::vector<long> levels;     // L_0, ..., L_{p+1}

  /// e_0 > e_1 > ... > e_p >= 0 and L_{p+1} == 0.
  bool well_formed() const;
};

/// Exponents e_i = ceil(L_i/(p+1-i) + (p-i)/2), L_{i+1} = L_i - e_i, starting
/// from L_0 = |lambda| - (b+1). The last step divides by 1, so L_{p+1} = 0.
/// Requires L_0 >= p(p+1)/2.
L1Witness l1_exponents(const Partition& lambda, int b, int p);
/// Same recursion with denominators p+2-i and shifts (p+1-i)/2; kept for
/// comparison since it can leave L_{p+1} != 0.
L1Witness l1_exponents_literal(const Partition& lambda, int b, int p);

enum class L1Verdict { constructed, conditions_fail, pieri_fail };
std::string to_string(L1Verdict v);

struct L1Result {
  L1Verdict verdict = L1Verdict::conditions_fail;
  L1Witness witness;
  Partition trimmed;            // lambda with the last b+1 visible boxes removed
  std::vector<Partition> chain; // (b+1) = mu_0 subset mu_1 subset ... = lambda, one Pieri step per exponent
  std::string detail;
};

/// Checks the prefix conditions sum_{i<k} trimmed_i >= sum_{i<k} e_i
/// (k = 1..n-2) and e_0 <= d-1, then searches for a Pieri chain
/// S^{b+1} (x) S^{e_0} (x) ... (x) S^{e_p} -> lambda inside GL_{n-1}.
/// Requires length(lambda) = n-1 <= p+2, lambda_{n-1} > b+1, L_0 >= p(p+1)/2.
L1Result l1_membership(const Partition& lambda, int b, int p, int d, int n);

struct L1Sample {
  Partition lambda;
  int b, p, d, n;
};
/// Seeded inputs with L_0 >= p(p+1)/2 + p, p <= 3, b <= 2.
std::vector<L1Sample> random_l1_inputs(std::size_t count, std::uint64_t seed);

/// binomial(n-1+e, n-1).
BigInt h0_projective(int n, long e);

struct GreenN {
  int n = 0;
  int lower_bound = 0;  // floor(((p+1)(b+1)!)^{1/(b+1)})
  bool lower_bound_holds = true;
};
/// Largest n >= 2 with p+1 >= h0(n, b+1+(q-1)d). Throws if none or if the
/// exponent is nonpositive (every n would qualify).
GreenN max_n_green(int p, int b, int q, int d);

struct PatternReport {
  int n = 0;
  std::string kind;  // "twin" or "almost-triplet"
  std::string path;  // "twin", "lotss", "single-wedge", "multi-wedge"
  int p = 0, b = 0, d = 0;
  BigInt partitions = 0;
  std::optional<BigInt> literal_count;  // twin path: the coarser binomial count
  std::optional<BigInt> direct_count;   // independent enumeration when requested
  std::optional<BigInt> molds;
  Rational B;
  long lambda1_min = 0, lambda1_max = -1;
  bool sample_ok = true;  // counted partitions satisfy the pattern predicate
};

/// lambda_1 = lambda_2, lambda_3 = lambda_4, ..., and for odd length the last
/// three parts equal; exact length `len`.
bool is_twin_pattern(const Partition& lambda, std::size_t len);

/// Twin-pattern count for K_{p,1}(b;d) restricted to GL_{n-1}, n from
/// max_n_green. For n < 5 it counts the distinct lambda of length <= n-1 in
/// the sum over 0 <= e_p < ... < e_0 <= d-1 of S^{e_0} (x) ... (x) S^{e_p} (x) S^{b+1}.
/// Requires p >= b+1 >= 2.
PatternReport twin_pattern_census(int p, int b, int d, bool cross_check = false);

/// Partitions counted by the twin path, for a given n >= 5 (for testing).
std::vector<Partition> twin_pattern_partitions(int p, int b, int d, int n);

/// The lambda of length <= n-1 reached in the sum above (n < 5 path).
std::vector<Partition> lotss_partitions(int p, int b, int d, int n);

bool is_almost_triplet(const Partition& lambda);
/// lambda - (1^len), with the first part overwritten by the second.
Partition mold(const Partition& lambda);

struct TripletOptions {
  bool multi_wedge = false;
};
/// Molds from one wedge^{n-1} S^{d-r} block (or several, with multi_wedge).
PatternReport almost_triplet_census(int p, int b, int n, int d, const TripletOptions& opt = {});
/// The partitions lambda(mu) behind the census, one per mu, in the order of mu.
std::vector<Partition> almost_triplet_partitions(int p, int b, int n, int d, const TripletOptions& opt = {});

struct RatioRow {
  int d = 0;
  BigInt numerator, denominator;
  Rational ratio;
};
struct RatioTable {
  std::string theorem;
  int p = 0, b = 0, n = 0;
  Partition mu;
  Rational limit;
  std::vector<RatioRow> rows;
};
struct RatioParams {
  int p = 1;
  int b = 0;
  std::optional<int> n;
  Partition mu;  // t2p only
};
/// theorem in {kp10d-N, t2sw, remtctb-N, remtctb-c, asy1, t2p}; rows ordered by d.
RatioTable ratio_experiment(const std::string& theorem, const RatioParams& params, const std::vector<int>& ds,
                            const ResourceLimits& limits = {});
std::vector<std::string> ratio_theorems();

}  // namespace veronese
