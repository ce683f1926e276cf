#include "support.hpp"
#include "veronese/constructions.hpp"
#include "veronese/koszul.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace veronese;
using test::terms;

namespace {

using Terms = std::map<oracle::Vec, oracle::Int>;

long sum(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

// Twin-pattern partitions by brute force: every weakly decreasing sequence of
// m values in [lo, hi], filtered by the two bounds.
long brute_twin_count(int p, int b, int d, int n) {
  const Rational B = std::max(Rational(b + 2), Rational(p * (p + 1) / 2 + b + 1, n - 1));
  const long lo = ceil_to_long(B);
  const long hi = floor_to_long((Rational(p * d) - Rational(n - 3) * B) / 2);
  const int m = (n - 1) / 2;
  long count = 0;
  std::vector<long> v(static_cast<std::size_t>(m));
  auto D = [&](long l1) {
    const Rational a(l1), c(p * d - 2 * l1, n - 3);
    const Rational e = Rational(2 * (p - n + 1), (n - 2) * (n - 3)) * l1 - Rational((p + 1) * (p + 2), 2 * (n - 3));
    return std::min({a, c, e});
  };
  auto rec = [&](auto&& self, int k) -> void {
    if (k == m) {
      if (Rational(v[1]) <= D(v[0])) ++count;
      return;
    }
    for (long x = lo; x <= (k == 0 ? hi : v[static_cast<std::size_t>(k - 1)]); ++x) {
      v[static_cast<std::size_t>(k)] = x;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST_CASE("Newell duality") {
  // S^2 S^2 = (4) + (2,2), so wedge^2 S^3 = (5,1) + (3,3)
  CHECK(terms(schur_decompose(char_wedge_sym(2, 3, 2))) == Terms{{{5, 1}, 1}, {{3, 3}, 1}});
  for (int p = 1; p <= 3; ++p)
    for (int d = 0; d <= 4; ++d) {
      const auto r = newell_check(p, d, p);
      CAPTURE(p);
      CAPTURE(d);
      REQUIRE(r.ok);
      REQUIRE(r.checks > 0);
    }
  CHECK(newell_check(2, 2, 3).ok);
  CHECK_THROWS_AS(newell_check(3, 2, 2), std::invalid_argument);
}

TEST_CASE("doubled partitions appear in symmetric plethysms") {
  const auto s22 = schur_decompose(char_sym_sym(2, 2, 2));
  CHECK(s22.multiplicity(Partition({4})) > 0);
  CHECK(s22.multiplicity(Partition({2, 2})) > 0);
  const auto s32 = schur_decompose(char_sym_sym(3, 2, 3));
  for (const auto& l : partitions_of(3, 3)) CHECK(s32.multiplicity(scale(2, l)) > 0);
  for (int p = 1; p <= 3; ++p)
    for (int d = 0; d <= 3; ++d) {
      CAPTURE(p);
      CAPTURE(d);
      REQUIRE(bci_check(p, d, p).ok);
    }
}

TEST_CASE("CheckReport keeps the first failures") {
  CheckReport r;
  for (int i = 0; i < 30; ++i) r.expect(i % 2 == 0, "case " + std::to_string(i));
  CHECK_FALSE(r.ok);
  CHECK(r.checks == 30);
  CHECK(r.failures.size() <= 20);
  CHECK(r.failures.front() == "case 1");
}

TEST_CASE("visible boxes") {
  CHECK(remove_visible_boxes(Partition({3, 3, 2}), 2) == Partition({3, 2, 1}));
  CHECK(remove_visible_boxes(Partition({5}), 5) == Partition{});
  CHECK(remove_visible_boxes(Partition({2, 2}), 1) == Partition({2, 1}));
  CHECK(remove_visible_boxes(Partition({4, 2}), 0) == Partition({4, 2}));
  CHECK_THROWS_AS(remove_visible_boxes(Partition({2, 2}), 3), std::invalid_argument);
  // oracle: conjugate, decrement the last k parts, conjugate back
  for (int n = 1; n <= 10; ++n)
    for (const auto& l : partitions_of(n))
      for (int k = 1; k <= l[0]; ++k) {
        auto c = oracle::conjugate(l.parts());
        for (int i = 0; i < k; ++i) --c[c.size() - 1 - static_cast<std::size_t>(i)];
        REQUIRE(remove_visible_boxes(l, k).parts() == oracle::strip(oracle::conjugate(oracle::strip(c))));
        REQUIRE(remove_visible_boxes(l, k).size() == l.size() - k);
      }
}

TEST_CASE("exponent recursion") {
  // |lambda| = L0 + b + 1
  auto w = l1_exponents(Partition({3, 1}), 0, 1);  // L0 = 3
  CHECK(w.exponents == std::vector<long>{2, 1});
  CHECK(w.levels == std::vector<long>{3, 1, 0});
  CHECK(w.well_formed());
  w = l1_exponents_literal(Partition({3, 1}), 0, 1);
  CHECK(w.exponents == std::vector<long>{2, 1});

  w = l1_exponents(Partition({7, 6}), 0, 2);  // L0 = 12
  CHECK(w.exponents == std::vector<long>{5, 4, 3});
  CHECK(w.well_formed());
  w = l1_exponents_literal(Partition({7, 6}), 0, 2);
  CHECK(w.exponents == std::vector<long>{5, 4, 2});
  CHECK(w.levels.back() == 1);
  CHECK_FALSE(w.well_formed());

  // the boundary L0 = p(p+1)/2 at p = 1
  w = l1_exponents_literal(Partition({2}), 0, 1);
  CHECK(w.exponents.front() == 2);
  CHECK_FALSE(w.well_formed());
  CHECK(l1_exponents(Partition({2}), 0, 1).well_formed());
  CHECK_THROWS_AS(l1_exponents(Partition({1}), 0, 1), std::invalid_argument);
}

TEST_CASE("exponent invariants from the threshold on") {
  for (int p = 1; p <= 4; ++p)
    for (int b = 0; b <= 2; ++b)
      for (long L0 = p * (p + 1) / 2; L0 < 200; ++L0) {
        const auto w = l1_exponents(Partition({static_cast<int>(L0 + b + 1)}), b, p);
        REQUIRE(w.well_formed());
        REQUIRE(sum(w.exponents) == L0);
        REQUIRE(w.levels.front() == L0);
        for (std::size_t i = 0; i + 1 < w.levels.size(); ++i)
          REQUIRE(w.levels[i + 1] == w.levels[i] - w.exponents[i]);
      }
}

TEST_CASE("membership examples") {
  const auto r = l1_membership(Partition({4, 2}), 0, 1, 4, 3);
  CHECK(r.verdict == L1Verdict::constructed);
  CHECK(r.witness.exponents == std::vector<long>{3, 2});
  REQUIRE(r.chain.size() == 3);
  CHECK(r.chain.front() == Partition({1}));
  CHECK(r.chain.back() == Partition({4, 2}));
  CHECK(to_string(r.verdict) == "constructed");
  // e_0 = 3 needs d >= 4
  CHECK(l1_membership(Partition({4, 2}), 0, 1, 3, 3).verdict == L1Verdict::conditions_fail);
  CHECK_THROWS_AS(l1_membership(Partition({4, 1}), 1, 1, 4, 3), std::invalid_argument);  // lambda_2 = b+1
  CHECK_THROWS_AS(l1_membership(Partition({4, 2}), 0, 1, 4, 2), std::invalid_argument);  // length != n-1
}

TEST_CASE("Pieri chains are genuine") {
  for (const auto& s : random_l1_inputs(40, 99)) {
    const auto r = l1_membership(s.lambda, s.b, s.p, s.d, s.n);
    if (r.verdict != L1Verdict::constructed) continue;
    REQUIRE(r.chain.size() == r.witness.exponents.size() + 1);
    REQUIRE(r.chain.front() == Partition({s.b + 1}));
    REQUIRE(r.chain.back() == s.lambda);
    for (std::size_t i = 0; i + 1 < r.chain.size(); ++i) {
      const auto next = oracle::pieri(r.chain[i].parts(), static_cast<int>(r.witness.exponents[i]));
      REQUIRE(std::find(next.begin(), next.end(), r.chain[i + 1].parts()) != next.end());
      REQUIRE(r.chain[i + 1].length() <= static_cast<std::size_t>(s.n - 1));
    }
  }
}

TEST_CASE("random inputs are reproducible and inside the margin regime") {
  const auto a = random_l1_inputs(100, 5), b = random_l1_inputs(100, 5), c = random_l1_inputs(100, 6);
  REQUIRE(a.size() == 100);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].lambda == b[i].lambda);
    REQUIRE(a[i].d == b[i].d);
    differs = differs || a[i].lambda != c[i].lambda;
    const auto& s = a[i];
    REQUIRE(s.p <= 3);
    REQUIRE(s.b <= 2);
    REQUIRE(s.lambda.length() == static_cast<std::size_t>(s.n - 1));
    REQUIRE(static_cast<int>(s.lambda.length()) <= s.p + 2);
    REQUIRE(s.lambda[s.lambda.length() - 1] > s.b + 1);
    REQUIRE(s.lambda.size() - (s.b + 1) >= s.p * (s.p + 1) / 2 + s.p);
  }
  CHECK(differs);
}

TEST_CASE("projective sections and the bound on n") {
  CHECK(h0_projective(2, 3) == 4);
  CHECK(h0_projective(3, 2) == 6);
  CHECK(h0_projective(1, 7) == 1);
  const auto g = max_n_green(5, 1, 1, 4);
  CHECK(g.n == 3);
  CHECK(g.lower_bound == 3);
  CHECK(g.lower_bound_holds);
  CHECK_THROWS_AS(max_n_green(1, 2, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(max_n_green(3, 0, 0, 1), std::invalid_argument);
  // (8 * 2)^(1/2) = 4 but only n = 3 fits under 8 sections
  const auto h = max_n_green(7, 1, 1, 4);
  CHECK(h.n == 3);
  CHECK(h.lower_bound == 4);
  CHECK_FALSE(h.lower_bound_holds);
  for (int p = 2; p <= 60; ++p) {
    const auto r = max_n_green(p, 1, 1, 3);
    REQUIRE(h0_projective(r.n, 2) <= p + 1);
    REQUIRE(h0_projective(r.n + 1, 2) > p + 1);
  }
}

TEST_CASE("twin pattern predicate") {
  CHECK(is_twin_pattern(Partition({5, 5, 3, 3}), 4));
  CHECK(is_twin_pattern(Partition({5, 5, 3, 3, 3}), 5));
  CHECK_FALSE(is_twin_pattern(Partition({5, 4, 3, 3}), 4));
  CHECK_FALSE(is_twin_pattern(Partition({5, 5, 4, 3, 3}), 5));
  CHECK_FALSE(is_twin_pattern(Partition({5, 5}), 4));
}

TEST_CASE("small-n census uses the direct count") {
  for (int d = 1; d <= 30; ++d) {
    const auto r = twin_pattern_census(3, 1, d);
    REQUIRE(r.n == 2);
    REQUIRE(r.path == "lotss");
    REQUIRE(r.direct_count);
    REQUIRE(r.partitions == *r.direct_count);
    REQUIRE(r.sample_ok);
  }
  // n = 3 and n = 4 are reported by enumeration alone
  const auto r3 = twin_pattern_census(5, 1, 6);
  CHECK(r3.n == 3);
  CHECK(r3.path == "lotss");
  CHECK(r3.partitions == lotss_partitions(5, 1, 6, 3).size());
  CHECK_THROWS_AS(twin_pattern_census(1, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(twin_pattern_census(3, 0, 5), std::invalid_argument);
}

TEST_CASE("lotss shapes come from distinct degrees") {
  // (b+1) followed by p+1 distinct degrees below d, one row
  for (int d = 1; d <= 8; ++d) {
    std::set<int> sizes;
    for (int mask = 0; mask < (1 << d); ++mask)
      if (__builtin_popcount(static_cast<unsigned>(mask)) == 3) {
        int s = 2;
        for (int e = 0; e < d; ++e)
          if (mask >> e & 1) s += e;
        sizes.insert(s);
      }
    const auto parts = lotss_partitions(2, 1, d, 2);
    REQUIRE(parts.size() == sizes.size());
    for (const auto& l : parts) REQUIRE(sizes.count(static_cast<int>(l.size())) == 1);
  }
}

TEST_CASE("twin census closed form matches brute force for n >= 5") {
  for (int p : {14, 20, 27}) {
    BigInt seen = 0;
    for (int d = 5; d <= 40; d += 5) {
      const auto r = twin_pattern_census(p, 1, d, true);
      CAPTURE(p);
      CAPTURE(d);
      REQUIRE(r.path == "twin");
      REQUIRE(r.n == (p == 14 ? 5 : p == 20 ? 6 : 7));
      REQUIRE(r.direct_count);
      REQUIRE(r.partitions == *r.direct_count);
      REQUIRE(r.partitions == brute_twin_count(p, 1, d, r.n));
      REQUIRE(r.sample_ok);
      seen += r.partitions;
    }
    REQUIRE(seen > 0);
  }
}

TEST_CASE("twin partitions are separated by two boxes in some column") {
  for (int d = 6; d <= 10; ++d) {
    const auto parts = twin_pattern_partitions(14, 1, d, 5);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        const auto a = conjugate(parts[i]), b = conjugate(parts[j]);
        bool far = false;
        for (std::size_t c = 0; c < std::max(a.length(), b.length()) && !far; ++c) far = std::abs(a[c] - b[c]) >= 2;
        REQUIRE(far);
      }
  }
}

TEST_CASE("twin census growth") {
  // closed form grows like d^m with m = (n-1)/2; the coarser count one power lower
  const int p = 14;
  Rational prev_gap = -1, prev = 0;
  for (int d : {100, 200, 400, 800}) {
    const auto r = twin_pattern_census(p, 1, d);
    REQUIRE(r.n == 5);
    const Rational ratio(r.partitions, BigInt(d) * d);
    const Rational literal(*r.literal_count, BigInt(d));
    REQUIRE(literal > 0);
    if (prev > 0) {
      const Rational gap = abs(ratio - prev);
      if (prev_gap >= 0) REQUIRE(gap < prev_gap);
      prev_gap = gap;
    }
    prev = ratio;
    REQUIRE(ratio > 0);
  }
}

TEST_CASE("almost triplet patterns and molds") {
  CHECK(is_almost_triplet(Partition({6, 4, 4, 2, 2, 2})));
  CHECK(mold(Partition({6, 4, 4, 2, 2, 2})) == Partition({3, 3, 3, 1, 1, 1}));
  CHECK(is_almost_triplet(Partition({6, 4, 4, 1})));
  CHECK_FALSE(is_almost_triplet(Partition({6, 4, 3})));
  CHECK_FALSE(is_almost_triplet(Partition({6, 4, 4, 2, 2})));
  CHECK_THROWS_AS(mold(Partition({6, 4, 3})), std::invalid_argument);
  // re-adding the column and applying mold again reproduces the mold
  for (const Partition& l : {Partition({9, 5, 5, 3, 3, 3}), Partition({4, 4, 4}), Partition({7, 2, 2, 2, 2, 2})}) {
    const auto m = mold(l);
    const auto again = add(m, column(static_cast<int>(m.length())));
    REQUIRE(is_almost_triplet(again));
    REQUIRE(mold(again) == m);
  }
}

TEST_CASE("almost triplet census") {
  CHECK_THROWS_AS(almost_triplet_census(12, 0, 3, 15), std::invalid_argument);
  CHECK_THROWS_AS(almost_triplet_census(12, 0, 7, 5), std::invalid_argument);
  const auto r7 = almost_triplet_census(12, 0, 7, 15), r10 = almost_triplet_census(12, 0, 10, 15),
             r13 = almost_triplet_census(12, 0, 13, 15);
  REQUIRE(r7.molds);
  CHECK(*r7.molds == 7);
  CHECK(*r10.molds == 37);
  CHECK(*r13.molds == count_partitions(24, 4));
  CHECK(r7.kind == "almost-triplet");
  CHECK(r7.sample_ok);
  for (int d = 8; d <= 12; ++d) {
    const auto parts = almost_triplet_partitions(6, 0, 7, d);
    std::set<Partition> molds;
    for (const auto& l : parts) {
      REQUIRE(is_almost_triplet(l));
      REQUIRE(l.length() <= 6u);
      molds.insert(mold(l));
    }
    REQUIRE(molds.size() == parts.size());
    REQUIRE(almost_triplet_census(6, 0, 7, d).molds == BigInt(parts.size()));
  }
  // the multi-wedge variant is available and self-consistent
  const auto mw = almost_triplet_census(12, 0, 7, 15, {true});
  CHECK(mw.path == "multi-wedge");
  CHECK(mw.sample_ok);
}

TEST_CASE("ratio experiments") {
  const auto kp = ratio_experiment("kp10d-N", {1, 0, std::nullopt, {}}, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  CHECK(kp.limit == Rational(1, 2));
  CHECK(kp.n == 2);
  for (const auto& row : kp.rows) REQUIRE(row.ratio == Rational(row.d / 2, row.d + 1));
  // brute-force Koszul counts at small d
  for (int d = 2; d <= 4; ++d) {
    oracle::Int N = 0;
    for (const auto& [l, m] : oracle::decompose(oracle::koszul(1, 1, 0, d, 2), 2, 2 * d + 0)) N += m;
    REQUIRE(kp.rows[static_cast<std::size_t>(d - 2)].numerator == N);
  }

  const auto t = ratio_experiment("t2sw", {2, 0, std::nullopt, {}}, {40, 10, 20});
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].d == 10);
  CHECK(t.rows[2].ratio == Rational(21, 20));

  const auto c = ratio_experiment("remtctb-c", {2, 1, std::nullopt, {}}, {5, 9});
  CHECK(c.limit == 2);
  for (const auto& row : c.rows) {
    const auto base = schur_decompose(char_tensor_sym(2, row.d, 3));
    REQUIRE(row.denominator == complexity(base));
    REQUIRE(row.numerator == complexity(tensor_with_sym(base, 1)));
  }
  const auto n = ratio_experiment("remtctb-N", {2, 2, std::nullopt, {}}, {6});
  CHECK(n.limit == 6);
  CHECK(n.rows[0].numerator == total_multiplicity(tensor_with_sym(schur_decompose(char_tensor_sym(2, 6, 3)), 2)));

  const auto a = ratio_experiment("asy1", {2, 0, std::nullopt, {}}, {6});
  CHECK(a.limit == Rational(1, 2));
  CHECK(a.rows[0].numerator ==
        total_multiplicity(schur_decompose(char_multiply(char_wedge_sym(2, 6, 3), char_sym_product({6}, 3)))));

  // t2p: the three isotypic parts of the cube add up
  BigInt total = 0;
  for (const Partition& mu : {Partition({3}), Partition({2, 1}), Partition({1, 1, 1})}) {
    const auto tab = ratio_experiment("t2p", {3, 0, std::nullopt, mu}, {4});
    total += sym_group_irrep_dim(mu) * tab.rows[0].numerator;
    CHECK(tab.limit == Rational(sym_group_irrep_dim(mu), 6));
  }
  CHECK(total == total_multiplicity(schur_decompose(char_tensor_sym(3, 4, 3))));

  CHECK_THROWS_AS(ratio_experiment("nope", {}, {3}), std::invalid_argument);
  CHECK_THROWS_AS(ratio_experiment("t2p", {3, 0, std::nullopt, Partition({2})}, {3}), std::invalid_argument);
  CHECK(ratio_theorems().size() == 6);
}
