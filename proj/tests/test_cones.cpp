#include "support.hpp"
#include "veronese/cones.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace veronese;

namespace {

RowContentMatrix matrix_of_point(int p, long d, const std::vector<long>& x) { return RowContentMatrix(p, d, x); }

std::vector<std::pair<long, BigInt>> samples(const ConeCrossSection& c, long from, long to, long step) {
  std::vector<std::pair<long, BigInt>> s;
  for (long d = from; d <= to; d += step) s.emplace_back(d, lattice_count(c, d));
  return s;
}

}  // namespace

TEST_CASE("low-dimensional slices") {
  const auto Y2 = build_Y(2);
  CHECK(Y2.dim() == 1);
  CHECK(Y2.coordinate_range(0) == std::pair<Rational, Rational>(0, 1));
  const auto M2 = build_multY(2);
  CHECK(M2.dim() == 1);
  CHECK(M2.coordinate_range(0) == std::pair<Rational, Rational>(0, 1));
  CHECK(build_Y(1).dim() == 0);
  CHECK(build_multY(4).dim() == 6);
  CHECK(build_Y(4).dim() == 3);
  CHECK_THROWS_AS(build_Y(0), std::invalid_argument);
  // Y(3): lambda_2 in [0, 3/2], lambda_3 in [0, 1]
  CHECK(build_Y(3).coordinate_range(0) == std::pair<Rational, Rational>(0, Rational(3, 2)));
  CHECK(build_Y(3).coordinate_range(1) == std::pair<Rational, Rational>(0, 1));
}

TEST_CASE("unbounded systems are rejected") {
  CHECK_THROWS_AS(ConeCrossSection("half-line", 1, {Functional{{1}, 0}}), std::invalid_argument);
  CHECK_NOTHROW(ConeCrossSection("segment", 1, {Functional{{1}, 0}, Functional{{-1}, 2}}));
  CHECK_THROWS_AS(ConeCrossSection("bad", 2, {Functional{{1}, 0}}), std::invalid_argument);
}

TEST_CASE("membership") {
  const ConeCrossSection seg("segment", 1, {Functional{{1}, 0}, Functional{{-1}, 2}});
  CHECK(seg.contains(std::vector<long>{2}, 1));
  CHECK_FALSE(seg.contains(std::vector<long>{3}, 1));
  CHECK(seg.contains(std::vector<Rational>{Rational(3, 2)}, 1));
  CHECK(seg.strictly_contains(std::vector<Rational>{Rational(3, 2)}, 1));
  CHECK_FALSE(seg.strictly_contains(std::vector<Rational>{Rational(2)}, 1));
  CHECK(lattice_count(seg, 3) == 7);
}

TEST_CASE("interior points certify full dimension") {
  for (int p = 1; p <= 6; ++p) CHECK(build_Y(p).strictly_contains(interior_point_Y(p), 1));
  for (int p = 2; p <= 5; ++p) {
    CAPTURE(p);
    CHECK(build_multY(p).strictly_contains(perturbed_point_multY(p, false), 1));
  }
  // the row-increasing perturbation sits outside once p >= 3
  CHECK(build_multY(2).strictly_contains(perturbed_point_multY(2, true), 1));
  for (int p = 3; p <= 5; ++p) CHECK_FALSE(build_multY(p).strictly_contains(perturbed_point_multY(p, true), 1));
}

TEST_CASE("level zero holds only the origin") {
  for (int p = 1; p <= 4; ++p) {
    CHECK(lattice_count(build_Y(p), 0) == 1);
    CHECK(lattice_count(build_multY(p), 0) == 1);
  }
}

TEST_CASE("p = 2 counts") {
  for (long d = 0; d <= 20; ++d) {
    REQUIRE(lattice_count(build_Y(2), d) == d + 1);
    REQUIRE(lattice_count(build_multY(2), d) == d + 1);
  }
}

TEST_CASE("lattice points are tableaux and diagrams") {
  for (int p = 1; p <= 3; ++p)
    for (long d = 0; d <= 6; ++d) {
      const auto e = schur_decompose(char_tensor_sym(p, static_cast<int>(d), p));
      REQUIRE(lattice_count(build_Y(p), d) == complexity(e));
      REQUIRE(lattice_count(build_multY(p), d) == total_multiplicity(e));
      REQUIRE(lattice_count(build_Y(p), d) == count_partitions(static_cast<int>(p * d), p));
    }
}

TEST_CASE("enumeration visits valid points in lexicographic order") {
  const auto M = build_multY(3);
  std::vector<std::vector<long>> pts;
  for_each_point(M, 3, [&](const std::vector<long>& x) { pts.push_back(x); });
  CHECK(pts.size() == lattice_count(M, 3));
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  for (const auto& x : pts) {
    REQUIRE(M.contains(x, 3));
    REQUIRE(RowContentMatrix(3, 3, x).valid());
  }
  CHECK(multY_index(3, 0, 1) == 0);
  CHECK(multY_index(3, 0, 2) == 1);
  CHECK(multY_index(3, 1, 2) == 2);
  CHECK(multY_index(4, 1, 2) == 3);
  CHECK(multY_index(4, 2, 3) == 5);
}

TEST_CASE("counts do not depend on threads, and caps apply") {
  ResourceLimits many;
  many.threads = 3;
  CHECK(lattice_count(build_multY(4), 4, many) == lattice_count(build_multY(4), 4));
  ResourceLimits tight;
  tight.max_nodes = 10;
  CHECK_THROWS_AS(lattice_count(build_multY(4), 6, tight), ResourceCapExceeded);
}

TEST_CASE("moment map") {
  CHECK(moment_map(RowContentMatrix(3, 4, {0, 0, 0})) == std::vector<long>{4, 4, 4});
  CHECK(moment_map(RowContentMatrix(2, 2, {2})) == std::vector<long>{0, 2});
  CHECK_THROWS_AS(moment_map(RowContentMatrix(2, 2, {3})), std::invalid_argument);
}

TEST_CASE("moment map fibers have Kostka size and the image is all of Y") {
  for (int p = 1; p <= 3; ++p)
    for (long d = 0; d <= 6; ++d) {
      std::map<std::vector<long>, long> fiber;
      for_each_point(build_multY(p), d, [&](const std::vector<long>& x) {
        const auto m = matrix_of_point(p, d, x);
        const auto y = moment_map(m);
        REQUIRE(build_Y(p).contains(std::vector<long>(y.begin(), y.end() - 1), d));
        // lambda_1 is what is left of p*d
        std::vector<int> lam{static_cast<int>(p * d)};
        for (std::size_t i = 0; i + 1 < y.size(); ++i) {
          lam[0] -= static_cast<int>(y[i]);
          lam.push_back(static_cast<int>(y[i]));
        }
        REQUIRE(Partition(lam) == matrix_to_tableau(m).shape);
        ++fiber[y];
      });
      std::set<std::vector<long>> ys;
      for_each_point(build_Y(p), d, [&](const std::vector<long>& x) {
        auto y = x;
        y.push_back(d);
        ys.insert(y);
      });
      REQUIRE(fiber.size() == ys.size());
      for (const auto& [y, count] : fiber) {
        REQUIRE(ys.count(y) == 1);
        if (d > 5) continue;
        std::vector<int> lam{static_cast<int>(p * d)};
        for (std::size_t i = 0; i + 1 < y.size(); ++i) {
          lam[0] -= static_cast<int>(y[i]);
          lam.push_back(static_cast<int>(y[i]));
        }
        REQUIRE(count == kostka(Partition(lam), std::vector<int>(static_cast<std::size_t>(p), static_cast<int>(d))));
      }
    }
}

TEST_CASE("maximal multiplicity") {
  for (int d = 0; d <= 6; ++d) CHECK(max_multiplicity(2, d).value == 1);
  for (int p = 1; p <= 5; ++p) CHECK(max_multiplicity(p, 0).value == 1);
  const auto r = max_multiplicity(3, 2);
  CHECK(r.value == 3);
  CHECK(r.argmax == Partition({4, 2}));
  CHECK(kostka(Partition({3, 2, 1}), {2, 2, 2}) == 2);
  REQUIRE(r.box_constant);
  CHECK(*r.box_constant == 1);
  CHECK(r.bound_holds);
  for (int p = 2; p <= 4; ++p)
    for (int d = 1; d <= 4; ++d) {
      const auto rep = max_multiplicity(p, d);
      REQUIRE(rep.box_constant);
      REQUIRE(rep.bound_holds);
      REQUIRE(rep.value == kostka(rep.argmax, std::vector<int>(static_cast<std::size_t>(p), d)));
    }
  const auto big = max_multiplicity(5, 1);
  CHECK_FALSE(big.box_constant);
  CHECK_FALSE(big.diagnostic.empty());
}

TEST_CASE("leading coefficient extrapolation") {
  const auto fy = fit_leading_coefficient(samples(build_Y(2), 1, 8, 1), 1);
  CHECK(fy.estimate == 1);
  CHECK(fy.residual == 0);
  std::vector<std::pair<long, BigInt>> flat{{1, 7}, {2, 7}, {5, 7}};
  CHECK(fit_leading_coefficient(flat, 0).estimate == 7);
  // a genuine cubic in d is recovered exactly from four samples and more
  std::vector<std::pair<long, BigInt>> cubic;
  for (long d = 1; d <= 6; ++d) cubic.emplace_back(d, 2 * d * d * d - d + 5);
  CHECK(fit_leading_coefficient(cubic, 3).estimate == 2);

  const auto fm = fit_leading_coefficient(samples(build_multY(3), 4, 24, 4), 3);
  CHECK(fm.estimate > 0);
  REQUIRE(fm.window_estimates.size() == 3);
  CHECK(abs(fm.window_estimates[2] - fm.window_estimates[1]) <= abs(fm.window_estimates[1] - fm.window_estimates[0]));

  CHECK_THROWS_AS(fit_leading_coefficient(flat, 2), std::invalid_argument);
  CHECK_THROWS_AS(fit_leading_coefficient({{1, 1}, {1, 2}, {2, 3}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(fit_leading_coefficient({{0, 1}, {1, 2}}, 0), std::invalid_argument);
}

TEST_CASE("few diagrams have fewer than p rows") {
  for (int p = 2; p <= 3; ++p) {
    Rational prev = 2;
    for (long d = 1; d <= 16; ++d) {
      long total = 0, short_ = 0;
      for_each_point(build_Y(p), d, [&](const std::vector<long>& x) {
        ++total;
        short_ += x.back() == 0;
      });
      const Rational frac(short_, total);
      REQUIRE(frac <= prev);
      prev = frac;
    }
    CHECK(prev < Rational(1, 4));
  }
}
