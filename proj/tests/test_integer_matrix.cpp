#include "oracles.hpp"
#include "veronese/integer_matrix.hpp"
#include "veronese/parallel.hpp"

#include <doctest.h>

#include <random>

using namespace veronese;

namespace {

std::vector<std::vector<oracle::Q>> to_q(const IntMatrix& m) {
  std::vector<std::vector<oracle::Q>> out(m.rows(), std::vector<oracle::Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("basic matrix operations") {
  IntMatrix a(2, 3);
  CHECK(a.is_zero());
  a(0, 1) = 2;
  a(1, 2) = -1;
  const auto t = a.transpose();
  CHECK(t.rows() == 3);
  CHECK(t(1, 0) == 2);
  CHECK(t(2, 1) == -1);
  const auto p = a.multiply(t);
  CHECK(p(0, 0) == 4);
  CHECK(p(1, 1) == 1);
  CHECK(p(0, 1) == 0);
  CHECK_THROWS(a.multiply(a));
}

TEST_CASE("rank of small matrices") {
  CHECK(rank(IntMatrix()) == 0);
  CHECK(rank(IntMatrix(3, 4)) == 0);
  IntMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = static_cast<std::int64_t>(3 * i + j + 1);
  CHECK(rank(m) == 2);
  CHECK(rank_bareiss(m) == 2);
  IntMatrix id(4, 4);
  for (std::size_t i = 0; i < 4; ++i) id(i, i) = 1;
  CHECK(rank(id) == 4);
  CHECK(rank_bareiss(id) == 4);
}

TEST_CASE("rank agrees with rational elimination on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
    IntMatrix m = random_matrix(rng, r, c, -2, 2);
    // force some rank deficiency: a random combination of rows replaces a row
    if (r > 2 && trial % 2 == 0)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j) - 3 * m(1, j);
    const std::size_t want = oracle::rank(to_q(m));
    REQUIRE(rank(m) == want);
    REQUIRE(rank_bareiss(m) == want);
    REQUIRE(rank(m.transpose()) == want);
  }
}

TEST_CASE("low-rank products") {
  std::mt19937_64 rng(11);
  for (int k = 0; k <= 6; ++k) {
    const auto a = random_matrix(rng, 12, static_cast<std::size_t>(k), -3, 3);
    const auto b = random_matrix(rng, static_cast<std::size_t>(k), 15, -3, 3);
    const auto m = k == 0 ? IntMatrix(12, 15) : a.multiply(b);
    const std::size_t want = oracle::rank(to_q(m));
    REQUIRE(want <= static_cast<std::size_t>(k));
    REQUIRE(rank(m) == want);
    REQUIRE(rank_bareiss(m) == want);
  }
}

TEST_CASE("large entries take the big-integer path and stay exact") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix m = random_matrix(rng, 7, 7, -(std::int64_t{1} << 40), std::int64_t{1} << 40);
    if (trial % 2)
      for (std::size_t j = 0; j < 7; ++j) m(6, j) = m(0, j) + m(1, j);
    const std::size_t want = oracle::rank(to_q(m));
    REQUIRE(rank(m) == want);
    REQUIRE(rank_bareiss(m) == want);
  }
}

TEST_CASE("parallel_for fills every slot and rethrows") {
  for (unsigned threads : {1u, 2u, 5u}) {
    std::vector<int> out(100, -1);
    parallel_for(out.size(), threads, [&](std::size_t i) { out[i] = static_cast<int>(i * i); });
    for (std::size_t i = 0; i < out.size(); ++i) REQUIRE(out[i] == static_cast<int>(i * i));
    CHECK_THROWS_AS(parallel_for(10, threads,
                                 [](std::size_t i) {
                                   if (i == 4) throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
  }
  parallel_for(0, 4, [](std::size_t) { FAIL("called on empty range"); });
}
