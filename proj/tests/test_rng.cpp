#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "dcglearn/rng.hpp"
#include "doctest.h"

using dcglearn::Rng;

TEST_CASE("same seed gives the same stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c(42), d(43);
  bool any_diff = false;
  for (int i = 0; i < 10; ++i) any_diff |= c.next_u64() != d.next_u64();
  CHECK(any_diff);
}

TEST_CASE("next_unit stays in [0,1)") {
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("next_below covers every residue without bias artifacts") {
  Rng rng(11);
  std::vector<int> hits(10, 0);
  for (int i = 0; i < 10000; ++i) {
    const auto v = rng.next_below(10);
    REQUIRE(v < 10);
    ++hits[static_cast<std::size_t>(v)];
  }
  for (int h : hits) CHECK(h > 800);  // expectation 1000
  CHECK(rng.next_below(1) == 0);
  Rng rng2(5);
  for (int i = 0; i < 100; ++i) CHECK(rng2.next_int(1) == 0);
}

TEST_CASE("next_real respects its bounds") {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.next_real(-2.5, 4.0);
    CHECK(x >= -2.5);
    CHECK(x < 4.0);
  }
}

TEST_CASE("shuffle produces a permutation and reaches every arrangement") {
  Rng rng(9);
  std::vector<int> counts(6, 0);
  for (int trial = 0; trial < 6000; ++trial) {
    std::vector<int> v = {1, 2, 3};
    rng.shuffle(v);
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(sorted == std::vector<int>{1, 2, 3});
    // rank the permutation 0..5
    int idx = (v[0] - 1) * 2 + (v[1] > v[2] ? 1 : 0);
    ++counts[static_cast<std::size_t>(idx)];
  }
  for (int c : counts) CHECK(c > 800);  // expectation 1000
}

TEST_CASE("gaussian draws have roughly standard moments") {
  Rng rng(13);
  double sum = 0.0, sumsq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double g = rng.next_gaussian();
    sum += g;
    sumsq += g * g;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::abs(mean) < 0.05);
  CHECK(std::abs(var - 1.0) < 0.1);
}

TEST_CASE("stream mixing separates (seed, index) pairs") {
  std::set<std::uint64_t> ids;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (std::uint64_t index = 0; index < 50; ++index) {
      ids.insert(Rng::mix(seed, index));
    }
  }
  CHECK(ids.size() == 2500);  // no collisions across a 50x50 grid
  CHECK(Rng::mix(1, 2) == Rng::mix(1, 2));
}
