#include <stdexcept>
#include <vector>

#include "dcglearn/encoding.hpp"
#include "dcglearn/rng.hpp"
#include "doctest.h"

using namespace dcglearn;

namespace {
std::vector<std::uint8_t> bits(std::initializer_list<int> xs) {
  return std::vector<std::uint8_t>(xs.begin(), xs.end());
}
}  // namespace

TEST_CASE("graded encoding puts the best grade first in each block") {
  const Encoding enc = encode_grades({5, 1, 3}, 5);
  CHECK(enc.block_size == 5);
  CHECK(enc.blocks() == 3);
  CHECK(enc.bits == bits({1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0}));

  const Encoding two = encode_grades({2, 1}, 2);
  CHECK(two.bits == bits({1, 0, 0, 1}));

  CHECK_THROWS_AS(encode_grades({1, 6}, 5), std::invalid_argument);
  CHECK_THROWS_AS(encode_grades({0}, 5), std::invalid_argument);
  CHECK_THROWS_AS(encode_grades({1}, 1), std::invalid_argument);
}

TEST_CASE("decoding inverts encoding") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int levels = 2 + rng.next_int(5);
    const int k = 1 + rng.next_int(8);
    GradeSequence seq;
    for (int i = 0; i < k; ++i) seq.push_back(1 + rng.next_int(levels));
    CHECK(decode_grades(encode_grades(seq, levels)) == seq);
  }
}

TEST_CASE("decoding rejects malformed encodings") {
  Encoding enc = encode_grades({2, 1}, 3);
  enc.bits[2] = 1;  // second bit in block 0
  CHECK_THROWS_AS(decode_grades(enc), std::invalid_argument);

  Encoding empty_block = encode_grades({2, 1}, 3);
  empty_block.bits[1] = 0;
  CHECK_THROWS_AS(decode_grades(empty_block), std::invalid_argument);

  Encoding ragged;
  ragged.block_size = 3;
  ragged.bits = bits({1, 0});
  CHECK_THROWS_AS(decode_grades(ragged), std::invalid_argument);
}

TEST_CASE("permutation encoding marks the document placed at each rank") {
  const Encoding enc = encode_permutation({3, 1, 4, 2, 5});
  CHECK(enc.block_size == 5);
  CHECK(enc.bits == bits({0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0,
                          0, 1, 0, 0, 0, 0, 0, 0, 0, 1}));

  CHECK_THROWS_AS(encode_permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(encode_permutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(encode_permutation({}), std::invalid_argument);
}

TEST_CASE("utility is the dot product over set bits") {
  UtilityVector w{{4.5, 3.0, 0.75, 1.5, 1.0, 0.25}, 3};
  CHECK(utility(w, encode_grades({3, 1}, 3)) == doctest::Approx(4.75).epsilon(1e-15));
  CHECK(utility(w, encode_grades({1, 2}, 3)) == doctest::Approx(1.75).epsilon(1e-15));

  UtilityVector other{{1.0, 2.0}, 2};
  CHECK_THROWS_AS(utility(other, encode_grades({3, 1}, 3)), std::invalid_argument);
  UtilityVector wrong_blocks{{1, 2, 3, 4, 5, 6}, 2};
  CHECK_THROWS_AS(utility(wrong_blocks, encode_grades({3, 1}, 3)), std::invalid_argument);
}

TEST_CASE("dcg weights reproduce dcg through the encoding") {
  const GainVector g{{0.5, 2.0, 3.0}};
  const DiscountVector c{{1.5, 0.5}};
  const UtilityVector w = dcg_weights(g, c);
  CHECK(w.weights == std::vector<double>{4.5, 3.0, 0.75, 1.5, 1.0, 0.25});

  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const int levels = 2 + rng.next_int(5);
    const int k = 1 + rng.next_int(6);
    GainVector gains;
    double running = rng.next_real(0.05, 1.0);
    for (int l = 0; l < levels; ++l) {
      gains.gains.push_back(running);
      running += rng.next_real(0.05, 2.0);
    }
    DiscountVector discounts;
    double d = rng.next_real(1.0, 3.0);
    for (int i = 0; i < k; ++i) {
      discounts.discounts.push_back(d);
      d *= rng.next_real(0.3, 0.9);
    }
    GradeSequence seq;
    for (int i = 0; i < k; ++i) seq.push_back(1 + rng.next_int(levels));

    const UtilityVector weights = dcg_weights(gains, discounts);
    CHECK(utility(weights, encode_grades(seq, levels)) ==
          doctest::Approx(dcg(seq, gains, discounts, k)).epsilon(1e-12));
  }
}
