#include <stdexcept>

#include "dcglearn/encoding.hpp"
#include "dcglearn/errors.hpp"
#include "dcglearn/evaluation.hpp"
#include "doctest.h"

using namespace dcglearn;

namespace {

PreferencePair make_pair(const GradeSequence& win, const GradeSequence& lose, int levels) {
  return {encode_grades(win, levels), encode_grades(lose, levels), 1.0};
}

}  // namespace

TEST_CASE("precision counts strict wins only") {
  const UtilityVector w{{4.5, 3.0, 0.75, 1.5, 1.0, 0.25}, 3};
  std::vector<PreferencePair> pairs;
  pairs.push_back(make_pair({3, 1}, {1, 2}, 3));  // 4.75 > 1.75, correct
  pairs.push_back(make_pair({1, 2}, {3, 1}, 3));  // wrong way round
  pairs.push_back(make_pair({2, 1}, {2, 1}, 3));  // tie, counts as incorrect
  CHECK(precision(w, pairs) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(precision(w, {pairs[0]}) == 1.0);
  CHECK_THROWS_AS(precision(w, {}), std::invalid_argument);
}

TEST_CASE("the block transform zeroes each block's last weight") {
  const UtilityVector w{{4.5, 3.0, 0.75, 1.5, 1.0, 0.25}, 3};
  const UtilityVector t = t_transform(w);
  CHECK(t.weights == std::vector<double>{3.75, 2.25, 0.0, 1.25, 0.75, 0.0});
  CHECK(t.block_size == 3);
  CHECK_THROWS_AS(t_transform(UtilityVector{{1.0, 2.0, 3.0}, 2}), std::invalid_argument);
  CHECK_THROWS_AS(t_transform(UtilityVector{{}, 2}), std::invalid_argument);
}

TEST_CASE("the block transform preserves utility differences") {
  const UtilityVector w{{4.5, 3.0, 0.75, 1.5, 1.0, 0.25}, 3};
  const UtilityVector t = t_transform(w);
  const Encoding a = encode_grades({3, 1}, 3);
  const Encoding b = encode_grades({1, 2}, 3);
  CHECK(utility(w, a) - utility(w, b) == doctest::Approx(utility(t, a) - utility(t, b)).epsilon(1e-12));
}

TEST_CASE("similarity is the cosine after the block transform") {
  const UtilityVector w{{4.5, 3.0, 0.75, 1.5, 1.0, 0.25}, 3};
  CHECK(similarity(w, w) == doctest::Approx(1.0).epsilon(1e-12));

  // scaling and per-block shifts do not move the cosine
  UtilityVector shifted = w;
  for (std::size_t i = 0; i < 3; ++i) shifted.weights[i] = shifted.weights[i] * 2.0 + 7.0;
  for (std::size_t i = 3; i < 6; ++i) shifted.weights[i] = shifted.weights[i] * 2.0 - 1.0;
  CHECK(similarity(w, shifted) == doctest::Approx(1.0).epsilon(1e-12));

  UtilityVector negated = w;
  for (auto& x : negated.weights) x = -x;
  CHECK(similarity(w, negated) == doctest::Approx(-1.0).epsilon(1e-12));

  CHECK_THROWS_AS(similarity(w, UtilityVector{{1.0, 2.0}, 2}), std::invalid_argument);
  // per-block constant vectors vanish under the transform
  CHECK_THROWS_AS(similarity(w, UtilityVector{{2.0, 2.0, 2.0, 5.0, 5.0, 5.0}, 3}),
                  DegenerateInputError);
}

TEST_CASE("hamming counts mismatched ranks") {
  CHECK(hamming({1, 2, 3}, {1, 2, 3}) == 0);
  CHECK(hamming({1, 2, 3}, {1, 3, 2}) == 2);
  CHECK(hamming({1, 2, 3, 4}, {4, 3, 2, 1}) == 4);
  CHECK(hamming({2, 1, 3, 4}, {1, 2, 3, 4}) == 2);
  CHECK_THROWS_AS(hamming({1, 2}, {1, 2, 3}), std::invalid_argument);
}
