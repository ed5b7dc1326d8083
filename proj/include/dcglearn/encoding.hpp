#pragma once

#include <cstdint>
#include <vector>

#include "dcglearn/ranking.hpp"

namespace dcglearn {

// One-hot-per-block binary representation of a ranking. Graded encodings
// use L bits per rank with the best grade first inside each block;
// grade-free encodings use K bits per rank indexing the document placed
// there. Exactly one bit is set per block.
struct Encoding {
  std::vector<std::uint8_t> bits;
  int block_size = 0;

  int blocks() const {
    return block_size > 0 ? static_cast<int>(bits.size()) / block_size : 0;
  }
  std::size_t size() const { return bits.size(); }
};

// Linear utility weights, stored with the same block layout as the
// encodings they score.
struct UtilityVector {
  std::vector<double> weights;
  int block_size = 0;

  int blocks() const {
    return block_size > 0 ? static_cast<int>(weights.size()) / block_size : 0;
  }
  std::size_t size() const { return weights.size(); }
};

Encoding encode_grades(const GradeSequence& seq, int levels);
GradeSequence decode_grades(const Encoding& enc);

// perm must be a permutation of {1..K}.
Encoding encode_permutation(const Permutation& perm);

// w . s
double utility(const UtilityVector& w, const Encoding& s);

// Weights that reproduce DCG exactly: block k holds c_k * gain, best grade
// first. utility(dcg_weights(g, c), encode_grades(seq, L)) == dcg(seq, g, c, K).
UtilityVector dcg_weights(const GainVector& g, const DiscountVector& c);

}  // namespace dcglearn
