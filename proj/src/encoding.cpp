#include "dcglearn/encoding.hpp"

#include <stdexcept>
#include <string>

namespace dcglearn {

Encoding encode_grades(const GradeSequence& seq, int levels) {
  if (levels < 2) throw std::invalid_argument("levels must be >= 2");
  Encoding enc;
  enc.block_size = levels;
  enc.bits.assign(seq.size() * static_cast<std::size_t>(levels), 0);
  for (std::size_t rank = 0; rank < seq.size(); ++rank) {
    int grade = seq[rank];
    if (grade < 1 || grade > levels) {
      throw std::invalid_argument("grade " + std::to_string(grade) + " outside {1.." +
                                  std::to_string(levels) + "}");
    }
    // best grade occupies the first slot of the block
    enc.bits[rank * static_cast<std::size_t>(levels) + static_cast<std::size_t>(levels - grade)] = 1;
  }
  return enc;
}

GradeSequence decode_grades(const Encoding& enc) {
  if (enc.block_size < 2 || enc.bits.size() % static_cast<std::size_t>(enc.block_size) != 0) {
    throw std::invalid_argument("malformed graded encoding");
  }
  const int levels = enc.block_size;
  GradeSequence seq;
  seq.reserve(static_cast<std::size_t>(enc.blocks()));
  for (int k = 0; k < enc.blocks(); ++k) {
    int found = -1;
    for (int j = 0; j < levels; ++j) {
      if (enc.bits[static_cast<std::size_t>(k * levels + j)]) {
        if (found >= 0) throw std::invalid_argument("more than one bit set in a block");
        found = j;
      }
    }
    if (found < 0) throw std::invalid_argument("empty block in encoding");
    seq.push_back(levels - found);
  }
  return seq;
}

Encoding encode_permutation(const Permutation& perm) {
  const int k = static_cast<int>(perm.size());
  if (k < 1) throw std::invalid_argument("empty permutation");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(k), 0);
  Encoding enc;
  enc.block_size = k;
  enc.bits.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
  for (int rank = 0; rank < k; ++rank) {
    int doc = perm[static_cast<std::size_t>(rank)];
    if (doc < 1 || doc > k) throw std::invalid_argument("document id out of range");
    if (seen[static_cast<std::size_t>(doc - 1)]) {
      throw std::invalid_argument("document " + std::to_string(doc) + " appears twice");
    }
    seen[static_cast<std::size_t>(doc - 1)] = 1;
    enc.bits[static_cast<std::size_t>(rank * k + doc - 1)] = 1;
  }
  return enc;
}

double utility(const UtilityVector& w, const Encoding& s) {
  if (w.weights.size() != s.bits.size() || w.block_size != s.block_size) {
    throw std::invalid_argument("weight/encoding dimension mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < s.bits.size(); ++i) {
    if (s.bits[i]) total += w.weights[i];
  }
  return total;
}

UtilityVector dcg_weights(const GainVector& g, const DiscountVector& c) {
  const int levels = g.levels();
  const int positions = c.positions();
  if (levels < 2) throw std::invalid_argument("levels must be >= 2");
  if (positions < 1) throw std::invalid_argument("positions must be >= 1");
  UtilityVector w;
  w.block_size = levels;
  w.weights.resize(static_cast<std::size_t>(levels) * static_cast<std::size_t>(positions));
  for (int k = 0; k < positions; ++k) {
    for (int j = 0; j < levels; ++j) {
      // slot j of block k corresponds to grade L - j
      w.weights[static_cast<std::size_t>(k * levels + j)] =
          c.discounts[static_cast<std::size_t>(k)] * g.at_grade(levels - j);
    }
  }
  return w;
}

}  // namespace dcglearn
