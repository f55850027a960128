#pragma once

// LCS distance over binary strings: delta(X,Y) = |X| + |Y| - 2*lcs(X,Y).
//
// Two independent routes are kept on purpose: a plain quadratic DP as the
// reference, and a word-parallel bit-vector row update for the large gadget
// comparisons. They are cross-checked in the test suite.

#include <cstdint>
#include <vector>

#include "seqfold/core.hpp"

namespace seqfold {

// quadratic DP; rejects primed symbols
long long lcs_delta(const Seq& x, const Seq& y);

// bit-vector row update (one word per 64 pattern positions)
long long lcs_delta_bitparallel(const Seq& x, const Seq& y);

// Packed match masks of a binary "pattern" string; building this once and
// streaming many texts against it is what the clique test suites do.
struct BitPattern {
  long long len = 0;
  std::vector<uint64_t> mask[2];  // mask[b] marks positions holding bit b

  static BitPattern build(const Seq& pattern);
};

long long lcs_len_bits(const BitPattern& pattern, const Seq& text);

}  // namespace seqfold
