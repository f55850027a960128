#pragma once

// Exhaustive alignment-cost oracles between two lists of binary strings.
// An alignment is an order-preserving partial matching of list positions;
// every unmatched Y entry is charged the worst pairwise distance. The
// structural variant requires all of Y matched to a contiguous X window.

#include <vector>

#include "seqfold/core.hpp"

namespace seqfold {

// min over alignments of  sum delta(X_i, Y_j) + (m - |A|) * max_ij delta.
// Exhaustive recursion; rejects |xs| < |ys| and |xs| > 8.
long long min_alignment_cost(const std::vector<Seq>& xs, const std::vector<Seq>& ys,
                             bool structural_only);

}  // namespace seqfold
