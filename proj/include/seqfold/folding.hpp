#pragma once

// Generalized folding: maximum cardinality crossing-free set of
// complementary pairs. Pairs are unordered, i.e. both (x, x') and (x', x)
// count, which is what distinguishes this DP from the Dyck one.

#include <utility>
#include <vector>

#include "seqfold/core.hpp"
#include "seqfold/kernels.hpp"

namespace seqfold {

// pair list uses 1-based positions, first < second
struct Folding {
  std::vector<std::pair<int, int>> pairs;
};

struct RnaFoldResult {
  long long score = 0;
  Folding folding;
};

// score only; O(n^2) memory, O(n^3) time
long long rna_fold_score(const Seq& s, kern::Kind kind = kern::best());

// score plus a witness reconstructed from the table. Ties resolve to
// "position unpaired" first, then to the smallest pairing index.
RnaFoldResult rna_fold(const Seq& s, kern::Kind kind = kern::best());

// exhaustive recursion; rejects |s| > 16
long long rna_fold_bruteforce(const Seq& s);

// witness validator: crossing-free, complementary, count == score
bool check_folding(const Seq& s, const Folding& f, long long score);

}  // namespace seqfold
