#pragma once

// Dyck edit distance as a minimum-cost crossing-free matching: matched
// pairs (x, x') are free, substitutable pairs cost 1, leftover positions
// cost 1 each. A pair closing before it opens (x', y) cannot be fixed by a
// single substitution and is forbidden outright.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seqfold/core.hpp"
#include "seqfold/kernels.hpp"

namespace seqfold {

// Bracket symbol: opener = type index, closer = type index | kCloseBit.
// Type indices 0..15 print as letters a..p; the reduction uses a..e.
using DyckSym = uint8_t;

inline constexpr DyckSym kCloseBit = 0x10;
inline constexpr int kMaxDyckTypes = 16;

constexpr bool dyck_is_open(DyckSym s) { return (s & kCloseBit) == 0; }
constexpr DyckSym dyck_closer_of(DyckSym s) { return s | kCloseBit; }
constexpr int dyck_type(DyckSym s) { return s & 0x0f; }

struct DyckSeq {
  std::vector<DyckSym> sym;

  DyckSeq() = default;
  explicit DyckSeq(std::vector<DyckSym> v) : sym(std::move(v)) {}

  size_t size() const { return sym.size(); }
  bool empty() const { return sym.empty(); }
  DyckSym operator[](size_t i) const { return sym[i]; }
  bool operator==(const DyckSeq&) const = default;
};

// "ab'c" style text, apostrophe closes; throws with a column hint
DyckSeq parse_dyck(std::string_view text);
std::string dyck_to_string(const DyckSeq& s);

DyckSeq random_dyck(long long len, int types, Rng& rng);

// 1-based index pairs / positions
struct DyckSolution {
  std::vector<std::pair<int, int>> matched;      // free pairs (x, x')
  std::vector<std::pair<int, int>> substituted;  // cost-1 pairs
  std::vector<int> deleted;                      // cost-1 positions
  long long cost = 0;
};

struct DyckResult {
  long long cost = 0;
  DyckSolution witness;
};

// 0 = matched, 1 = substitutable, kInfCost = forbidden
int32_t dyck_pair_cost(DyckSym a, DyckSym b);

// cubic interval DP with witness
DyckResult dyck_edit_distance(const DyckSeq& s, kern::Kind kind = kern::best());

// exhaustive recursion over all crossing-free partitions; rejects |s| > 12
long long dyck_edit_bruteforce(const DyckSeq& s);

bool check_dyck_solution(const DyckSeq& s, const DyckSolution& w, long long cost);

}  // namespace seqfold
