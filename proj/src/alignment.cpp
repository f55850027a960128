#include "seqfold/alignment.hpp"

#include <algorithm>
#include <stdexcept>

#include "seqfold/lcs.hpp"

namespace seqfold {

namespace {

// all monotone partial matchings, no memoization
long long enumerate(const std::vector<std::vector<long long>>& d, long long penalty,
                    size_t i, size_t j, size_t n, size_t m) {
  if (j == m) return 0;
  if (i == n) return static_cast<long long>(m - j) * penalty;
  long long best = enumerate(d, penalty, i + 1, j, n, m);                       // skip X_i
  best = std::min(best, enumerate(d, penalty, i, j + 1, n, m) + penalty);       // Y_j unaligned
  best = std::min(best, enumerate(d, penalty, i + 1, j + 1, n, m) + d[i][j]);   // align
  return best;
}

}  // namespace

long long min_alignment_cost(const std::vector<Seq>& xs, const std::vector<Seq>& ys,
                             bool structural_only) {
  const size_t n = xs.size(), m = ys.size();
  if (n < m) throw std::invalid_argument("min_alignment_cost: |xs| < |ys|");
  if (n > 8) throw std::invalid_argument("min_alignment_cost: |xs| > 8 (exhaustive oracle)");
  if (m == 0) return 0;

  std::vector<std::vector<long long>> d(n, std::vector<long long>(m));
  long long penalty = 0;
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < m; j++) {
      d[i][j] = lcs_delta(xs[i], ys[j]);
      penalty = std::max(penalty, d[i][j]);
    }

  if (structural_only) {
    long long best = -1;
    for (size_t start = 0; start + m <= n; start++) {
      long long cost = 0;
      for (size_t j = 0; j < m; j++) cost += d[start + j][j];
      if (best < 0 || cost < best) best = cost;
    }
    return best;
  }
  return enumerate(d, penalty, 0, 0, n, m);
}

}  // namespace seqfold
