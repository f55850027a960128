#include "seqfold/folding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace seqfold {

namespace {

// Shared table fill. T is (n+2)x(n+2) row-major, 1-based, zero-padded so
// that empty intervals read 0 without branching.
//
//   best(i,j) = max( best(i,j-1),
//                    max over k in [i, j-1], S[k] ~ S[j]:
//                        best(i,k-1) + 1 + best(k+1,j-1) )
struct FoldTable {
  int n;
  int w;
  std::vector<int32_t> t;

  int32_t at(int i, int j) const { return j < i ? 0 : t[static_cast<size_t>(i) * w + j]; }
};

FoldTable fill_table(const Seq& s, kern::Kind kind) {
  const int n = static_cast<int>(s.size());
  FoldTable ft{n, n + 2, {}};
  ft.t.assign(static_cast<size_t>(n + 2) * (n + 2), 0);

  std::vector<int32_t> colprev(n + 2, 0);  // colprev[k] = best(k, j-1)
  std::vector<int32_t> gate(n + 2, 0);     // 1 + pair bonus or kNegGate, per k for fixed j

  for (int j = 2; j <= n; j++) {
    for (int k = 1; k <= j; k++) colprev[k] = ft.t[static_cast<size_t>(k) * ft.w + (j - 1)];
    colprev[j + 1] = 0;  // best(j+1, j-1) empty
    for (int k = 1; k < j; k++)
      gate[k] = matchable(s[k - 1], s[j - 1]) ? 1 : kern::kNegGate;

    for (int i = j - 1; i >= 1; i--) {
      // k ranges over [i, j-1]; a[t]=best(i, i-1+t), b[t]=best(i+1+t, j-1)
      const int32_t* a = ft.t.data() + static_cast<size_t>(i) * ft.w + (i - 1);
      const int32_t* b = colprev.data() + (i + 1);
      const int32_t* g = gate.data() + i;
      int32_t cand = kern::max_sum3(kind, a, b, g, j - i);
      int32_t skip = ft.t[static_cast<size_t>(i) * ft.w + (j - 1)];
      ft.t[static_cast<size_t>(i) * ft.w + j] = std::max(skip, cand < 0 ? 0 : cand);
    }
  }
  return ft;
}

void traceback(const Seq& s, const FoldTable& ft, int i, int j, Folding& out) {
  while (j > i) {
    if (ft.at(i, j) == ft.at(i, j - 1)) {
      j--;
      continue;
    }
    for (int k = i; k < j; k++) {
      if (!matchable(s[k - 1], s[j - 1])) continue;
      if (ft.at(i, k - 1) + 1 + ft.at(k + 1, j - 1) == ft.at(i, j)) {
        out.pairs.emplace_back(k, j);
        traceback(s, ft, i, k - 1, out);
        i = k + 1;
        j = j - 1;
        break;
      }
    }
  }
}

}  // namespace

long long rna_fold_score(const Seq& s, kern::Kind kind) {
  if (s.empty()) return 0;
  FoldTable ft = fill_table(s, kind);
  return ft.at(1, ft.n);
}

RnaFoldResult rna_fold(const Seq& s, kern::Kind kind) {
  RnaFoldResult res;
  if (s.empty()) return res;
  FoldTable ft = fill_table(s, kind);
  res.score = ft.at(1, ft.n);
  traceback(s, ft, 1, ft.n, res.folding);
  std::sort(res.folding.pairs.begin(), res.folding.pairs.end());
  return res;
}

namespace {

long long brute_interval(const Seq& s, int i, int j) {
  if (i >= j) return 0;
  // position i unmatched
  long long best = brute_interval(s, i + 1, j);
  // position i matched to each compatible t
  for (int t = i + 1; t <= j; t++) {
    if (!matchable(s[i - 1], s[t - 1])) continue;
    best = std::max(best, 1 + brute_interval(s, i + 1, t - 1) + brute_interval(s, t + 1, j));
  }
  return best;
}

}  // namespace

long long rna_fold_bruteforce(const Seq& s) {
  if (s.size() > 16) throw std::invalid_argument("rna_fold_bruteforce: input longer than 16");
  return brute_interval(s, 1, static_cast<int>(s.size()));
}

bool check_folding(const Seq& s, const Folding& f, long long score) {
  const int n = static_cast<int>(s.size());
  if (static_cast<long long>(f.pairs.size()) != score) return false;
  std::set<int> used;
  for (auto [i, j] : f.pairs) {
    if (i < 1 || j > n || i >= j) return false;
    if (!matchable(s[i - 1], s[j - 1])) return false;
    if (!used.insert(i).second || !used.insert(j).second) return false;
  }
  // no interleaving
  for (size_t a = 0; a < f.pairs.size(); a++)
    for (size_t b = a + 1; b < f.pairs.size(); b++) {
      auto [i1, j1] = f.pairs[a];
      auto [i2, j2] = f.pairs[b];
      if ((i1 < i2 && i2 < j1 && j1 < j2) || (i2 < i1 && i1 < j2 && j2 < j1)) return false;
    }
  return true;
}

}  // namespace seqfold
