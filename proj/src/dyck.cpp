#include "seqfold/dyck.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace seqfold {

DyckSeq parse_dyck(std::string_view text) {
  DyckSeq out;
  out.sym.reserve(text.size());
  for (size_t i = 0; i < text.size(); i++) {
    char c = text[i];
    if (c >= 'a' && c <= 'p') {
      out.sym.push_back(static_cast<DyckSym>(c - 'a'));
    } else if (c == '\'') {
      if (out.empty() || !dyck_is_open(out.sym.back()))
        throw std::invalid_argument("parse_dyck: stray apostrophe at column " + std::to_string(i + 1));
      out.sym.back() |= kCloseBit;
    } else {
      throw std::invalid_argument(std::string("parse_dyck: bad character '") + c +
                                  "' at column " + std::to_string(i + 1));
    }
  }
  return out;
}

std::string dyck_to_string(const DyckSeq& s) {
  std::string out;
  for (DyckSym x : s.sym) {
    out.push_back(static_cast<char>('a' + dyck_type(x)));
    if (!dyck_is_open(x)) out.push_back('\'');
  }
  return out;
}

DyckSeq random_dyck(long long len, int types, Rng& rng) {
  if (types < 1 || types > kMaxDyckTypes) throw std::invalid_argument("random_dyck: bad type count");
  DyckSeq out;
  out.sym.reserve(len);
  for (long long i = 0; i < len; i++) {
    DyckSym t = static_cast<DyckSym>(rng.below(types));
    out.sym.push_back(rng.below(2) ? dyck_closer_of(t) : t);
  }
  return out;
}

int32_t dyck_pair_cost(DyckSym a, DyckSym b) {
  if (dyck_is_open(a) && b == dyck_closer_of(a)) return 0;
  if (!dyck_is_open(a) && dyck_is_open(b)) return kern::kInfCost;
  return 1;
}

namespace {

struct DyckTable {
  int n;
  int w;
  std::vector<int32_t> t;

  int32_t at(int i, int j) const { return j < i ? 0 : t[static_cast<size_t>(i) * w + j]; }
};

//   D(i,j) = min( D(i+1,j) + 1,
//                 min over k in [i, j-1] of D(i,k) + D(k+1,j),
//                 pair_cost(S[i],S[j]) + D(i+1,j-1) )
DyckTable fill_table(const DyckSeq& s, kern::Kind kind) {
  const int n = static_cast<int>(s.size());
  DyckTable dt{n, n + 2, {}};
  dt.t.assign(static_cast<size_t>(n + 2) * (n + 2), 0);

  std::vector<int32_t> colcur(n + 2, 0);  // colcur[k] = D(k, j) for k > current i

  for (int j = 1; j <= n; j++) {
    colcur[j + 1] = 0;  // D(j+1, j) empty
    for (int i = j; i >= 1; i--) {
      int32_t best = dt.at(i + 1, j) + 1;
      if (i < j) {
        int32_t pc = dyck_pair_cost(s[i - 1], s[j - 1]);
        best = std::min(best, pc + dt.at(i + 1, j - 1));
        // split: a[t] = D(i, i+t), b[t] = D(i+1+t, j), k = i+t in [i, j-1]
        const int32_t* a = dt.t.data() + static_cast<size_t>(i) * dt.w + i;
        const int32_t* b = colcur.data() + (i + 1);
        best = std::min(best, kern::min_sum2(kind, a, b, j - i));
      }
      dt.t[static_cast<size_t>(i) * dt.w + j] = best;
      colcur[i] = best;
    }
  }
  return dt;
}

void traceback(const DyckSeq& s, const DyckTable& dt, int i, int j, DyckSolution& out) {
  while (i <= j) {
    int32_t v = dt.at(i, j);
    if (v == dt.at(i + 1, j) + 1) {
      out.deleted.push_back(i);
      i++;
      continue;
    }
    int32_t pc = i < j ? dyck_pair_cost(s[i - 1], s[j - 1]) : kern::kInfCost;
    if (i < j && pc < kern::kInfCost && v == pc + dt.at(i + 1, j - 1)) {
      (pc == 0 ? out.matched : out.substituted).emplace_back(i, j);
      i++;
      j--;
      continue;
    }
    for (int k = i; k < j; k++) {
      if (v == dt.at(i, k) + dt.at(k + 1, j)) {
        traceback(s, dt, i, k, out);
        i = k + 1;
        break;
      }
    }
  }
}

}  // namespace

DyckResult dyck_edit_distance(const DyckSeq& s, kern::Kind kind) {
  DyckResult res;
  if (s.empty()) return res;
  DyckTable dt = fill_table(s, kind);
  res.cost = dt.at(1, dt.n);
  traceback(s, dt, 1, dt.n, res.witness);
  std::sort(res.witness.matched.begin(), res.witness.matched.end());
  std::sort(res.witness.substituted.begin(), res.witness.substituted.end());
  std::sort(res.witness.deleted.begin(), res.witness.deleted.end());
  res.witness.cost = static_cast<long long>(res.witness.substituted.size() + res.witness.deleted.size());
  return res;
}

namespace {

long long brute_interval(const DyckSeq& s, int i, int j) {
  if (i > j) return 0;
  // position i deleted
  long long best = 1 + brute_interval(s, i + 1, j);
  // position i paired with each t
  for (int t = i + 1; t <= j; t++) {
    int32_t pc = dyck_pair_cost(s[i - 1], s[t - 1]);
    if (pc >= kern::kInfCost) continue;
    best = std::min(best, pc + brute_interval(s, i + 1, t - 1) + brute_interval(s, t + 1, j));
  }
  return best;
}

}  // namespace

long long dyck_edit_bruteforce(const DyckSeq& s) {
  if (s.size() > 12) throw std::invalid_argument("dyck_edit_bruteforce: input longer than 12");
  return brute_interval(s, 1, static_cast<int>(s.size()));
}

bool check_dyck_solution(const DyckSeq& s, const DyckSolution& w, long long cost) {
  const int n = static_cast<int>(s.size());
  if (w.cost != cost) return false;
  if (static_cast<long long>(w.substituted.size() + w.deleted.size()) != cost) return false;

  // every index in exactly one role
  std::set<int> used;
  auto claim = [&](int i) {
    if (i < 1 || i > n) return false;
    return used.insert(i).second;
  };
  for (auto [i, j] : w.matched)
    if (!(claim(i) && claim(j) && i < j)) return false;
  for (auto [i, j] : w.substituted)
    if (!(claim(i) && claim(j) && i < j)) return false;
  for (int i : w.deleted)
    if (!claim(i)) return false;
  if (static_cast<int>(used.size()) != n) return false;

  for (auto [i, j] : w.matched)
    if (!(dyck_is_open(s[i - 1]) && s[j - 1] == dyck_closer_of(s[i - 1]))) return false;
  for (auto [i, j] : w.substituted) {
    if (dyck_pair_cost(s[i - 1], s[j - 1]) != 1) return false;
    if (!dyck_is_open(s[i - 1]) && dyck_is_open(s[j - 1])) return false;
  }

  // crossing check on the union
  std::vector<std::pair<int, int>> all(w.matched);
  all.insert(all.end(), w.substituted.begin(), w.substituted.end());
  for (size_t a = 0; a < all.size(); a++)
    for (size_t b = a + 1; b < all.size(); b++) {
      auto [i1, j1] = all[a];
      auto [i2, j2] = all[b];
      if ((i1 < i2 && i2 < j1 && j1 < j2) || (i2 < i1 && i1 < j2 && j2 < j1)) return false;
    }
  return true;
}

}  // namespace seqfold
