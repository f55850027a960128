#include "seqfold/lcs.hpp"

#include <bit>
#include <stdexcept>

namespace seqfold {

namespace {

void require_binary(const Seq& s, const char* who) {
  if (!is_binary(s)) throw std::invalid_argument(std::string(who) + ": primed symbol in input");
}

long long lcs_len_quadratic(const Seq& x, const Seq& y) {
  const size_t n = x.size(), m = y.size();
  std::vector<uint32_t> prev(m + 1, 0), cur(m + 1, 0);
  for (size_t i = 1; i <= n; i++) {
    for (size_t j = 1; j <= m; j++) {
      if (x[i - 1] == y[j - 1])
        cur[j] = prev[j - 1] + 1;
      else
        cur[j] = std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace

long long lcs_delta(const Seq& x, const Seq& y) {
  require_binary(x, "lcs_delta");
  require_binary(y, "lcs_delta");
  return static_cast<long long>(x.size() + y.size()) - 2 * lcs_len_quadratic(x, y);
}

BitPattern BitPattern::build(const Seq& pattern) {
  BitPattern p;
  p.len = static_cast<long long>(pattern.size());
  size_t words = (pattern.size() + 63) / 64;
  p.mask[0].assign(words, 0);
  p.mask[1].assign(words, 0);
  for (size_t i = 0; i < pattern.size(); i++) {
    Sym s = pattern[i];
    if (is_primed(s)) throw std::invalid_argument("BitPattern: primed symbol in input");
    p.mask[static_cast<size_t>(s)][i / 64] |= uint64_t{1} << (i % 64);
  }
  return p;
}

// Row update after Crochemore-Iliopoulos-Pinzon: R accumulates one set bit
// per LCS unit; the subtraction propagates borrows across words.
long long lcs_len_bits(const BitPattern& pattern, const Seq& text) {
  if (pattern.len == 0 || text.empty()) return 0;
  const size_t words = pattern.mask[0].size();
  std::vector<uint64_t> r(words, 0);
  for (Sym s : text.sym) {
    if (is_primed(s)) throw std::invalid_argument("lcs_len_bits: primed symbol in input");
    const uint64_t* m = pattern.mask[static_cast<size_t>(s)].data();
    uint64_t shift_carry = 1, borrow = 0;
    for (size_t w = 0; w < words; w++) {
      uint64_t rs = r[w] | m[w];
      uint64_t t = (r[w] << 1) | shift_carry;
      shift_carry = r[w] >> 63;
      uint64_t d1 = rs - t;
      uint64_t b1 = rs < t ? 1 : 0;
      uint64_t d2 = d1 - borrow;
      uint64_t b2 = d1 < borrow ? 1 : 0;
      borrow = b1 | b2;
      r[w] = rs & ~d2;
    }
  }
  long long total = 0;
  for (uint64_t w : r) total += std::popcount(w);
  return total;
}

long long lcs_delta_bitparallel(const Seq& x, const Seq& y) {
  // pattern on the shorter side keeps the word count down
  const Seq& pat = x.size() <= y.size() ? x : y;
  const Seq& txt = x.size() <= y.size() ? y : x;
  BitPattern p = BitPattern::build(pat);
  return static_cast<long long>(x.size() + y.size()) - 2 * lcs_len_bits(p, txt);
}

}  // namespace seqfold
