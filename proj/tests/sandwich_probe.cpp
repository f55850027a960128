// Development probe for the alignment gadget: hammers the sandwich contract
// against the exhaustive oracles and prints any violation.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "seqfold/alignment.hpp"
#include "seqfold/core.hpp"
#include "seqfold/gadget.hpp"
#include "seqfold/lcs.hpp"
#include "seqfold/rng.hpp"

using namespace seqfold;

int main(int argc, char** argv) {
  uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  int trials = argc > 2 ? std::atoi(argv[2]) : 2000;
  bool shrunk = argc > 3 && std::string(argv[3]) == "shrunk";
  GadgetParams params = shrunk ? shrunk_gadget_params() : default_gadget_params();

  Rng rng(seed);
  long long violations = 0;
  for (int trial = 0; trial < trials; trial++) {
    int n = 1 + static_cast<int>(rng.below(4));
    int m = 1 + static_cast<int>(rng.below(n));
    int lx = 1 + static_cast<int>(rng.below(6));
    int sx = static_cast<int>(rng.below(lx + 1));
    int ly = 1 + static_cast<int>(rng.below(6));
    int sy = static_cast<int>(rng.below(ly + 1));

    auto make_of_type = [&](int len, int ones) {
      Seq s;
      for (int i = 0; i < len; i++) s.push_back(i < ones ? Sym::One : Sym::Zero);
      // shuffle
      for (int i = len - 1; i > 0; i--) {
        int j = static_cast<int>(rng.below(i + 1));
        std::swap(s.sym[i], s.sym[j]);
      }
      return s;
    };

    std::vector<Seq> xs, ys;
    for (int i = 0; i < n; i++) xs.push_back(make_of_type(lx, sx));
    for (int j = 0; j < m; j++) ys.push_back(make_of_type(ly, sy));

    SeqType tx{lx, sx}, ty{ly, sy};
    Seq gx = ga_x(m, ty, xs, params);
    Seq gy = ga_y(n, tx, ys, params);
    long long c = ga_constant(n, m, tx, ty, params);
    long long mid = lcs_delta(gx, gy) - c;
    long long lo = min_alignment_cost(xs, ys, false);
    long long hi = min_alignment_cost(xs, ys, true);

    if (!(lo <= mid && mid <= hi)) {
      violations++;
      if (violations <= 20) {
        std::printf("violation trial=%d n=%d m=%d tx=(%d,%d) ty=(%d,%d) lo=%lld mid=%lld hi=%lld\n",
                    trial, n, m, lx, sx, ly, sy, lo, mid, hi);
        std::printf("  xs:");
        for (auto& x : xs) std::printf(" %s", to_digits(x).c_str());
        std::printf("\n  ys:");
        for (auto& y : ys) std::printf(" %s", to_digits(y).c_str());
        std::printf("\n");
      }
    }
  }
  std::printf("%s: %lld violations over %d trials\n", shrunk ? "shrunk" : "default", violations, trials);
  return violations > 0 ? 1 : 0;
}
