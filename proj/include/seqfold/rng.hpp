#pragma once

#include <cstdint>

namespace seqfold {

// splitmix64; used everywhere randomness is needed so that reports are
// reproducible across platforms (std::uniform_int_distribution is not).
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n > 0
  uint64_t below(uint64_t n) { return next() % n; }

  // uniform in [lo, hi] inclusive
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool chance(double p) { return unit() < p; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // independent stream for case i; lets suites dispatch cases concurrently
  Rng fork(uint64_t i) const {
    Rng r(state ^ (0xd1342543de82ef95ULL * (i + 1)));
    r.next();
    return r;
  }
};

}  // namespace seqfold
