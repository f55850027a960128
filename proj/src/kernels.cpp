#include "seqfold/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace seqfold::kern {

const char* name(Kind k) { return k == Kind::scalar ? "scalar" : "avx2"; }

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Kind best() {
  static const Kind chosen = [] {
    if (const char* env = std::getenv("SEQFOLD_KERNEL")) {
      if (std::strcmp(env, "scalar") == 0) return Kind::scalar;
      if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Kind::avx2;
    }
    return cpu_has_avx2() ? Kind::avx2 : Kind::scalar;
  }();
  return chosen;
}

namespace detail {

int32_t max_sum3_scalar(const int32_t* a, const int32_t* b, const int32_t* gate, int len) {
  int32_t best = kNegGate;
  for (int t = 0; t < len; t++) best = std::max(best, a[t] + b[t] + gate[t]);
  return best;
}

int32_t min_sum2_scalar(const int32_t* a, const int32_t* b, int len) {
  int32_t best = kInfCost;
  for (int t = 0; t < len; t++) best = std::min(best, a[t] + b[t]);
  return best;
}

#if defined(__x86_64__) || defined(__i386__)

__attribute__((target("avx2")))
int32_t max_sum3_avx2(const int32_t* a, const int32_t* b, const int32_t* gate, int len) {
  __m256i acc = _mm256_set1_epi32(kNegGate);
  int t = 0;
  for (; t + 8 <= len; t += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + t));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + t));
    __m256i vg = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gate + t));
    __m256i s = _mm256_add_epi32(_mm256_add_epi32(va, vb), vg);
    acc = _mm256_max_epi32(acc, s);
  }
  alignas(32) int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  int32_t best = kNegGate;
  for (int i = 0; i < 8; i++) best = std::max(best, lanes[i]);
  for (; t < len; t++) best = std::max(best, a[t] + b[t] + gate[t]);
  return best;
}

__attribute__((target("avx2")))
int32_t min_sum2_avx2(const int32_t* a, const int32_t* b, int len) {
  __m256i acc = _mm256_set1_epi32(kInfCost);
  int t = 0;
  for (; t + 8 <= len; t += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + t));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + t));
    acc = _mm256_min_epi32(acc, _mm256_add_epi32(va, vb));
  }
  alignas(32) int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  int32_t best = kInfCost;
  for (int i = 0; i < 8; i++) best = std::min(best, lanes[i]);
  for (; t < len; t++) best = std::min(best, a[t] + b[t]);
  return best;
}

#else

int32_t max_sum3_avx2(const int32_t* a, const int32_t* b, const int32_t* gate, int len) {
  return max_sum3_scalar(a, b, gate, len);
}

int32_t min_sum2_avx2(const int32_t* a, const int32_t* b, int len) {
  return min_sum2_scalar(a, b, len);
}

#endif

}  // namespace detail

int32_t max_sum3(Kind k, const int32_t* a, const int32_t* b, const int32_t* gate, int len) {
  return k == Kind::avx2 ? detail::max_sum3_avx2(a, b, gate, len)
                         : detail::max_sum3_scalar(a, b, gate, len);
}

int32_t min_sum2(Kind k, const int32_t* a, const int32_t* b, int len) {
  return k == Kind::avx2 ? detail::min_sum2_avx2(a, b, len)
                         : detail::min_sum2_scalar(a, b, len);
}

}  // namespace seqfold::kern
