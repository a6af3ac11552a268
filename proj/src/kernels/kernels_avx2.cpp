#include <immintrin.h>

#include "epigraph/kernels.hpp"

namespace epigraph::kernels::avx2 {

namespace {

inline std::int64_t hsum(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v), hi = _mm256_extracti128_si256(v, 1);
  __m128i s = _mm_add_epi64(lo, hi);
  return _mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1);
}

}  // namespace

std::int64_t masked_sum(const std::int32_t* masses, std::size_t count, const std::uint64_t* mask) {
  const __m256i bits = _mm256_setr_epi32(1, 2, 4, 8, 16, 32, 64, 128);
  __m256i acc = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 8 <= count; w += 8) {
    std::uint32_t byte = (mask[w >> 6] >> (w & 63)) & 0xff;
    if (!byte) continue;
    __m256i sel = _mm256_cmpeq_epi32(_mm256_and_si256(_mm256_set1_epi32(static_cast<int>(byte)), bits), bits);
    __m256i v = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(masses + w)), sel);
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(v)));
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(v, 1)));
  }
  std::int64_t s = hsum(acc);
  for (; w < count; ++w)
    if ((mask[w >> 6] >> (w & 63)) & 1) s += masses[w];
  return s;
}

std::int64_t dot(const std::int32_t* a, const std::int32_t* b, std::size_t count) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(va, vb));
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32)));
  }
  std::int64_t s = hsum(acc);
  for (; i < count; ++i) s += std::int64_t{a[i]} * b[i];
  return s;
}

}  // namespace epigraph::kernels::avx2
