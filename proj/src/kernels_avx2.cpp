#include <immintrin.h>

#include "hallkit/kernels.hpp"

namespace hallkit::kernels::avx2 {

Dominance dominance(std::span<const std::int32_t> lhs, std::span<const std::int32_t> rhs) {
  const std::size_t size = lhs.size();
  __m256i any_gt = _mm256_setzero_si256();
  __m256i any_lt = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 8 <= size; k += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lhs.data() + k));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rhs.data() + k));
    any_gt = _mm256_or_si256(any_gt, _mm256_cmpgt_epi32(x, y));
    any_lt = _mm256_or_si256(any_lt, _mm256_cmpgt_epi32(y, x));
    if (!_mm256_testz_si256(any_gt, any_gt) && !_mm256_testz_si256(any_lt, any_lt)) {
      return {false, false};
    }
  }
  Dominance d{static_cast<bool>(_mm256_testz_si256(any_gt, any_gt)),
              static_cast<bool>(_mm256_testz_si256(any_lt, any_lt))};
  for (; k < size; ++k) {
    if (lhs[k] > rhs[k]) d.le = false;
    if (lhs[k] < rhs[k]) d.ge = false;
  }
  return d;
}

void convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out) {
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t ai = a[i];
    if (ai == 0) continue;
    // _mm256_mul_epi32 multiplies the sign-extended low halves of each lane,
    // which is exact because every input fits in int32.
    const __m256i va = _mm256_set1_epi64x(ai);
    std::int64_t* dst = out.data() + i;
    std::size_t j = 0;
    for (; j + 4 <= nb; j += 4) {
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + j));
      __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
      acc = _mm256_add_epi64(acc, _mm256_mul_epi32(va, vb));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), acc);
    }
    for (; j < nb; ++j) dst[j] += ai * b[j];
  }
}

}  // namespace hallkit::kernels::avx2
