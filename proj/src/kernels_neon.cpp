#include <arm_neon.h>

#include "hallkit/kernels.hpp"

namespace hallkit::kernels::neon {

Dominance dominance(std::span<const std::int32_t> lhs, std::span<const std::int32_t> rhs) {
  const std::size_t size = lhs.size();
  uint32x4_t any_gt = vdupq_n_u32(0);
  uint32x4_t any_lt = vdupq_n_u32(0);
  std::size_t k = 0;
  for (; k + 4 <= size; k += 4) {
    const int32x4_t x = vld1q_s32(lhs.data() + k);
    const int32x4_t y = vld1q_s32(rhs.data() + k);
    any_gt = vorrq_u32(any_gt, vcgtq_s32(x, y));
    any_lt = vorrq_u32(any_lt, vcltq_s32(x, y));
  }
  Dominance d{vmaxvq_u32(any_gt) == 0, vmaxvq_u32(any_lt) == 0};
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
    const int32x2_t va = vdup_n_s32(static_cast<std::int32_t>(ai));
    std::int64_t* dst = out.data() + i;
    std::size_t j = 0;
    for (; j + 2 <= nb; j += 2) {
      const int32x2_t vb = vmovn_s64(vld1q_s64(b.data() + j));
      vst1q_s64(dst + j, vmlal_s32(vld1q_s64(dst + j), va, vb));
    }
    for (; j < nb; ++j) dst[j] += ai * b[j];
  }
}

}  // namespace hallkit::kernels::neon
