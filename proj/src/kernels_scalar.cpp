#include "hallkit/kernels.hpp"

namespace hallkit::kernels::scalar {

Dominance dominance(std::span<const std::int32_t> lhs, std::span<const std::int32_t> rhs) {
  Dominance d;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (lhs[k] > rhs[k]) d.le = false;
    if (lhs[k] < rhs[k]) d.ge = false;
    if (!d.le && !d.ge) break;
  }
  return d;
}

void convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += ai * b[j];
  }
}

}  // namespace hallkit::kernels::scalar
