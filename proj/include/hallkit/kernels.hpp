#pragma once

// Data-parallel inner loops. Each kernel has a portable scalar reference in
// namespace `scalar` and optional AVX2 / NEON variants; the unqualified entry
// points dispatch at runtime to the best variant the CPU supports.
//
// Set HALLKIT_ISA=scalar in the environment to force the reference path.

#include <cstdint>
#include <span>
#include <string_view>

namespace hallkit::kernels {

enum class Isa { scalar, avx2, neon };

/// Variant chosen for this process (CPU probe + HALLKIT_ISA override).
Isa active_isa();
std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);

struct Dominance {
  bool le = true;  // lhs[k] <= rhs[k] for every k
  bool ge = true;  // lhs[k] >= rhs[k] for every k
};

/// Entrywise dominance of two equal-length integer vectors.
Dominance dominance(std::span<const std::int32_t> lhs, std::span<const std::int32_t> rhs);

/// out[i + j] += a[i] * b[j]. Requires out.size() >= a.size() + b.size() - 1,
/// every |a[i]|, |b[j]| < 2^31, and no partial sum overflowing int64
/// (see convolve_fits).
void convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out);

/// True when convolve() is exact for inputs bounded by max_a, max_b.
bool convolve_fits(std::int64_t max_abs_a, std::int64_t max_abs_b, std::size_t shorter_len);

namespace scalar {
Dominance dominance(std::span<const std::int32_t> lhs, std::span<const std::int32_t> rhs);
void convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out);
}  // namespace scalar

namespace avx2 {
Dominance dominance(std::span<const std::int32_t> lhs, std::span<const std::int32_t> rhs);
void convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out);
}  // namespace avx2

namespace neon {
Dominance dominance(std::span<const std::int32_t> lhs, std::span<const std::int32_t> rhs);
void convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out);
}  // namespace neon

}  // namespace hallkit::kernels
