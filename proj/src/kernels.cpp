#include "hallkit/kernels.hpp"

#include <cstdlib>
#include <string>

namespace hallkit::kernels {

namespace {

Isa probe() {
  if (const char* env = std::getenv("HALLKIT_ISA")) {
    const std::string want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2" && isa_available(Isa::avx2)) return Isa::avx2;
    if (want == "neon" && isa_available(Isa::neon)) return Isa::neon;
  }
  if (isa_available(Isa::avx2)) return Isa::avx2;
  if (isa_available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(HALLKIT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(HALLKIT_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa isa = probe();
  return isa;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

Dominance dominance(std::span<const std::int32_t> lhs, std::span<const std::int32_t> rhs) {
  switch (active_isa()) {
#if defined(HALLKIT_HAVE_AVX2)
    case Isa::avx2: return avx2::dominance(lhs, rhs);
#endif
#if defined(HALLKIT_HAVE_NEON)
    case Isa::neon: return neon::dominance(lhs, rhs);
#endif
    default: return scalar::dominance(lhs, rhs);
  }
}

void convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out) {
  switch (active_isa()) {
#if defined(HALLKIT_HAVE_AVX2)
    case Isa::avx2: return avx2::convolve(a, b, out);
#endif
#if defined(HALLKIT_HAVE_NEON)
    case Isa::neon: return neon::convolve(a, b, out);
#endif
    default: return scalar::convolve(a, b, out);
  }
}

bool convolve_fits(std::int64_t max_abs_a, std::int64_t max_abs_b, std::size_t shorter_len) {
  constexpr std::int64_t kLane = std::int64_t{1} << 31;
  if (max_abs_a >= kLane || max_abs_b >= kLane) return false;
  // |sum| <= shorter_len * max_a * max_b must stay below 2^62.
  const unsigned __int128 bound = static_cast<unsigned __int128>(max_abs_a) *
                                  static_cast<unsigned __int128>(max_abs_b) *
                                  static_cast<unsigned __int128>(shorter_len);
  return bound < (static_cast<unsigned __int128>(1) << 62);
}

}  // namespace hallkit::kernels
