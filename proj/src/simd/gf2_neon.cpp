#include "kwcp/simd/gf2.hpp"

#include <bit>

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#define KWCP_NEON_KERNEL 1
#endif

namespace kwcp::simd::detail {

#if defined(KWCP_NEON_KERNEL)

bool have_neon_kernel() noexcept { return true; }

bool and_parity_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  std::uint64_t folded = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
  for (; i < words; ++i) folded ^= a[i] & b[i];
  return std::popcount(folded) & 1;
}

#else

bool have_neon_kernel() noexcept { return false; }

bool and_parity_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept {
  return and_parity_scalar(a, b, words);
}

#endif

}  // namespace kwcp::simd::detail
