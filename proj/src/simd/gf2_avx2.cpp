// AVX2 variant. Only this translation unit is built for the avx2 target; callers
// must check have_avx2_kernel() and the CPU flag before dispatching here.

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define KWCP_AVX2_KERNEL 1
#if defined(__clang__)
#pragma clang attribute push(__attribute__((target("avx2,popcnt"))), apply_to = function)
#else
#pragma GCC target("avx2,popcnt")
#endif
#include <immintrin.h>
#endif

#include "kwcp/simd/gf2.hpp"

#include <bit>

namespace kwcp::simd::detail {

#if defined(KWCP_AVX2_KERNEL)

bool have_avx2_kernel() noexcept { return true; }

bool and_parity_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept {
  __m256i acc0 = _mm256_setzero_si256();
  __m256i acc1 = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= words; i += 8) {
    const __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i + 4));
    const __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i + 4));
    acc0 = _mm256_xor_si256(acc0, _mm256_and_si256(a0, b0));
    acc1 = _mm256_xor_si256(acc1, _mm256_and_si256(a1, b1));
  }
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc0 = _mm256_xor_si256(acc0, _mm256_and_si256(va, vb));
  }
  acc0 = _mm256_xor_si256(acc0, acc1);

  // Fold 256 -> 128 -> 64.
  __m128i half = _mm_xor_si128(_mm256_castsi256_si128(acc0), _mm256_extracti128_si256(acc0, 1));
  std::uint64_t acc = static_cast<std::uint64_t>(_mm_cvtsi128_si64(half)) ^
                      static_cast<std::uint64_t>(_mm_extract_epi64(half, 1));

  for (; i < words; ++i) acc ^= a[i] & b[i];
  return std::popcount(acc) & 1;
}

#else

bool have_avx2_kernel() noexcept { return false; }

bool and_parity_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept {
  return and_parity_scalar(a, b, words);
}

#endif

}  // namespace kwcp::simd::detail

#if defined(KWCP_AVX2_KERNEL) && defined(__clang__)
#pragma clang attribute pop
#endif
