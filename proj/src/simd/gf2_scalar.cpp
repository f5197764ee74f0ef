#include "kwcp/simd/gf2.hpp"

#include <bit>

namespace kwcp::simd::detail {

bool and_parity_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words; ++i) acc ^= a[i] & b[i];
  return std::popcount(acc) & 1;
}

}  // namespace kwcp::simd::detail
