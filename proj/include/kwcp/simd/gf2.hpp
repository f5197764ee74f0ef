#pragma once

// GF(2) inner-product kernels used by the fingerprint tests.
//
// and_parity(a, b) = parity(popcount(a & b)) over a packed word range, i.e. the
// inner product mod 2 of two bit vectors. A portable scalar kernel is the
// reference; AVX2 and NEON variants are chosen at runtime when the CPU has them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace kwcp::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

// Whether this build contains the variant and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

// Best available variant, detected once.
Isa detected_isa() noexcept;

// Variant used by and_parity(); defaults to detected_isa().
Isa active_isa() noexcept;

// Pins the variant used by and_parity(). Throws std::invalid_argument when
// the variant is not available. Not thread-safe with respect to running kernels.
void force_isa(Isa isa);

bool and_parity(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) noexcept;

namespace detail {

bool and_parity_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept;
bool and_parity_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept;
bool and_parity_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) noexcept;

bool have_avx2_kernel() noexcept;
bool have_neon_kernel() noexcept;

}  // namespace detail
}  // namespace kwcp::simd
