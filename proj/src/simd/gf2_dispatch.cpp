#include <atomic>
#include <stdexcept>
#include <string>

#include "kwcp/simd/gf2.hpp"

namespace kwcp::simd {
namespace {

using Kernel = bool (*)(const std::uint64_t*, const std::uint64_t*, std::size_t) noexcept;

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

Kernel kernel_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::Avx2: return &detail::and_parity_avx2;
    case Isa::Neon: return &detail::and_parity_neon;
    case Isa::Scalar: break;
  }
  return &detail::and_parity_scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

std::atomic<Kernel>& active_kernel() {
  static std::atomic<Kernel> k{kernel_for(active().load())};
  return k;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    case Isa::Scalar: break;
  }
  return "scalar";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Avx2: return detail::have_avx2_kernel() && cpu_has_avx2();
    case Isa::Neon: return detail::have_neon_kernel();
    case Isa::Scalar: return true;
  }
  return false;
}

Isa detected_isa() noexcept {
  static const Isa isa = isa_available(Isa::Avx2)   ? Isa::Avx2
                         : isa_available(Isa::Neon) ? Isa::Neon
                                                    : Isa::Scalar;
  return isa;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("SIMD variant not available: " + std::string(isa_name(isa)));
  }
  active().store(isa);
  active_kernel().store(kernel_for(isa));
}

bool and_parity(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) noexcept {
  const std::size_t words = a.size() < b.size() ? a.size() : b.size();
  return active_kernel().load(std::memory_order_relaxed)(a.data(), b.data(), words);
}

}  // namespace kwcp::simd
