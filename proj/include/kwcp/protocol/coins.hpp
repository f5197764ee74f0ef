#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>

#include "kwcp/protocol/bitstring.hpp"

namespace kwcp {

// SplitMix64 output function.
std::uint64_t mix64(std::uint64_t z) noexcept;

// Seed for an independent sub-stream, e.g. one per Monte-Carlo trial.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

// Public random coins shared by both parties.
//
// A seeded stream is counter mode: 64-bit block j is mix64(seed + (j + 1) * gamma),
// and bits are consumed least-significant first within a block. Whatever the
// sequence of draw sizes, the t-th bit drawn is the same.
//
// A scripted stream replays a fixed bit sequence and throws std::out_of_range
// once exhausted; tests use it to enumerate the whole coin space of a protocol.
class CoinStream {
 public:
  explicit CoinStream(std::uint64_t seed) noexcept : seed_(seed) {}
  static CoinStream scripted(BitString bits);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t position() const noexcept { return position_; }

  // Next `count` bits (1 <= count <= 64); the first drawn bit is bit 0 of the result.
  std::uint64_t draw_word(unsigned count);

  // Next `count` bits as a BitString (first drawn bit at position 1).
  BitString draw_bits(std::size_t count);

 private:
  std::uint64_t block(std::uint64_t index);

  std::uint64_t seed_ = 0;
  std::uint64_t position_ = 0;
  std::uint64_t cached_index_ = ~std::uint64_t{0};
  std::uint64_t cached_block_ = 0;
  std::shared_ptr<const BitString> script_;
};

}  // namespace kwcp
