#include "kwcp/protocol/coins.hpp"

#include <stdexcept>

namespace kwcp {
namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

}  // namespace

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(mix64(seed) ^ (index + 1) * kGamma);
}

CoinStream CoinStream::scripted(BitString bits) {
  CoinStream s(0);
  s.script_ = std::make_shared<const BitString>(std::move(bits));
  return s;
}

std::uint64_t CoinStream::block(std::uint64_t index) {
  if (index == cached_index_) return cached_block_;
  std::uint64_t value = 0;
  if (script_) {
    const auto words = script_->words();
    if (index < words.size()) value = words[index];
  } else {
    value = mix64(seed_ + (index + 1) * kGamma);
  }
  cached_index_ = index;
  cached_block_ = value;
  return value;
}

std::uint64_t CoinStream::draw_word(unsigned count) {
  if (count == 0 || count > 64) throw std::invalid_argument("draw_word: count must be in [1, 64]");
  if (script_ && position_ + count > script_->size()) {
    throw std::out_of_range("scripted coin stream exhausted");
  }
  const unsigned offset = static_cast<unsigned>(position_ & 63);
  const std::uint64_t index = position_ >> 6;
  std::uint64_t out = block(index) >> offset;
  const unsigned available = 64 - offset;
  if (count > available) out |= block(index + 1) << available;
  if (count < 64) out &= (std::uint64_t{1} << count) - 1;
  position_ += count;
  return out;
}

BitString CoinStream::draw_bits(std::size_t count) {
  if (count == 0) throw std::invalid_argument("draw_bits: count must be positive");
  BitString out(count);
  auto words = out.words();
  std::size_t left = count;
  for (auto& w : words) {
    const unsigned take = left >= 64 ? 64U : static_cast<unsigned>(left);
    w = draw_word(take);
    left -= take;
  }
  return out;
}

}  // namespace kwcp
