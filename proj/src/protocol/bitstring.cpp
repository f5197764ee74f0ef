#include "kwcp/protocol/bitstring.hpp"

#include <bit>

namespace kwcp {

BitString::BitString(std::size_t n) : size_(n), words_(words_for_bits(n), 0) {}

BitString BitString::parse(std::string_view text) {
  BitString out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw InputError("bit string may contain only '0' and '1': '" + std::string(text) + "'");
    }
    out.set(i + 1, c == '1');
  }
  return out;
}

BitString BitString::from_uint(std::uint64_t value, std::size_t n) {
  if (n < 64 && (value >> n) != 0) {
    throw InputError("value does not fit in " + std::to_string(n) + " bits");
  }
  BitString out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t shift = n - i;
    out.set(i, shift < 64 && ((value >> shift) & 1U));
  }
  return out;
}

bool BitString::bit(std::size_t i) const {
  if (i == 0 || i > size_) throw std::out_of_range("bit position out of range");
  const std::size_t p = i - 1;
  return (words_[p >> 6] >> (p & 63)) & 1U;
}

void BitString::set(std::size_t i, bool value) {
  if (i == 0 || i > size_) throw std::out_of_range("bit position out of range");
  const std::size_t p = i - 1;
  const std::uint64_t mask = std::uint64_t{1} << (p & 63);
  if (value) {
    words_[p >> 6] |= mask;
  } else {
    words_[p >> 6] &= ~mask;
  }
}

BitString BitString::slice(std::size_t lo, std::size_t hi) const {
  if (lo < 1 || hi > size_ || lo > hi) throw std::out_of_range("bad slice bounds");
  BitString out(hi - lo + 1);
  for (std::size_t i = lo; i <= hi; ++i) out.set(i - lo + 1, bit(i));
  return out;
}

std::size_t BitString::first_difference(const BitString& other) const {
  if (other.size_ != size_) throw InputError("bit strings differ in length");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t d = words_[w] ^ other.words_[w];
    if (d != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(d)) + 1;
  }
  return 0;
}

int BitString::compare(const BitString& other) const {
  const std::size_t i = first_difference(other);
  if (i == 0) return 0;
  return bit(i) ? 1 : -1;
}

std::string BitString::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 1; i <= size_; ++i) {
    if (bit(i)) s[i - 1] = '1';
  }
  return s;
}

}  // namespace kwcp
