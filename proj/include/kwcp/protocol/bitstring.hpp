#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kwcp {

// Raised for malformed protocol inputs (length mismatch, bad bit strings, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Fixed-length bit string. Positions are 1-based and position 1 is the most
// significant bit, so the unsigned value is sum bit(i) * 2^(n - i).
//
// Storage is packed: position i lives in word (i - 1) / 64 at bit (i - 1) % 64.
// Bits beyond size() in the last word are always zero.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n);

  // "1010" -> x_1 = 1, x_2 = 0, ...
  static BitString parse(std::string_view text);
  // Big-endian n-bit encoding of value; value must fit in n bits.
  static BitString from_uint(std::uint64_t value, std::size_t n);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool bit(std::size_t i) const;
  void set(std::size_t i, bool value);

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  // Copy of positions lo..hi (inclusive, 1-based).
  BitString slice(std::size_t lo, std::size_t hi) const;

  // Unsigned-integer comparison; sizes must agree.
  int compare(const BitString& other) const;

  // Index of the first position where the strings differ, 0 when equal.
  std::size_t first_difference(const BitString& other) const;

  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t words_for_bits(std::size_t n) { return (n + 63) / 64; }

}  // namespace kwcp
