#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kwcp/protocol/bitstring.hpp"
#include "kwcp/protocol/coins.hpp"
#include "kwcp/protocol/transcript.hpp"

namespace kwcp {

using BigInt = boost::multiprecision::cpp_int;

// 0-1 assignment; entry j is the value of the j-th variable it covers.
using Assignment = std::vector<std::uint8_t>;

Assignment parse_assignment(std::string_view text);

// f(x) = 1 iff a_1 x_1 + ... + a_n x_n <= b.
struct ThresholdFunction {
  std::vector<BigInt> coefficients;
  BigInt bound;

  std::size_t n() const noexcept { return coefficients.size(); }
};

// Split of the variables 1..n between Alice and Bob. Either side may be empty.
struct Partition {
  std::vector<std::size_t> alice;
  std::vector<std::size_t> bob;

  // "1,3;2,4": Alice's indices, a semicolon, Bob's indices. Throws InputError
  // unless the two sides are disjoint and cover 1..n exactly.
  static Partition parse(std::string_view text, std::size_t n);

  // Alice gets everything in `alice_mask` (bit i-1 for variable i).
  static Partition from_mask(std::uint64_t alice_mask, std::size_t n);

  void validate(std::size_t n) const;
  std::string to_string() const;
};

// Restriction of a full assignment to the given variables, in that order.
Assignment project(std::span<const std::uint8_t> alpha, std::span<const std::size_t> vars);

bool eval_threshold(const ThresholdFunction& f, std::span<const std::uint8_t> alpha);

// Signed interval that contains both Alice's partial sum and Bob's b - (partial sum)
// for every partition and every assignment:
//   lo = min(S-, b - S+), hi = max(S+, b - S-),
// where S- / S+ are the sums of the negative / positive coefficients.
struct SignedRange {
  BigInt lo;
  BigInt hi;
};

SignedRange comparison_range(const ThresholdFunction& f);

// Bits needed for hi - lo of comparison_range(f), at least 1.
std::size_t bit_width(const ThresholdFunction& f);

// Big-endian fixed-width encoding of v - range_lo; strictly order preserving.
// Throws InputError when v lies outside [range_lo, range_hi].
BitString encode_signed(const BigInt& v, const BigInt& range_lo, const BigInt& range_hi);

// Randomized evaluation under a partition: Alice holds x_1 = sum over her
// variables, Bob holds b - x_2. Both encode into the common range and run gt_walk
// (default walk parameters at width bit_width(f) and the given epsilon).
// Output is 1 - [x_1 > b - x_2], i.e. f(alpha).
ProtocolResult<bool> threshold_protocol(const ThresholdFunction& f, const Partition& part,
                                        std::span<const std::uint8_t> alpha_alice,
                                        std::span<const std::uint8_t> alpha_bob, double epsilon,
                                        CoinStream& coins);

// Hard bound on threshold_protocol's transcript: the gt_walk bound at width bit_width(f).
std::size_t threshold_bit_bound(const ThresholdFunction& f, double epsilon);

// Deterministic alternative: Alice sends her partial sum in bit_width(f) bits and
// Bob answers with the result bit. Cost bit_width(f) + 1.
ProtocolResult<bool> threshold_partial_sum_protocol(const ThresholdFunction& f, const Partition& part,
                                                    std::span<const std::uint8_t> alpha_alice,
                                                    std::span<const std::uint8_t> alpha_bob);

// Per-node error budget 1 / (4 n_tree).
double default_threshold_epsilon(std::size_t n_tree);

}  // namespace kwcp
