#pragma once

#include <cstddef>

#include "kwcp/protocol/bitstring.hpp"
#include "kwcp/protocol/coins.hpp"
#include "kwcp/protocol/transcript.hpp"

namespace kwcp {

// Binary search for the most significant differing position, one EQ per level.
//
// Each EQ runs with error delta = epsilon / (2n), i.e. k = ceil(log2(2n / epsilon))
// fingerprint bits, followed by Bob's 1-bit verdict. A final whole-string EQ at the
// same delta guards the x == y case, then Alice sends x_i and Bob announces the
// result. Errors: at most ceil(log2 n) + 1 EQ calls can fail, each with probability
// <= delta, so the union bound gives (ceil(log2 n) + 1) * epsilon / (2n) <= epsilon.
//
// Output: x > y as unsigned integers. x == y always yields false.
ProtocolResult<bool> gt_baseline(const BitString& x, const BitString& y, double epsilon,
                                 CoinStream& coins);

// Per-call fingerprint count k = ceil(log2(2n / epsilon)).
unsigned gt_baseline_eq_k(std::size_t n, double epsilon);

// Exact worst-case transcript size: (ceil(log2 n) + 1) * (k + 1) + 2.
std::size_t gt_baseline_bit_bound(std::size_t n, double epsilon);

// ceil(log2 n) for n >= 1.
std::size_t ceil_log2(std::size_t n) noexcept;

}  // namespace kwcp
