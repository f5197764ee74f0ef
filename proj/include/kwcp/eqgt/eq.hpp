#pragma once

#include <cstddef>

#include "kwcp/protocol/bitstring.hpp"
#include "kwcp/protocol/coins.hpp"
#include "kwcp/protocol/transcript.hpp"

namespace kwcp {

// Number of public random strings; a false "equal" happens with probability 2^-k.
struct EqParams {
  unsigned k = 1;

  // Smallest k with 2^-k <= epsilon.
  static EqParams for_error(double epsilon);
  void validate() const;
};

// Fingerprint test on the window [lo, hi] of both inputs. The public coins pick k
// random strings r_1..r_k of length hi - lo + 1; Alice sends <x[lo..hi], r_j> mod 2
// for every j (k bits) and Bob compares against his own inner products.
// Returns Bob's verdict: true when all k bits match. One-sided: equal windows
// always give true. An empty window (lo > hi) is vacuously equal and costs nothing.
bool eq_window(const BitString& x, const BitString& y, std::size_t lo, std::size_t hi, unsigned k,
               CoinStream& coins, Channel& channel);

// Whole-string equality. The transcript holds exactly k bits (Alice -> Bob),
// plus one result bit from Bob when announce_result is set.
ProtocolResult<bool> eq_protocol(const BitString& x, const BitString& y, EqParams params,
                                 CoinStream& coins, bool announce_result = false);

}  // namespace kwcp
