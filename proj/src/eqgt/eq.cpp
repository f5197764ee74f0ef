#include "kwcp/eqgt/eq.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "kwcp/simd/gf2.hpp"

namespace kwcp {
namespace {

constexpr std::size_t kInlineWords = 8;

// Random mask aligned with the packed layout of the inputs: only positions
// lo..hi are populated, in drawing order.
void draw_window_mask(CoinStream& coins, std::size_t lo, std::size_t hi, std::span<std::uint64_t> out) {
  const std::size_t first = (lo - 1) >> 6;
  const std::size_t last = (hi - 1) >> 6;
  for (std::size_t w = first; w <= last; ++w) {
    const std::size_t a = std::max(lo - 1, w * 64);
    const std::size_t b = std::min(hi - 1, w * 64 + 63);
    const auto count = static_cast<unsigned>(b - a + 1);
    out[w - first] = coins.draw_word(count) << (a - w * 64);
  }
}

}  // namespace

EqParams EqParams::for_error(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  const double k = std::ceil(-std::log2(epsilon) - 1e-12);
  return EqParams{static_cast<unsigned>(std::max(1.0, k))};
}

void EqParams::validate() const {
  if (k < 1 || k > 64) throw InputError("EQ repetition count k must be in [1, 64]");
}

bool eq_window(const BitString& x, const BitString& y, std::size_t lo, std::size_t hi, unsigned k,
               CoinStream& coins, Channel& channel) {
  if (lo > hi) return true;
  if (lo < 1 || hi > x.size() || hi > y.size()) throw std::out_of_range("EQ window out of range");
  if (k < 1 || k > 64) throw InputError("EQ repetition count k must be in [1, 64]");

  const std::size_t first = (lo - 1) >> 6;
  const std::size_t nwords = ((hi - 1) >> 6) - first + 1;

  std::array<std::uint64_t, kInlineWords> inline_mask{};
  std::vector<std::uint64_t> heap_mask;
  std::span<std::uint64_t> mask(inline_mask.data(), nwords);
  if (nwords > kInlineWords) {
    heap_mask.resize(nwords);
    mask = heap_mask;
  }

  const auto xw = x.words().subspan(first, nwords);
  const auto yw = y.words().subspan(first, nwords);
  std::uint64_t alice = 0;
  std::uint64_t bob = 0;
  for (unsigned j = 0; j < k; ++j) {
    draw_window_mask(coins, lo, hi, mask);
    alice |= std::uint64_t{simd::and_parity(xw, mask)} << j;
    bob |= std::uint64_t{simd::and_parity(yw, mask)} << j;
  }
  const std::uint64_t received = channel.send(Party::Alice, alice, k);
  return received == bob;
}

ProtocolResult<bool> eq_protocol(const BitString& x, const BitString& y, EqParams params,
                                 CoinStream& coins, bool announce_result) {
  params.validate();
  if (x.size() != y.size()) {
    throw InputError("EQ inputs differ in length: " + std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()));
  }
  if (x.empty()) throw InputError("EQ inputs must have at least one bit");
  Channel channel;
  const bool equal = eq_window(x, y, 1, x.size(), params.k, coins, channel);
  if (announce_result) {
    channel.next_round();
    channel.send(Party::Bob, equal ? 1 : 0, 1);
  }
  return {equal, channel.take()};
}

}  // namespace kwcp
