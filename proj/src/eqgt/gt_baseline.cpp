#include "kwcp/eqgt/gt_baseline.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "kwcp/eqgt/eq.hpp"

namespace kwcp {

std::size_t ceil_log2(std::size_t n) noexcept {
  return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

unsigned gt_baseline_eq_k(std::size_t n, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  return EqParams::for_error(epsilon / (2.0 * static_cast<double>(n))).k;
}

std::size_t gt_baseline_bit_bound(std::size_t n, double epsilon) {
  const std::size_t k = gt_baseline_eq_k(n, epsilon);
  return (ceil_log2(n) + 1) * (k + 1) + 2;
}

ProtocolResult<bool> gt_baseline(const BitString& x, const BitString& y, double epsilon,
                                 CoinStream& coins) {
  if (x.size() != y.size()) {
    throw InputError("GT inputs differ in length: " + std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()));
  }
  if (x.empty()) throw InputError("GT inputs must have at least one bit");
  const std::size_t n = x.size();
  const unsigned k = gt_baseline_eq_k(n, epsilon);

  Channel channel;
  std::size_t lo = 1;
  std::size_t hi = n;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const bool left_equal = eq_window(x, y, lo, mid, k, coins, channel);
    channel.send(Party::Bob, left_equal ? 1 : 0, 1);
    if (left_equal) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
    channel.next_round();
  }

  const bool all_equal = eq_window(x, y, 1, n, k, coins, channel);
  channel.send(Party::Bob, all_equal ? 1 : 0, 1);
  channel.next_round();

  bool answer = false;
  if (!all_equal) {
    const bool x_bit = channel.send(Party::Alice, x.bit(lo), 1) != 0;
    answer = x_bit && !y.bit(lo);
  }
  channel.send(Party::Bob, answer ? 1 : 0, 1);
  return {answer, channel.take()};
}

}  // namespace kwcp
