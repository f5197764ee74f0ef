#include "kwcp/kw/kw_play.hpp"

#include <algorithm>

namespace kwcp::kw {
namespace {

double per_node_epsilon(const SearchTree& tree, double epsilon_total) {
  if (!(epsilon_total > 0.0 && epsilon_total < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  return epsilon_total / static_cast<double>(std::max<std::size_t>(1, depth(tree)));
}

}  // namespace

ProtocolResult<std::size_t> kw_play(const SearchTree& tree, const Partition& part,
                                    std::span<const std::uint8_t> alpha_alice,
                                    std::span<const std::uint8_t> alpha_bob, double epsilon_total,
                                    CoinStream& coins) {
  part.validate(tree.n);
  if (alpha_alice.size() != part.alice.size() || alpha_bob.size() != part.bob.size()) {
    throw InputError("projected assignments do not match the partition sizes");
  }
  const double eps = per_node_epsilon(tree, epsilon_total);
  Channel channel;
  int at = tree.root;
  while (!tree.node(at).leaf) {
    const SearchNode& v = tree.node(at);
    const auto outcome = threshold_protocol(v.query.as_threshold(), part, alpha_alice, alpha_bob, eps, coins);
    channel.absorb(outcome.transcript);
    channel.send(Party::Alice, outcome.output ? 1 : 0, 1);
    channel.send(Party::Bob, outcome.output ? 1 : 0, 1);
    channel.next_round();
    at = outcome.output ? v.one : v.zero;
  }
  return {tree.node(at).axiom, channel.take()};
}

std::size_t kw_bit_bound(const SearchTree& tree, double epsilon_total) {
  const double eps = per_node_epsilon(tree, epsilon_total);
  std::size_t per_node = 0;
  for (const auto& v : tree.nodes) {
    if (!v.leaf) per_node = std::max(per_node, threshold_bit_bound(v.query.as_threshold(), eps));
  }
  return depth(tree) * (per_node + 2);
}

}  // namespace kwcp::kw
