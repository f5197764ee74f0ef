#include "kwcp/eqgt/gt_walk.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "kwcp/eqgt/eq.hpp"

namespace kwcp {
namespace {

void check_inputs(const WalkTree& tree, const BitString& x, const BitString& y) {
  if (x.size() != y.size()) {
    throw InputError("GT inputs differ in length: " + std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()));
  }
  if (x.size() != tree.n()) {
    throw InputError("walk tree built for n = " + std::to_string(tree.n()) + ", inputs have " +
                     std::to_string(x.size()) + " bits");
  }
}

}  // namespace

const WalkTree& cached_walk_tree(std::size_t n, const WalkParams& params) {
  thread_local std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<WalkTree>> cache;
  auto& slot = cache[{n, params.chain_len}];
  if (!slot) slot = std::make_unique<WalkTree>(build_walk_tree(n, params));
  return *slot;
}

NodeVerdict verify_node(const WalkTree& tree, int node, const BitString& x, const BitString& y,
                        unsigned per_check_k, CoinStream& coins, Channel& channel) {
  const WalkNode& v = tree.node(node);
  if (v.kind == WalkNodeKind::Chain) throw InputError("verify_node applies to search and leaf nodes");
  const bool prefix_equal = eq_window(x, y, 1, v.lo - 1, per_check_k, coins, channel);
  const bool window_equal = eq_window(x, y, v.lo, v.hi, per_check_k, coins, channel);
  return prefix_equal && !window_equal ? NodeVerdict::Consistent : NodeVerdict::Inconsistent;
}

NodeCheck verify_node(const WalkTree& tree, int node, const BitString& x, const BitString& y,
                      unsigned per_check_k, CoinStream& coins) {
  Channel channel;
  const NodeVerdict verdict = verify_node(tree, node, x, y, per_check_k, coins, channel);
  return {verdict, channel.bits_used()};
}

ProtocolResult<bool> gt_walk(const WalkTree& tree, const BitString& x, const BitString& y,
                             const WalkParams& params, CoinStream& coins,
                             const WalkObserver& observer) {
  check_inputs(tree, x, y);
  params.validate(tree.n());
  if (params.chain_len != tree.chain_len()) throw InputError("walk tree chain length does not match params");
  const unsigned k = params.per_check_k;

  Channel channel;
  int at = tree.root();
  bool x_leaf_bit = false;  // x_i, as sent by Alice at the last leaf visit

  for (std::size_t step = 1; step <= params.steps; ++step) {
    const std::size_t before = channel.bits_used();
    const WalkNode& v = tree.node(at);
    int next = at;

    switch (v.kind) {
      case WalkNodeKind::Search: {
        if (verify_node(tree, at, x, y, k, coins, channel) == NodeVerdict::Consistent) {
          const bool left_equal = eq_window(x, y, v.lo, v.mid(), k, coins, channel);
          next = left_equal ? v.right : v.left;
        } else if (v.parent != kNoNode) {
          next = v.parent;
        }
        const std::uint64_t code = next == v.parent ? 0 : next == v.left ? 1 : next == v.right ? 2 : 3;
        channel.send(Party::Bob, code, 2);
        break;
      }
      case WalkNodeKind::Leaf: {
        const bool prefix_equal = eq_window(x, y, 1, v.lo - 1, k, coins, channel);
        x_leaf_bit = channel.send(Party::Alice, x.bit(v.lo), 1) != 0;
        const bool y_bit = y.bit(v.lo);
        channel.send(Party::Bob, (std::uint64_t{y_bit} << 1) | std::uint64_t{prefix_equal}, 2);
        if (prefix_equal && x_leaf_bit != y_bit) {
          next = v.left;
        } else if (v.parent != kNoNode) {
          next = v.parent;
        }
        break;
      }
      case WalkNodeKind::Chain: {
        const bool prefix_equal = eq_window(x, y, 1, v.lo - 1, k, coins, channel);
        channel.send(Party::Bob, prefix_equal ? 1 : 0, 1);
        if (!prefix_equal) {
          next = v.parent;
        } else if (v.left != kNoNode) {
          next = v.left;
        }
        break;
      }
    }

    if (observer) {
      WalkStepInfo info;
      info.step = step;
      info.from = at;
      info.to = next;
      info.move = next == at ? WalkMove::Stay
                  : next == v.parent ? WalkMove::Backtrack
                                     : WalkMove::Descend;
      info.bits = channel.bits_used() - before;
      observer(info);
    }
    at = next;
    channel.next_round();
  }

  const bool in_chain = tree.node(at).kind == WalkNodeKind::Chain;
  const bool answer = in_chain && x_leaf_bit;
  channel.send(Party::Bob, answer ? 1 : 0, 1);
  return {answer, channel.take()};
}

ProtocolResult<bool> gt_walk(const BitString& x, const BitString& y, const WalkParams& params,
                             CoinStream& coins) {
  if (x.size() != y.size()) {
    throw InputError("GT inputs differ in length: " + std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()));
  }
  return gt_walk(cached_walk_tree(x.size(), params), x, y, params, coins);
}

}  // namespace kwcp
