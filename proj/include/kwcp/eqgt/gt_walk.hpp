#pragma once

#include <cstddef>
#include <functional>

#include "kwcp/eqgt/walk_tree.hpp"
#include "kwcp/protocol/bitstring.hpp"
#include "kwcp/protocol/coins.hpp"
#include "kwcp/protocol/transcript.hpp"

namespace kwcp {

enum class NodeVerdict { Consistent, Inconsistent };

struct NodeCheck {
  NodeVerdict verdict = NodeVerdict::Inconsistent;
  std::size_t bits = 0;
};

// Checks a search or leaf node [lo, hi]: EQ on x[1..lo-1] vs y[1..lo-1] must say
// "equal" and EQ on x[lo..hi] vs y[lo..hi] must say "unequal". Each test uses
// per_check_k fingerprint bits; the prefix test is skipped when lo == 1.
NodeVerdict verify_node(const WalkTree& tree, int node, const BitString& x, const BitString& y,
                        unsigned per_check_k, CoinStream& coins, Channel& channel);

NodeCheck verify_node(const WalkTree& tree, int node, const BitString& x, const BitString& y,
                      unsigned per_check_k, CoinStream& coins);

enum class WalkMove { Descend, Backtrack, Stay };

struct WalkStepInfo {
  std::size_t step = 0;   // 1-based
  int from = kNoNode;
  int to = kNoNode;
  WalkMove move = WalkMove::Stay;
  std::size_t bits = 0;   // charged during this step
};

using WalkObserver = std::function<void(const WalkStepInfo&)>;

// Random-walk GT on the protocol tree with chains (noisy binary search).
//
// Runs exactly params.steps steps from the root:
//  * search node: verify_node; if consistent, one more EQ on the left half
//    [lo, mid] picks the child (unequal -> left, equal -> right); otherwise back
//    up to the parent (a no-op at the root). Bob announces the move in 2 bits.
//  * leaf i: EQ on the prefix 1..i-1, Alice sends x_i, Bob replies with y_i and
//    his prefix verdict. Descend into the chain iff the prefix looks equal and
//    x_i != y_i; otherwise back up.
//  * chain node below leaf i: EQ on the prefix 1..i-1; "equal" descends (or stays
//    at the bottom), "unequal" backs up one node. Bob announces the move in 1 bit.
// The output is x_i == 1 when the walk ends inside the chain of leaf i and false
// otherwise; Bob sends it as a final result bit.
ProtocolResult<bool> gt_walk(const WalkTree& tree, const BitString& x, const BitString& y,
                             const WalkParams& params, CoinStream& coins,
                             const WalkObserver& observer = {});

// Same, on a per-thread cached tree for (n, chain_len).
ProtocolResult<bool> gt_walk(const BitString& x, const BitString& y, const WalkParams& params,
                             CoinStream& coins);

const WalkTree& cached_walk_tree(std::size_t n, const WalkParams& params);

}  // namespace kwcp
