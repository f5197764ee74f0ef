#pragma once

#include <cstddef>
#include <span>

#include "kwcp/kw/search_tree.hpp"
#include "kwcp/protocol/coins.hpp"
#include "kwcp/protocol/transcript.hpp"
#include "kwcp/threshold/threshold.hpp"

namespace kwcp::kw {

// Plays the falsified-axiom game on a search tree. Every query on the path is
// evaluated with threshold_protocol at error epsilon_total / depth(tree), and
// each party then spends one bit confirming the branch. The output is the
// reached leaf's axiom index.
ProtocolResult<std::size_t> kw_play(const SearchTree& tree, const Partition& part,
                                    std::span<const std::uint8_t> alpha_alice,
                                    std::span<const std::uint8_t> alpha_bob, double epsilon_total,
                                    CoinStream& coins);

// depth * (largest per-node threshold bound + 2).
std::size_t kw_bit_bound(const SearchTree& tree, double epsilon_total);

}  // namespace kwcp::kw
