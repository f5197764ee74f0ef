#include "kwcp/eqgt/walk_tree.hpp"

#include <algorithm>
#include <cmath>

#include "kwcp/eqgt/gt_baseline.hpp"
#include "kwcp/protocol/bitstring.hpp"

namespace kwcp {

std::size_t log2_inverse_ceil(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  return static_cast<std::size_t>(std::ceil(-std::log2(epsilon) - 1e-9));
}

WalkParams WalkParams::defaults(std::size_t n, double epsilon) {
  if (n < 1) throw InputError("input length must be positive");
  const std::size_t l = log2_inverse_ceil(epsilon);
  const auto chain = static_cast<std::size_t>(std::ceil(4.0 * -std::log2(epsilon) - 1e-9)) + 4;
  WalkParams p;
  p.epsilon = epsilon;
  p.chain_len = chain;
  p.steps = 8 * (ceil_log2(n) + l) + chain;
  p.per_check_k = 2;
  return p;
}

void WalkParams::validate(std::size_t n) const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  if (chain_len < 1) throw InputError("chain length must be positive");
  if (per_check_k < 1 || per_check_k > 64) throw InputError("per-check k must be in [1, 64]");
  if (steps < ceil_log2(n) + chain_len) {
    throw InputError("walk length " + std::to_string(steps) + " cannot reach chain depth " +
                     std::to_string(ceil_log2(n) + chain_len));
  }
}

std::size_t gt_walk_bit_bound(const WalkParams& params) noexcept {
  return params.per_step_bits() * params.steps + 2;
}

WalkTree::WalkTree(std::size_t n, std::size_t chain_len) : n_(n), chain_len_(chain_len), leaves_(n, kNoNode) {
  if (n < 1) throw InputError("input length must be positive");
  nodes_.reserve(2 * n - 1 + n * chain_len);
  build_search(1, n, kNoNode, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    int above = leaves_[i - 1];
    const std::size_t base = nodes_[static_cast<std::size_t>(above)].depth;
    for (std::size_t c = 1; c <= chain_len; ++c) {
      WalkNode chain;
      chain.kind = WalkNodeKind::Chain;
      chain.lo = chain.hi = i;
      chain.parent = above;
      chain.depth = base + c;
      chain.chain_pos = c;
      const int id = add(chain);
      nodes_[static_cast<std::size_t>(above)].left = id;
      above = id;
    }
  }
}

int WalkTree::add(WalkNode node) {
  nodes_.push_back(node);
  return static_cast<int>(nodes_.size() - 1);
}

int WalkTree::build_search(std::size_t lo, std::size_t hi, int parent, std::size_t depth) {
  WalkNode node;
  node.kind = lo == hi ? WalkNodeKind::Leaf : WalkNodeKind::Search;
  node.lo = lo;
  node.hi = hi;
  node.parent = parent;
  node.depth = depth;
  const int id = add(node);
  search_depth_ = std::max(search_depth_, depth);
  if (lo == hi) {
    leaves_[lo - 1] = id;
    return id;
  }
  const std::size_t mid = (lo + hi) / 2;
  const int l = build_search(lo, mid, id, depth + 1);
  const int r = build_search(mid + 1, hi, id, depth + 1);
  nodes_[static_cast<std::size_t>(id)].left = l;
  nodes_[static_cast<std::size_t>(id)].right = r;
  return id;
}

std::size_t WalkTree::count(WalkNodeKind kind) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [kind](const WalkNode& v) { return v.kind == kind; }));
}

WalkTree build_walk_tree(std::size_t n, const WalkParams& params) {
  if (params.chain_len < 1) throw InputError("chain length must be positive");
  return WalkTree(n, params.chain_len);
}

}  // namespace kwcp
