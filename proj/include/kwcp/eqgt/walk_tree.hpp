#pragma once

#include <cstddef>
#include <vector>

namespace kwcp {

// Defaults and limits for the random-walk GT protocol.
struct WalkParams {
  double epsilon = 0.25;
  std::size_t chain_len = 1;
  std::size_t steps = 1;       // walk length m
  unsigned per_check_k = 2;    // fingerprint bits per EQ test, error 2^-k each

  // chain_len = ceil(4 log2(1/eps)) + 4,
  // steps     = 8 (ceil(log2 n) + ceil(log2(1/eps))) + chain_len.
  static WalkParams defaults(std::size_t n, double epsilon);

  // Throws InputError unless 0 < epsilon < 1, chain_len >= 1, 1 <= per_check_k <= 64
  // and steps >= ceil(log2 n) + chain_len.
  void validate(std::size_t n) const;

  // Worst-case charge of one step: three k-bit fingerprints plus a 2-bit move.
  std::size_t per_step_bits() const noexcept { return 3 * std::size_t{per_check_k} + 2; }
};

// Hard transcript bound B * m + 2.
std::size_t gt_walk_bit_bound(const WalkParams& params) noexcept;

// ceil(log2(1 / epsilon)), tolerant to rounding for exact powers of two.
std::size_t log2_inverse_ceil(double epsilon);

enum class WalkNodeKind { Search, Leaf, Chain };

inline constexpr int kNoNode = -1;

// Node of the binary-search protocol tree. Search and leaf nodes carry the
// interval [lo, hi] holding the first difference, with positions 1..lo-1 believed
// equal. Chain nodes hang below leaf `index` (lo == hi == index) at chain_pos 1..len.
struct WalkNode {
  WalkNodeKind kind = WalkNodeKind::Search;
  std::size_t lo = 1;
  std::size_t hi = 1;
  int parent = kNoNode;
  int left = kNoNode;   // leaf: first chain node; chain: next chain node
  int right = kNoNode;
  std::size_t depth = 0;
  std::size_t chain_pos = 0;

  std::size_t mid() const noexcept { return (lo + hi) / 2; }
};

class WalkTree {
 public:
  WalkTree(std::size_t n, std::size_t chain_len);

  std::size_t n() const noexcept { return n_; }
  std::size_t chain_len() const noexcept { return chain_len_; }
  int root() const noexcept { return 0; }

  const WalkNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  const std::vector<WalkNode>& nodes() const noexcept { return nodes_; }

  int leaf(std::size_t index) const { return leaves_.at(index - 1); }

  // Largest depth of a search or leaf node.
  std::size_t search_depth() const noexcept { return search_depth_; }

  std::size_t count(WalkNodeKind kind) const noexcept;

 private:
  int add(WalkNode node);
  int build_search(std::size_t lo, std::size_t hi, int parent, std::size_t depth);

  std::size_t n_;
  std::size_t chain_len_;
  std::size_t search_depth_ = 0;
  std::vector<WalkNode> nodes_;
  std::vector<int> leaves_;
};

WalkTree build_walk_tree(std::size_t n, const WalkParams& params);

}  // namespace kwcp
