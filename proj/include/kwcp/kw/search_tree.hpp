#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kwcp/cp/verify.hpp"

namespace kwcp::kw {

inline constexpr int kNoChild = -1;

// Internal nodes ask "is query satisfied?" and follow `one` when it is,
// `zero` when it is falsified. Leaves name an explicit axiom (1-based).
struct SearchNode {
  bool leaf = false;
  cp::LinearInequality query;
  int zero = kNoChild;
  int one = kNoChild;
  std::size_t axiom = 0;
};

// Threshold decision tree for the falsified-axiom search.
struct SearchTree {
  std::size_t n = 0;
  int root = 0;
  std::vector<SearchNode> nodes;

  const SearchNode& node(int id) const { return nodes.at(static_cast<std::size_t>(id)); }
};

// Longest root-to-leaf path; a single leaf has depth 0.
std::size_t depth(const SearchTree& tree);

// ceil(log_{3/2} S) + 1.
std::size_t search_depth_bound(std::size_t proof_lines);

// Sub-proof sizes before and after every query edge taken during construction.
struct BuildTrace {
  std::vector<std::pair<std::size_t, std::size_t>> shrink;
};

// Builds a search tree from a tree-like refutation.
//
// The state is a line known to be falsified (initially the last line) and a set
// of lines known to be satisfied. Each query splits the live sub-proof at a
// centroid line: if the centroid is falsified the search continues inside its
// sub-proof, otherwise it is cut off as a known-true line. A falsified derived
// line with a single live premise passes falsification down to that premise
// without a query, so the search ends at an axiom falsified by every assignment
// that reaches it. Throws std::invalid_argument when the proof does not verify
// as tree-like.
SearchTree build_search_tree(const cp::Proof& proof, const cp::System& system,
                             const cp::VerifyOptions& options = {}, BuildTrace* trace = nullptr);

// Follows the query outcomes under alpha; returns the leaf's axiom index.
std::size_t eval_search_tree(const SearchTree& tree, std::span<const std::uint8_t> alpha);

// Text form:
//   search-tree n <n> nodes <count> root <id>
//   node <id> query <a_1 .. a_n c> zero <id> one <id>
//   node <id> leaf <axiom>
std::string write_search_tree(const SearchTree& tree);
SearchTree read_search_tree(std::string_view text);

}  // namespace kwcp::kw
