#include "kwcp/kw/search_tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kwcp::kw {
namespace {

class Builder {
 public:
  Builder(const cp::Proof& proof, const cp::System& system, BuildTrace* trace)
      : proof_(proof), system_(system), trace_(trace), consumer_(proof.size() + 1, 0) {
    for (const auto& line : proof.lines) {
      for (std::size_t id : line.premises()) consumer_[id] = line.id;
    }
  }

  SearchTree run() {
    std::vector<char> known_true(proof_.size() + 1, 0);
    // Boolean axioms hold for every 0-1 assignment.
    for (const auto& line : proof_.lines) {
      if (line.rule.kind == cp::RuleKind::Axiom && cp::is_boolean_axiom(system_, line.rule.axiom)) {
        mark_true(known_true, line.id);
      }
    }
    const std::size_t root_line = proof_.size();
    if (known_true[root_line]) throw std::logic_error("refutation root derived from boolean axioms alone");
    tree_.n = system_.n;
    tree_.root = build(root_line, known_true, 0);
    return std::move(tree_);
  }

 private:
  void mark_true(std::vector<char>& known_true, std::size_t id) const {
    known_true[id] = 1;
    for (std::size_t up = consumer_[id]; up != 0; up = consumer_[up]) {
      const auto premises = proof_.line(up).premises();
      if (!std::all_of(premises.begin(), premises.end(), [&](std::size_t p) { return known_true[p] != 0; })) break;
      known_true[up] = 1;
    }
  }

  std::vector<std::size_t> live_premises(std::size_t id, const std::vector<char>& known_true) const {
    std::vector<std::size_t> live;
    for (std::size_t p : proof_.line(id).premises()) {
      if (!known_true[p]) live.push_back(p);
    }
    return live;
  }

  // Post-order sizes of the live sub-proof below `root`.
  std::size_t measure(std::size_t root, const std::vector<char>& known_true, std::vector<std::size_t>& size,
                      std::vector<std::size_t>& order) const {
    std::size_t total = 1;
    for (std::size_t p : live_premises(root, known_true)) total += measure(p, known_true, size, order);
    size[root] = total;
    order.push_back(root);
    return total;
  }

  // Passes falsification down through lines with one live premise.
  std::size_t settle(std::size_t falsified, const std::vector<char>& known_true) const {
    for (;;) {
      const auto& line = proof_.line(falsified);
      if (line.rule.kind == cp::RuleKind::Axiom) return falsified;
      const auto live = live_premises(falsified, known_true);
      if (live.empty()) throw std::logic_error("falsified line with only satisfied premises");
      if (live.size() > 1) return falsified;
      falsified = live.front();
    }
  }

  int add(SearchNode node) {
    tree_.nodes.push_back(std::move(node));
    return static_cast<int>(tree_.nodes.size() - 1);
  }

  int build(std::size_t falsified, const std::vector<char>& known_true, std::size_t parent_size) {
    falsified = settle(falsified, known_true);
    std::vector<std::size_t> size(proof_.size() + 1, 0);
    std::vector<std::size_t> order;
    const std::size_t total = measure(falsified, known_true, size, order);
    if (trace_ != nullptr && parent_size != 0) trace_->shrink.emplace_back(parent_size, total);

    const auto& line = proof_.line(falsified);
    if (line.rule.kind == cp::RuleKind::Axiom) {
      if (cp::is_boolean_axiom(system_, line.rule.axiom) || known_true[falsified]) {
        throw std::logic_error("search reached a line that is known to be satisfied");
      }
      SearchNode leaf;
      leaf.leaf = true;
      leaf.axiom = line.rule.axiom;
      return add(std::move(leaf));
    }

    // Centroid: the line whose removal leaves the most balanced split.
    std::size_t centroid = 0;
    std::size_t best = total + 1;
    for (std::size_t id : order) {
      if (id == falsified) continue;
      const std::size_t worst = std::max(size[id], total - size[id]);
      if (worst < best) {
        best = worst;
        centroid = id;
      }
    }

    SearchNode query;
    query.query = proof_.line(centroid).stated;
    const int id = add(std::move(query));

    const int zero = build(centroid, known_true, total);
    std::vector<char> extended = known_true;
    mark_true(extended, centroid);
    const int one = build(falsified, extended, total);

    tree_.nodes[static_cast<std::size_t>(id)].zero = zero;
    tree_.nodes[static_cast<std::size_t>(id)].one = one;
    return id;
  }

  const cp::Proof& proof_;
  const cp::System& system_;
  BuildTrace* trace_;
  std::vector<std::size_t> consumer_;
  SearchTree tree_;
};

std::size_t depth_from(const SearchTree& tree, int id) {
  const SearchNode& v = tree.node(id);
  if (v.leaf) return 0;
  return 1 + std::max(depth_from(tree, v.zero), depth_from(tree, v.one));
}

}  // namespace

std::size_t depth(const SearchTree& tree) {
  if (tree.nodes.empty()) return 0;
  return depth_from(tree, tree.root);
}

std::size_t search_depth_bound(std::size_t proof_lines) {
  if (proof_lines <= 1) return 1;
  std::size_t d = 0;
  double reach = 1.0;
  while (reach < static_cast<double>(proof_lines)) {
    reach *= 1.5;
    ++d;
  }
  return d + 1;
}

SearchTree build_search_tree(const cp::Proof& proof, const cp::System& system, const cp::VerifyOptions& options,
                             BuildTrace* trace) {
  cp::VerifyOptions strict = options;
  strict.require_tree = true;
  const auto verdict = cp::verify_proof(proof, system, strict);
  if (!verdict.ok()) {
    throw std::invalid_argument("cannot build a search tree from an invalid refutation: " +
                                verdict.violation->to_string());
  }
  return Builder(proof, system, trace).run();
}

std::size_t eval_search_tree(const SearchTree& tree, std::span<const std::uint8_t> alpha) {
  if (alpha.size() != tree.n) {
    throw InputError("assignment has " + std::to_string(alpha.size()) + " values, tree expects " +
                     std::to_string(tree.n));
  }
  int at = tree.root;
  while (!tree.node(at).leaf) {
    const SearchNode& v = tree.node(at);
    at = v.query.satisfied_by(alpha) ? v.one : v.zero;
  }
  return tree.node(at).axiom;
}

}  // namespace kwcp::kw
