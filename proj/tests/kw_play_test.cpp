#include <gtest/gtest.h>

#include "kwcp/bench/trials.hpp"
#include "kwcp/eqgt/walk_tree.hpp"
#include "kwcp/kw/kw_play.hpp"
#include "test_support.hpp"

namespace kwcp::kw {
namespace {

using testing::assignment_from_mask;

// depth * (largest threshold bound at eps / depth + 2), recomputed from the tree.
std::size_t bound_oracle(const SearchTree& tree, double eps_total) {
  const std::size_t d = depth(tree);
  std::size_t per_node = 0;
  for (const auto& v : tree.nodes) {
    if (v.leaf) continue;
    const std::size_t width = bit_width(v.query.as_threshold());
    per_node = std::max(per_node, gt_walk_bit_bound(WalkParams::defaults(width, eps_total / static_cast<double>(d))));
  }
  return d * (per_node + 2);
}

TEST(KwPlay, SingleVariableAliceHoldsAll) {
  const cp::System sys = cp::parse_system("1\n1 0\n-1 -1\n");
  const cp::Proof proof = cp::parse_proof("L1: axiom 1 ; 1 0\nL2: axiom 2 ; -1 -1\nL3: add L1 L2 ; 0 -1\n", 1);
  const SearchTree tree = build_search_tree(proof, sys);
  const Partition part = Partition::parse("1;", 1);
  const double eps = 0.05;
  const std::size_t trials = 10000;
  const TrialStats stats = run_trials(trials, [&](std::size_t t) {
    CoinStream coins(derive_seed(7, t));
    const auto r = kw_play(tree, part, Assignment{1}, Assignment{}, eps, coins);
    return TrialOutcome{r.output != 1, bits_used(r.transcript)};
  });
  EXPECT_LE(stats.error_rate(), testing::error_ceiling(eps, trials));
  EXPECT_LE(stats.max_bits, kw_bit_bound(tree, eps));
}

TEST(KwPlay, PairCoverAtZero) {
  const auto b = testing::load_bundled("pair_cover");
  const SearchTree tree = build_search_tree(b.proof, b.system);
  const Partition part = Partition::parse("1;2", 2);
  const double eps = 0.05;
  const std::size_t trials = 10000;
  const std::size_t bound = kw_bit_bound(tree, eps);
  const TrialStats stats = run_trials(trials, [&](std::size_t t) {
    CoinStream coins(derive_seed(11, t));
    const auto r = kw_play(tree, part, Assignment{0}, Assignment{0}, eps, coins);
    return TrialOutcome{r.output != 1, bits_used(r.transcript)};
  });
  EXPECT_LE(stats.error_rate(), testing::error_ceiling(eps, trials));
  EXPECT_LE(stats.max_bits, bound);
}

TEST(KwPlay, BitBoundFormula) {
  for (const char* stem : testing::kBundledStems) {
    const auto b = testing::load_bundled(stem);
    const SearchTree tree = build_search_tree(b.proof, b.system);
    for (double eps : {0.05, 0.2}) EXPECT_EQ(kw_bit_bound(tree, eps), bound_oracle(tree, eps)) << stem;
  }
}

TEST(KwPlay, DepthZeroTreeCostsNothing) {
  const cp::System sys = cp::parse_system("2\n0 0 -1\n");
  const cp::Proof proof = cp::parse_proof("L1: axiom 1 ; 0 0 -1\n", 2);
  const SearchTree tree = build_search_tree(proof, sys);
  CoinStream coins(0);
  const auto r = kw_play(tree, Partition::parse("1;2", 2), Assignment{1}, Assignment{0}, 0.1, coins);
  EXPECT_EQ(r.output, 1u);
  EXPECT_EQ(bits_used(r.transcript), 0u);
  EXPECT_EQ(kw_bit_bound(tree, 0.1), 0u);
}

// kw_play agrees with direct evaluation of the same tree.
TEST(KwPlay, AgreesWithEvaluation) {
  const auto b = testing::load_bundled("pigeonhole_4_3");
  const SearchTree tree = build_search_tree(b.proof, b.system);
  const double eps = 0.1;
  const std::size_t trials = 10000;
  const std::size_t bound = kw_bit_bound(tree, eps);
  const TrialStats stats = run_trials(trials, [&](std::size_t t) {
    CoinStream rng(derive_seed(13, 2 * t));
    const Assignment alpha = assignment_from_mask(rng.draw_word(12), 12);
    const Partition part = Partition::from_mask(rng.draw_word(12), 12);
    CoinStream coins(derive_seed(13, 2 * t + 1));
    const auto r = kw_play(tree, part, project(alpha, part.alice), project(alpha, part.bob), eps, coins);
    EXPECT_LE(bits_used(r.transcript), bound);
    return TrialOutcome{r.output != eval_search_tree(tree, alpha), bits_used(r.transcript)};
  });
  EXPECT_LE(stats.error_rate(), testing::error_ceiling(eps, trials));
}

TEST(KwPlay, Errors) {
  const auto b = testing::load_bundled("pair_cover");
  const SearchTree tree = build_search_tree(b.proof, b.system);
  CoinStream coins(0);
  EXPECT_THROW(kw_play(tree, Partition::parse("1;2", 2), Assignment{0, 0}, Assignment{}, 0.1, coins), InputError);
  EXPECT_THROW(kw_play(tree, Partition::parse("1;2", 2), Assignment{0}, Assignment{0}, 1.5, coins), InputError);
  Partition bad{{1}, {}};
  EXPECT_THROW(kw_play(tree, bad, Assignment{0}, Assignment{}, 0.1, coins), InputError);
}

}  // namespace
}  // namespace kwcp::kw
