#include <gtest/gtest.h>

#include <set>

#include "kwcp/eqgt/eq.hpp"
#include "kwcp/eqgt/gt_walk.hpp"
#include "kwcp/protocol/bitstring.hpp"
#include "kwcp/protocol/coins.hpp"
#include "kwcp/protocol/transcript.hpp"

namespace kwcp {
namespace {

TEST(BitString, MostSignificantBitFirst) {
  const BitString s = BitString::parse("1010");
  EXPECT_EQ(s.size(), 4u);
  EXPECT_TRUE(s.bit(1));
  EXPECT_FALSE(s.bit(2));
  EXPECT_EQ(BitString::from_uint(10, 4), s);
  EXPECT_EQ(s.to_string(), "1010");
}

TEST(BitString, CompareIsUnsignedOrder) {
  for (std::uint64_t a = 0; a < 32; ++a) {
    for (std::uint64_t b = 0; b < 32; ++b) {
      const int c = BitString::from_uint(a, 5).compare(BitString::from_uint(b, 5));
      EXPECT_EQ(c, a > b ? 1 : a < b ? -1 : 0) << a << " vs " << b;
    }
  }
}

TEST(BitString, FirstDifferenceAcrossWords) {
  BitString a(130);
  BitString b(130);
  EXPECT_EQ(a.first_difference(b), 0u);
  b.set(129, true);
  EXPECT_EQ(a.first_difference(b), 129u);
  a.set(70, true);
  EXPECT_EQ(a.first_difference(b), 70u);
  EXPECT_EQ(a.compare(b), 1);
}

TEST(BitString, SliceAndErrors) {
  const BitString s = BitString::parse("0110101");
  EXPECT_EQ(s.slice(2, 4).to_string(), "110");
  EXPECT_THROW(BitString::parse("01x"), InputError);
  EXPECT_THROW(BitString::from_uint(16, 4), InputError);
  EXPECT_THROW((void)s.bit(0), std::out_of_range);
  EXPECT_THROW((void)s.bit(8), std::out_of_range);
}

TEST(CoinStream, SameSeedSameBits) {
  CoinStream a(0);
  CoinStream b(0);
  EXPECT_EQ(a.draw_bits(8), b.draw_bits(8));
  EXPECT_EQ(a.position(), 8u);
}

// Frozen from an independent SplitMix64 implementation: the first block for
// seed 0 is 0xe220a8397b1dcdaf, for seed 1 it is 0x910a2dec89025cc1.
TEST(CoinStream, PinnedCounterModeBlocks) {
  CoinStream zero(0);
  CoinStream one(1);
  EXPECT_EQ(zero.draw_word(64), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(zero.draw_word(64), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(one.draw_word(64), 0x910a2dec89025cc1ULL);
  EXPECT_EQ(one.draw_word(64), 0xbeeb8da1658eec67ULL);
  EXPECT_EQ(CoinStream(0).draw_bits(8).to_string(), "11110101");
}

TEST(CoinStream, DifferentSeedsDiffer) {
  CoinStream a(0);
  CoinStream b(1);
  EXPECT_NE(a.draw_bits(64), b.draw_bits(64));
}

TEST(CoinStream, DrawsConcatenate) {
  CoinStream split(42);
  CoinStream whole(42);
  const std::uint64_t first = split.draw_word(3);
  const std::uint64_t second = split.draw_word(5);
  EXPECT_EQ(first | (second << 3), whole.draw_word(8));

  // Across a block boundary.
  CoinStream s1(7);
  CoinStream s2(7);
  s1.draw_word(60);
  s2.draw_word(60);
  const std::uint64_t a = s1.draw_word(10);
  const std::uint64_t lo = s2.draw_word(4);
  const std::uint64_t hi = s2.draw_word(6);
  EXPECT_EQ(a, lo | (hi << 4));
}

TEST(CoinStream, DrawBitsMatchesWords) {
  CoinStream a(9);
  CoinStream b(9);
  const BitString bits = a.draw_bits(100);
  for (std::size_t i = 1; i <= 100; ++i) EXPECT_EQ(bits.bit(i), b.draw_word(1) == 1) << i;
}

TEST(CoinStream, ScriptedReplaysAndExhausts) {
  CoinStream s = CoinStream::scripted(BitString::parse("1101"));
  EXPECT_EQ(s.draw_word(2), 0b11u);
  EXPECT_EQ(s.draw_word(2), 0b10u);
  EXPECT_THROW(s.draw_word(1), std::out_of_range);
}

TEST(CoinStream, DerivedSeedsAreDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 1000; ++t) seen.insert(derive_seed(5, t));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(derive_seed(5, 0), derive_seed(6, 0));
}

TEST(Transcript, BitsUsed) {
  Transcript empty;
  EXPECT_EQ(bits_used(empty), 0u);

  Transcript t;
  t.record(1, Party::Alice, 2);
  t.record(2, Party::Bob, 2);
  EXPECT_EQ(bits_used(t), 4u);
  EXPECT_EQ(t.bits_from(Party::Alice), 2u);
  EXPECT_THROW(t.record(1, Party::Alice, 1), std::logic_error);
}

TEST(Transcript, AppendShiftsRounds) {
  Transcript a;
  a.record(1, Party::Alice, 3);
  Transcript b;
  b.record(1, Party::Bob, 1);
  b.record(2, Party::Alice, 2);
  a.append(b);
  ASSERT_EQ(a.events().size(), 3u);
  EXPECT_EQ(a.events()[1].round, 2u);
  EXPECT_EQ(a.events()[2].round, 3u);
  EXPECT_EQ(a.total_bits(), 6u);
}

TEST(Transcript, EqProtocolWithThreeStringsCostsThreeBits) {
  CoinStream coins(3);
  const auto r = eq_protocol(BitString::parse("1010"), BitString::parse("0110"), EqParams{3}, coins);
  EXPECT_EQ(bits_used(r.transcript), 3u);
}

TEST(Transcript, TotalNeverDecreasesDuringWalk) {
  const WalkParams params = WalkParams::defaults(16, 0.125);
  const WalkTree tree = build_walk_tree(16, params);
  CoinStream coins(11);
  std::size_t total = 0;
  std::size_t steps = 0;
  gt_walk(tree, BitString::from_uint(40000, 16), BitString::from_uint(39999, 16), params, coins,
          [&](const WalkStepInfo& info) {
            total += info.bits;
            ++steps;
          });
  EXPECT_EQ(steps, params.steps);
  EXPECT_LE(total, gt_walk_bit_bound(params));
}

// Replaying with the same seed and inputs reproduces output and transcript exactly.
TEST(Replay, IdenticalSeedIdenticalRun) {
  CoinStream rng(1234);
  for (int rep = 0; rep < 50; ++rep) {
    const BitString x = rng.draw_bits(24);
    const BitString y = rng.draw_bits(24);
    const std::uint64_t seed = rng.draw_word(64);
    const WalkParams params = WalkParams::defaults(24, 0.1);
    CoinStream c1(seed);
    CoinStream c2(seed);
    const auto r1 = gt_walk(x, y, params, c1);
    const auto r2 = gt_walk(x, y, params, c2);
    EXPECT_EQ(r1.output, r2.output);
    EXPECT_EQ(r1.transcript, r2.transcript);
  }
}

}  // namespace
}  // namespace kwcp
