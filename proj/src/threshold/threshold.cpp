#include "kwcp/threshold/threshold.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "kwcp/eqgt/gt_walk.hpp"

namespace kwcp {
namespace {

std::size_t bits_of(const BigInt& v) {
  return v.is_zero() ? 0 : boost::multiprecision::msb(v) + 1;
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view token = text.substr(start, comma - start);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InputError("partition: bad variable index '" + std::string(token) + "'");
    }
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

BigInt partial_sum(const ThresholdFunction& f, std::span<const std::size_t> vars,
                   std::span<const std::uint8_t> values) {
  BigInt sum = 0;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (values[j]) sum += f.coefficients[vars[j] - 1];
  }
  return sum;
}

void check_projection(const Partition& part, std::span<const std::uint8_t> alpha_alice,
                      std::span<const std::uint8_t> alpha_bob, std::size_t n) {
  part.validate(n);
  if (alpha_alice.size() != part.alice.size() || alpha_bob.size() != part.bob.size()) {
    throw InputError("projected assignments do not match the partition sizes");
  }
  for (auto v : alpha_alice) {
    if (v > 1) throw InputError("assignment values must be 0 or 1");
  }
  for (auto v : alpha_bob) {
    if (v > 1) throw InputError("assignment values must be 0 or 1");
  }
}

}  // namespace

Assignment parse_assignment(std::string_view text) {
  Assignment out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw InputError("assignment may contain only '0' and '1': '" + std::string(text) + "'");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

Partition Partition::parse(std::string_view text, std::size_t n) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
    throw InputError("partition must look like \"1,3;2,4\" (exactly one ';')");
  }
  Partition p{parse_index_list(text.substr(0, semi)), parse_index_list(text.substr(semi + 1))};
  p.validate(n);
  return p;
}

Partition Partition::from_mask(std::uint64_t alice_mask, std::size_t n) {
  Partition p;
  for (std::size_t i = 1; i <= n; ++i) {
    ((alice_mask >> (i - 1)) & 1U ? p.alice : p.bob).push_back(i);
  }
  return p;
}

void Partition::validate(std::size_t n) const {
  std::vector<int> seen(n + 1, 0);
  for (const auto* side : {&alice, &bob}) {
    for (std::size_t i : *side) {
      if (i < 1 || i > n) throw InputError("partition: variable " + std::to_string(i) + " out of range 1.." + std::to_string(n));
      if (seen[i]++) throw InputError("partition: variable " + std::to_string(i) + " assigned twice");
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (!seen[i]) throw InputError("partition: variable " + std::to_string(i) + " not assigned");
  }
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < alice.size(); ++j) os << (j ? "," : "") << alice[j];
  os << ';';
  for (std::size_t j = 0; j < bob.size(); ++j) os << (j ? "," : "") << bob[j];
  return os.str();
}

Assignment project(std::span<const std::uint8_t> alpha, std::span<const std::size_t> vars) {
  Assignment out;
  out.reserve(vars.size());
  for (std::size_t i : vars) out.push_back(alpha[i - 1]);
  return out;
}

bool eval_threshold(const ThresholdFunction& f, std::span<const std::uint8_t> alpha) {
  if (alpha.size() != f.n()) {
    throw InputError("assignment has " + std::to_string(alpha.size()) + " values, function has " +
                     std::to_string(f.n()) + " variables");
  }
  BigInt sum = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i]) sum += f.coefficients[i];
  }
  return sum <= f.bound;
}

SignedRange comparison_range(const ThresholdFunction& f) {
  BigInt neg = 0;
  BigInt pos = 0;
  for (const auto& a : f.coefficients) {
    if (a < 0) {
      neg += a;
    } else {
      pos += a;
    }
  }
  SignedRange r;
  r.lo = std::min<BigInt>(neg, f.bound - pos);
  r.hi = std::max<BigInt>(pos, f.bound - neg);
  return r;
}

std::size_t bit_width(const ThresholdFunction& f) {
  const SignedRange r = comparison_range(f);
  return std::max<std::size_t>(1, bits_of(r.hi - r.lo));
}

BitString encode_signed(const BigInt& v, const BigInt& range_lo, const BigInt& range_hi) {
  if (range_lo > range_hi) throw InputError("encode_signed: empty range");
  if (v < range_lo || v > range_hi) throw InputError("encode_signed: value outside range");
  const std::size_t width = std::max<std::size_t>(1, bits_of(range_hi - range_lo));
  const BigInt offset = v - range_lo;
  BitString out(width);
  for (std::size_t i = 1; i <= width; ++i) {
    out.set(i, boost::multiprecision::bit_test(offset, static_cast<unsigned>(width - i)));
  }
  return out;
}

ProtocolResult<bool> threshold_protocol(const ThresholdFunction& f, const Partition& part,
                                        std::span<const std::uint8_t> alpha_alice,
                                        std::span<const std::uint8_t> alpha_bob, double epsilon,
                                        CoinStream& coins) {
  check_projection(part, alpha_alice, alpha_bob, f.n());
  const SignedRange range = comparison_range(f);

  // Alice: x_1. Bob: b - x_2.
  const BitString alice_code = encode_signed(partial_sum(f, part.alice, alpha_alice), range.lo, range.hi);
  const BitString bob_code = encode_signed(f.bound - partial_sum(f, part.bob, alpha_bob), range.lo, range.hi);

  const WalkParams params = WalkParams::defaults(alice_code.size(), epsilon);
  auto gt = gt_walk(alice_code, bob_code, params, coins);
  return {!gt.output, std::move(gt.transcript)};
}

std::size_t threshold_bit_bound(const ThresholdFunction& f, double epsilon) {
  return gt_walk_bit_bound(WalkParams::defaults(bit_width(f), epsilon));
}

ProtocolResult<bool> threshold_partial_sum_protocol(const ThresholdFunction& f, const Partition& part,
                                                    std::span<const std::uint8_t> alpha_alice,
                                                    std::span<const std::uint8_t> alpha_bob) {
  check_projection(part, alpha_alice, alpha_bob, f.n());
  const SignedRange range = comparison_range(f);
  Channel channel;
  const BitString alice_code = encode_signed(partial_sum(f, part.alice, alpha_alice), range.lo, range.hi);
  channel.send(Party::Alice, 0, alice_code.size());
  const BitString bob_code = encode_signed(f.bound - partial_sum(f, part.bob, alpha_bob), range.lo, range.hi);
  const bool satisfied = alice_code.compare(bob_code) <= 0;
  channel.next_round();
  channel.send(Party::Bob, satisfied ? 1 : 0, 1);
  return {satisfied, channel.take()};
}

double default_threshold_epsilon(std::size_t n_tree) {
  return 1.0 / (4.0 * static_cast<double>(std::max<std::size_t>(1, n_tree)));
}

}  // namespace kwcp
