#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kwcp/protocol/bitstring.hpp"
#include "kwcp/protocol/coins.hpp"

namespace kwcp {

enum class BenchProtocol { Eq, GtBaseline, GtWalk, Threshold };

enum class InputMode {
  Uniform,      // independent uniform inputs
  Adversarial,  // GT: (y, y+1) in random order; EQ: differ in the last bit; threshold: tight bound
  Equal,        // x == y
};

BenchProtocol parse_protocol(std::string_view name);
std::string_view protocol_name(BenchProtocol p) noexcept;
std::string_view input_mode_name(InputMode m) noexcept;

struct BenchConfig {
  BenchProtocol protocol = BenchProtocol::GtWalk;
  std::size_t n = 16;
  double epsilon = 0.125;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  InputMode inputs = InputMode::Uniform;

  void validate() const;
};

struct BenchRow {
  std::string protocol;
  std::size_t n = 0;
  double epsilon = 0;
  std::size_t trials = 0;
  double empirical_error = 0;
  double mean_bits = 0;
  std::size_t max_bits = 0;
  std::size_t bound_bits = 0;
};

// Runs config.trials seeded trials. Trial t draws its inputs from
// derive_seed(seed, 2t) and its protocol coins from derive_seed(seed, 2t + 1),
// so rows do not depend on the thread count. Throws std::logic_error if any
// trial exceeds its hard communication bound.
BenchRow run_bench(const BenchConfig& config);

// Input pairs used by the bench, exposed for tests.
struct InputPair {
  BitString x;
  BitString y;
};
InputPair make_inputs(std::size_t n, InputMode mode, CoinStream& rng);

// y + 1 with wrap-around.
BitString increment(const BitString& y);

inline constexpr std::string_view kBenchCsvHeader =
    "protocol,n,epsilon,trials,empirical_error,mean_bits,max_bits,bound_bits";

std::string to_csv(const BenchRow& row);
void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);
void write_human(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace kwcp
