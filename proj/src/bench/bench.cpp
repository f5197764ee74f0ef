#include "kwcp/bench/bench.hpp"

#include <atomic>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kwcp/bench/trials.hpp"
#include "kwcp/eqgt/eq.hpp"
#include "kwcp/eqgt/gt_baseline.hpp"
#include "kwcp/eqgt/gt_walk.hpp"
#include "kwcp/threshold/threshold.hpp"

namespace kwcp {
namespace {

bool is_all_ones(const BitString& s) {
  for (std::size_t i = 1; i <= s.size(); ++i) {
    if (!s.bit(i)) return false;
  }
  return true;
}

struct ThresholdInstance {
  ThresholdFunction f;
  Partition part;
  Assignment alpha;
};

ThresholdInstance make_threshold_instance(std::size_t n, InputMode mode, CoinStream& rng) {
  ThresholdInstance inst;
  inst.f.coefficients.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt a = BigInt(rng.draw_word(62));
    if (rng.draw_word(1)) a = -a;
    inst.f.coefficients.push_back(a);
  }
  for (std::size_t i = 0; i < n; ++i) inst.alpha.push_back(static_cast<std::uint8_t>(rng.draw_word(1)));
  for (std::size_t i = 1; i <= n; ++i) (2 * i <= n + 1 ? inst.part.alice : inst.part.bob).push_back(i);

  BigInt at_alpha = 0;
  BigInt at_other = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (inst.alpha[i]) at_alpha += inst.f.coefficients[i];
    if (rng.draw_word(1)) at_other += inst.f.coefficients[i];
  }
  // Adversarial: the bound sits exactly at, or one below, the assignment's sum.
  inst.f.bound = mode == InputMode::Adversarial ? at_alpha - BigInt(rng.draw_word(1)) : at_other;
  return inst;
}

}  // namespace

BenchProtocol parse_protocol(std::string_view name) {
  if (name == "eq") return BenchProtocol::Eq;
  if (name == "gt-baseline") return BenchProtocol::GtBaseline;
  if (name == "gt-walk") return BenchProtocol::GtWalk;
  if (name == "threshold") return BenchProtocol::Threshold;
  throw InputError("unknown protocol '" + std::string(name) + "' (eq, gt-baseline, gt-walk, threshold)");
}

std::string_view protocol_name(BenchProtocol p) noexcept {
  switch (p) {
    case BenchProtocol::Eq: return "eq";
    case BenchProtocol::GtBaseline: return "gt-baseline";
    case BenchProtocol::GtWalk: return "gt-walk";
    case BenchProtocol::Threshold: return "threshold";
  }
  return "?";
}

std::string_view input_mode_name(InputMode m) noexcept {
  switch (m) {
    case InputMode::Uniform: return "uniform";
    case InputMode::Adversarial: return "adversarial";
    case InputMode::Equal: return "equal";
  }
  return "?";
}

void BenchConfig::validate() const {
  if (trials < 1) throw InputError("trials must be at least 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  if (n < 1) throw InputError("n must be at least 1");
  if (protocol == BenchProtocol::Threshold && inputs == InputMode::Equal) {
    throw InputError("equal inputs are not defined for the threshold bench");
  }
}

BitString increment(const BitString& y) {
  BitString out = y;
  for (std::size_t i = y.size(); i >= 1; --i) {
    if (!out.bit(i)) {
      out.set(i, true);
      break;
    }
    out.set(i, false);
  }
  return out;
}

InputPair make_inputs(std::size_t n, InputMode mode, CoinStream& rng) {
  BitString y = rng.draw_bits(n);
  switch (mode) {
    case InputMode::Uniform:
      return {rng.draw_bits(n), std::move(y)};
    case InputMode::Equal:
      return {y, y};
    case InputMode::Adversarial: {
      while (is_all_ones(y)) y = rng.draw_bits(n);
      BitString up = increment(y);
      if (rng.draw_word(1)) return {std::move(up), std::move(y)};
      return {std::move(y), std::move(up)};
    }
  }
  throw std::logic_error("unknown input mode");
}

BenchRow run_bench(const BenchConfig& config) {
  config.validate();
  const std::size_t n = config.n;
  const double eps = config.epsilon;

  std::size_t bound = 0;
  switch (config.protocol) {
    case BenchProtocol::Eq: bound = EqParams::for_error(eps).k; break;
    case BenchProtocol::GtBaseline: bound = gt_baseline_bit_bound(n, eps); break;
    case BenchProtocol::GtWalk: bound = gt_walk_bit_bound(WalkParams::defaults(n, eps)); break;
    case BenchProtocol::Threshold: break;  // per instance
  }
  const WalkParams walk = WalkParams::defaults(n, eps);

  std::atomic<std::size_t> threshold_bound{0};
  auto trial = [&](std::size_t t) -> TrialOutcome {
    CoinStream rng(derive_seed(config.seed, 2 * t));
    CoinStream coins(derive_seed(config.seed, 2 * t + 1));
    TrialOutcome out;
    std::size_t limit = bound;
    switch (config.protocol) {
      case BenchProtocol::Eq: {
        auto in = make_inputs(n, config.inputs, rng);
        if (config.inputs == InputMode::Adversarial) {
          in.y = in.x;
          in.y.set(n, !in.x.bit(n));
        }
        const auto r = eq_protocol(in.x, in.y, EqParams::for_error(eps), coins);
        out.failed = r.output != (in.x == in.y);
        out.bits = r.transcript.total_bits();
        break;
      }
      case BenchProtocol::GtBaseline: {
        const auto in = make_inputs(n, config.inputs, rng);
        const auto r = gt_baseline(in.x, in.y, eps, coins);
        out.failed = r.output != (in.x.compare(in.y) > 0);
        out.bits = r.transcript.total_bits();
        break;
      }
      case BenchProtocol::GtWalk: {
        const auto in = make_inputs(n, config.inputs, rng);
        const auto r = gt_walk(in.x, in.y, walk, coins);
        out.failed = r.output != (in.x.compare(in.y) > 0);
        out.bits = r.transcript.total_bits();
        break;
      }
      case BenchProtocol::Threshold: {
        const auto inst = make_threshold_instance(n, config.inputs, rng);
        const auto a = project(inst.alpha, inst.part.alice);
        const auto b = project(inst.alpha, inst.part.bob);
        const auto r = threshold_protocol(inst.f, inst.part, a, b, eps, coins);
        out.failed = r.output != eval_threshold(inst.f, inst.alpha);
        out.bits = r.transcript.total_bits();
        limit = threshold_bit_bound(inst.f, eps);
        std::size_t seen = threshold_bound.load();
        while (seen < limit && !threshold_bound.compare_exchange_weak(seen, limit)) {
        }
        break;
      }
    }
    if (out.bits > limit) {
      throw std::logic_error("trial " + std::to_string(t) + " used " + std::to_string(out.bits) +
                             " bits, above the hard bound " + std::to_string(limit));
    }
    return out;
  };

  const TrialStats stats = run_trials(config.trials, trial);
  BenchRow row;
  row.protocol = std::string(protocol_name(config.protocol));
  row.n = n;
  row.epsilon = eps;
  row.trials = stats.trials;
  row.empirical_error = stats.error_rate();
  row.mean_bits = stats.mean_bits();
  row.max_bits = stats.max_bits;
  row.bound_bits = config.protocol == BenchProtocol::Threshold ? threshold_bound.load() : bound;
  return row;
}

std::string to_csv(const BenchRow& row) {
  std::ostringstream os;
  os << row.protocol << ',' << row.n << ',' << std::setprecision(10) << row.epsilon << ',' << row.trials << ','
     << row.empirical_error << ',' << row.mean_bits << ',' << row.max_bits << ',' << row.bound_bits;
  return os.str();
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << kBenchCsvHeader << '\n';
  for (const auto& r : rows) os << to_csv(r) << '\n';
}

void write_human(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << std::left << std::setw(12) << "protocol" << std::right << std::setw(6) << "n" << std::setw(12) << "epsilon"
     << std::setw(10) << "trials" << std::setw(12) << "error" << std::setw(11) << "mean_bits" << std::setw(10)
     << "max_bits" << std::setw(11) << "bound_bits" << '\n';
  for (const auto& r : rows) {
    os << std::left << std::setw(12) << r.protocol << std::right << std::setw(6) << r.n << std::setw(12)
       << std::setprecision(6) << r.epsilon << std::setw(10) << r.trials << std::setw(12) << r.empirical_error
       << std::setw(11) << std::fixed << std::setprecision(1) << r.mean_bits << std::defaultfloat << std::setw(10)
       << r.max_bits << std::setw(11) << r.bound_bits << '\n';
  }
}

}  // namespace kwcp
