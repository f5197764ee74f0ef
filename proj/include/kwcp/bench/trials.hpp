#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kwcp {

struct TrialOutcome {
  bool failed = false;
  std::size_t bits = 0;
};

struct TrialStats {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t total_bits = 0;
  std::size_t max_bits = 0;

  void add(const TrialOutcome& o) noexcept {
    ++trials;
    failures += o.failed ? 1 : 0;
    total_bits += o.bits;
    max_bits = std::max(max_bits, o.bits);
  }

  void merge(const TrialStats& other) noexcept {
    trials += other.trials;
    failures += other.failures;
    total_bits += other.total_bits;
    max_bits = std::max(max_bits, other.max_bits);
  }

  double error_rate() const noexcept {
    return trials == 0 ? 0.0 : static_cast<double>(failures) / static_cast<double>(trials);
  }
  double mean_bits() const noexcept {
    return trials == 0 ? 0.0 : static_cast<double>(total_bits) / static_cast<double>(trials);
  }
};

inline std::size_t default_worker_count() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Runs fn(trial) for trial = 0..count-1 on up to `workers` threads. Each worker
// owns a contiguous block and its own TrialStats; the blocks are merged at the end.
// fn must derive all of its randomness from the trial index. The first exception
// thrown by any trial is rethrown after all workers finish.
template <typename Fn>
TrialStats run_trials(std::size_t count, Fn&& fn, std::size_t workers = default_worker_count()) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, count));
  std::vector<TrialStats> partial(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto block = [&](std::size_t w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    try {
      for (std::size_t t = begin; t < end; ++t) partial[w].add(fn(t));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (workers == 1) {
    block(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(block, w);
  }
  if (failure) std::rethrow_exception(failure);
  TrialStats total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace kwcp
