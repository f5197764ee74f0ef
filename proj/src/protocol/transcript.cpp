#include "kwcp/protocol/transcript.hpp"

#include <stdexcept>

namespace kwcp {

std::string_view party_name(Party p) noexcept { return p == Party::Alice ? "Alice" : "Bob"; }

void Transcript::record(std::size_t round, Party sender, std::size_t bits) {
  if (!events_.empty() && round < events_.back().round) {
    throw std::logic_error("transcript rounds must be non-decreasing");
  }
  events_.push_back({round, sender, bits});
  total_ += bits;
}

void Transcript::append(const Transcript& other) {
  const std::size_t base = last_round();
  std::size_t first = other.events_.empty() ? 0 : other.events_.front().round;
  for (const auto& e : other.events_) {
    record(base + 1 + (e.round - first), e.sender, e.bits);
  }
}

std::size_t Transcript::bits_from(Party p) const noexcept {
  std::size_t sum = 0;
  for (const auto& e : events_) {
    if (e.sender == p) sum += e.bits;
  }
  return sum;
}

}  // namespace kwcp
