#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace kwcp {

enum class Party : std::uint8_t { Alice, Bob };

std::string_view party_name(Party p) noexcept;

struct TranscriptEvent {
  std::size_t round = 0;
  Party sender = Party::Alice;
  std::size_t bits = 0;

  friend bool operator==(const TranscriptEvent&, const TranscriptEvent&) = default;
};

// Every message charged during a run. Counts are semantic bit costs, not
// encoding overhead.
class Transcript {
 public:
  // Rounds must be non-decreasing.
  void record(std::size_t round, Party sender, std::size_t bits);

  // Appends `other` with its rounds shifted to start after this transcript's last round.
  void append(const Transcript& other);

  const std::vector<TranscriptEvent>& events() const noexcept { return events_; }
  std::size_t total_bits() const noexcept { return total_; }
  std::size_t bits_from(Party p) const noexcept;
  std::size_t last_round() const noexcept { return events_.empty() ? 0 : events_.back().round; }

  void reserve(std::size_t n) { events_.reserve(n); }

  friend bool operator==(const Transcript&, const Transcript&) = default;

 private:
  std::vector<TranscriptEvent> events_;
  std::size_t total_ = 0;
};

inline std::size_t bits_used(const Transcript& t) noexcept { return t.total_bits(); }

// In-process channel between Alice and Bob. Messages pass through `send`,
// which charges them to the transcript and hands the payload to the receiver.
class Channel {
 public:
  Channel() = default;

  std::uint64_t send(Party from, std::uint64_t payload, std::size_t bits) {
    transcript_.record(round_, from, bits);
    return payload;
  }

  void next_round() noexcept { ++round_; }
  std::size_t round() const noexcept { return round_; }

  void absorb(const Transcript& sub) {
    transcript_.append(sub);
    round_ = transcript_.last_round() + 1;
  }

  std::size_t bits_used() const noexcept { return transcript_.total_bits(); }
  const Transcript& transcript() const noexcept { return transcript_; }
  Transcript take() { return std::move(transcript_); }

 private:
  std::size_t round_ = 1;
  Transcript transcript_;
};

template <typename T>
struct ProtocolResult {
  T output{};
  Transcript transcript;
};

}  // namespace kwcp
