#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kwcp/cp/inequality.hpp"

namespace kwcp::cp {

enum class RuleKind { Axiom, Add, Mul, Div };

std::string_view rule_name(RuleKind kind) noexcept;

struct Rule {
  RuleKind kind = RuleKind::Axiom;
  std::size_t axiom = 0;   // Axiom
  std::size_t first = 0;   // premise line id (Add, Mul, Div)
  std::size_t second = 0;  // second premise (Add)
  BigInt scalar;           // d for Mul, c for Div

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct ProofLine {
  std::size_t id = 0;  // 1-based, equals the position in the proof
  Rule rule;
  LinearInequality stated;

  std::vector<std::size_t> premises() const;

  friend bool operator==(const ProofLine&, const ProofLine&) = default;
};

struct Proof {
  std::vector<ProofLine> lines;

  std::size_t size() const noexcept { return lines.size(); }
  const ProofLine& line(std::size_t id) const { return lines.at(id - 1); }
};

// Malformed input, with the 1-based line it was found on.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message, const std::string& file = {})
      : std::runtime_error((file.empty() ? "line " : file + ":") + std::to_string(line) + ": " + message),
        line_(line),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

System parse_system(std::string_view text);
Proof parse_proof(std::string_view text, std::size_t n);

// Reads a file; throws std::runtime_error naming the path when it cannot be read,
// and ParseError (prefixed with the path) on malformed content.
System load_system(const std::filesystem::path& path);
Proof load_proof(const std::filesystem::path& path, std::size_t n);

std::string format_proof_line(const ProofLine& line);
std::string format_proof(const Proof& proof);
std::string format_system(const System& system);

}  // namespace kwcp::cp
