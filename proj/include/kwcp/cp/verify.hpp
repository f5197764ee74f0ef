#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "kwcp/cp/proof.hpp"

namespace kwcp::cp {

struct VerifyOptions {
  bool require_tree = false;
  bool boolean_axioms = true;  // implicit -x_i <= 0 and x_i <= 1
};

// Looks up an earlier line's stated inequality; nullptr when the id is not valid.
using LineResolver = std::function<const LinearInequality*(std::size_t id)>;

// Checks one derivation step against its premises. Returns a description of
// the violation, or nothing when the line is correctly derived.
//   axiom j: stated equals axiom j verbatim
//   add:     componentwise sum of coefficients and bounds
//   mul d:   d > 0 scales; d < 0 flips to >= and is stored as (-d a) . x <= -d c
//   div c:   c >= 2 divides every coefficient; bound becomes floor(bound / c)
std::optional<std::string> check_line(const ProofLine& line, const LineResolver& resolve,
                                      const System& system, const VerifyOptions& options = {});

struct Violation {
  std::size_t line = 0;
  std::string rule;
  std::string message;

  std::string to_string() const;
};

struct VerifyResult {
  std::optional<Violation> violation;
  bool tree_like = false;

  bool ok() const noexcept { return !violation.has_value(); }
};

bool is_tree_like(const Proof& proof);

// Reports the earliest violation: a bad line, a repeated premise when a tree is
// required, or a last line that is not arithmetically false.
VerifyResult verify_proof(const Proof& proof, const System& system, const VerifyOptions& options = {});

}  // namespace kwcp::cp
