#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kwcp/threshold/threshold.hpp"

namespace kwcp::cp {

// a . x <= c. Every inequality is kept in this form; d . x >= e is stored as
// (-d) . x <= -e.
struct LinearInequality {
  std::vector<BigInt> coefficients;
  BigInt bound;

  std::size_t n() const noexcept { return coefficients.size(); }

  static LinearInequality at_least(std::vector<BigInt> coefficients, const BigInt& bound);

  bool satisfied_by(std::span<const std::uint8_t> alpha) const;

  // "a_1 ... a_n c"
  std::string to_string() const;

  ThresholdFunction as_threshold() const { return {coefficients, bound}; }

  friend bool operator==(const LinearInequality&, const LinearInequality&) = default;
};

// 0 . x <= c with c < 0.
bool is_false_line(const LinearInequality& ineq);

struct System {
  std::size_t n = 0;
  std::vector<LinearInequality> axioms;
};

// Explicit axioms are 1..|axioms|. With boolean axioms enabled, index
// |axioms| + 2i - 1 is -x_i <= 0 and |axioms| + 2i is x_i <= 1.
std::size_t axiom_count(const System& system, bool boolean_axioms);
std::optional<LinearInequality> axiom(const System& system, std::size_t index, bool boolean_axioms);
bool is_boolean_axiom(const System& system, std::size_t index);

}  // namespace kwcp::cp
