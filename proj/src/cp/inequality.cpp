#include "kwcp/cp/inequality.hpp"

#include <sstream>

namespace kwcp::cp {

LinearInequality LinearInequality::at_least(std::vector<BigInt> coefficients, const BigInt& bound) {
  for (auto& a : coefficients) a = -a;
  return {std::move(coefficients), -bound};
}

bool LinearInequality::satisfied_by(std::span<const std::uint8_t> alpha) const {
  return eval_threshold(as_threshold(), alpha);
}

std::string LinearInequality::to_string() const {
  std::ostringstream os;
  for (const auto& a : coefficients) os << a << ' ';
  os << bound;
  return os.str();
}

bool is_false_line(const LinearInequality& ineq) {
  for (const auto& a : ineq.coefficients) {
    if (!a.is_zero()) return false;
  }
  return ineq.bound < 0;
}

std::size_t axiom_count(const System& system, bool boolean_axioms) {
  return system.axioms.size() + (boolean_axioms ? 2 * system.n : 0);
}

bool is_boolean_axiom(const System& system, std::size_t index) {
  return index > system.axioms.size() && index <= system.axioms.size() + 2 * system.n;
}

std::optional<LinearInequality> axiom(const System& system, std::size_t index, bool boolean_axioms) {
  if (index >= 1 && index <= system.axioms.size()) return system.axioms[index - 1];
  if (!boolean_axioms || !is_boolean_axiom(system, index)) return std::nullopt;
  const std::size_t offset = index - system.axioms.size() - 1;
  const std::size_t var = offset / 2;
  LinearInequality ineq{std::vector<BigInt>(system.n, 0), 0};
  if (offset % 2 == 0) {
    ineq.coefficients[var] = -1;  // -x_i <= 0
  } else {
    ineq.coefficients[var] = 1;  // x_i <= 1
    ineq.bound = 1;
  }
  return ineq;
}

}  // namespace kwcp::cp
