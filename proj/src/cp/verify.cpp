#include "kwcp/cp/verify.hpp"

#include <sstream>
#include <vector>

namespace kwcp::cp {
namespace {

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if (num % den != 0 && ((num < 0) != (den < 0))) q -= 1;
  return q;
}

std::string mismatch(const LinearInequality& expected, const LinearInequality& stated) {
  return "arithmetic mismatch: derived '" + expected.to_string() + "', stated '" + stated.to_string() + "'";
}

}  // namespace

std::string Violation::to_string() const {
  std::ostringstream os;
  if (line > 0) os << 'L' << line << ": ";
  os << rule << ": " << message;
  return os.str();
}

std::optional<std::string> check_line(const ProofLine& line, const LineResolver& resolve,
                                      const System& system, const VerifyOptions& options) {
  if (line.stated.n() != system.n) {
    return "stated inequality has " + std::to_string(line.stated.n()) + " coefficients, system has " +
           std::to_string(system.n) + " variables";
  }
  std::vector<const LinearInequality*> premises;
  for (std::size_t id : line.premises()) {
    const LinearInequality* p = id >= 1 && id < line.id ? resolve(id) : nullptr;
    if (p == nullptr) return "bad premise reference L" + std::to_string(id) + " (must name an earlier line)";
    premises.push_back(p);
  }

  LinearInequality derived;
  switch (line.rule.kind) {
    case RuleKind::Axiom: {
      const auto ax = axiom(system, line.rule.axiom, options.boolean_axioms);
      if (!ax) {
        return "no axiom " + std::to_string(line.rule.axiom) + " (system has " +
               std::to_string(axiom_count(system, options.boolean_axioms)) + ")";
      }
      derived = *ax;
      break;
    }
    case RuleKind::Add: {
      derived = *premises[0];
      for (std::size_t i = 0; i < system.n; ++i) derived.coefficients[i] += premises[1]->coefficients[i];
      derived.bound += premises[1]->bound;
      break;
    }
    case RuleKind::Mul: {
      const BigInt& d = line.rule.scalar;
      if (d.is_zero()) return "scalar must be nonzero";
      // d < 0: d a . x >= d c, i.e. (-d a) . x <= -d c.
      const BigInt factor = d < 0 ? BigInt(-d) : d;
      derived = *premises[0];
      for (auto& a : derived.coefficients) a *= factor;
      derived.bound *= factor;
      break;
    }
    case RuleKind::Div: {
      const BigInt& c = line.rule.scalar;
      if (c < 2) return "divisor must be at least 2";
      derived = *premises[0];
      for (std::size_t i = 0; i < system.n; ++i) {
        if (derived.coefficients[i] % c != 0) {
          return "divisibility violation: coefficient " + std::to_string(i + 1) + " (" +
                 derived.coefficients[i].str() + ") is not divisible by " + c.str();
        }
        derived.coefficients[i] /= c;
      }
      derived.bound = floor_div(derived.bound, c);
      break;
    }
  }
  if (derived != line.stated) return mismatch(derived, line.stated);
  return std::nullopt;
}

bool is_tree_like(const Proof& proof) {
  std::vector<int> uses(proof.size() + 1, 0);
  for (const auto& line : proof.lines) {
    for (std::size_t id : line.premises()) {
      if (id >= 1 && id <= proof.size() && ++uses[id] > 1) return false;
    }
  }
  return true;
}

VerifyResult verify_proof(const Proof& proof, const System& system, const VerifyOptions& options) {
  VerifyResult result;
  result.tree_like = is_tree_like(proof);
  if (proof.lines.empty()) {
    result.violation = Violation{0, "proof", "empty proof"};
    return result;
  }
  const LineResolver resolve = [&proof](std::size_t id) -> const LinearInequality* {
    return id >= 1 && id <= proof.size() ? &proof.lines[id - 1].stated : nullptr;
  };
  std::vector<std::size_t> used_by(proof.size() + 1, 0);
  for (std::size_t pos = 0; pos < proof.lines.size(); ++pos) {
    const ProofLine& line = proof.lines[pos];
    const std::string rule(rule_name(line.rule.kind));
    if (line.id != pos + 1) {
      result.violation = Violation{pos + 1, rule, "line id L" + std::to_string(line.id) + " out of sequence"};
      return result;
    }
    if (auto problem = check_line(line, resolve, system, options)) {
      result.violation = Violation{line.id, rule, *problem};
      return result;
    }
    for (std::size_t id : line.premises()) {
      if (used_by[id] != 0 && options.require_tree) {
        result.violation = Violation{line.id, rule,
                                     "not tree-like: L" + std::to_string(id) + " already used by L" +
                                         std::to_string(used_by[id])};
        return result;
      }
      used_by[id] = line.id;
    }
  }
  const ProofLine& last = proof.lines.back();
  if (!is_false_line(last.stated)) {
    result.violation = Violation{last.id, std::string(rule_name(last.rule.kind)),
                                 "last line '" + last.stated.to_string() + "' is not arithmetically false"};
  }
  return result;
}

}  // namespace kwcp::cp
