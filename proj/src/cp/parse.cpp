#include <cctype>
#include <fstream>
#include <sstream>

#include "kwcp/cp/proof.hpp"

namespace kwcp::cp {
namespace {

struct SourceLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-empty lines with '#' comments removed; ';' becomes its own token.
std::vector<SourceLine> tokenize(std::string_view text) {
  std::vector<SourceLine> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string spaced;
    for (char c : line) {
      if (c == ';') {
        spaced += " ; ";
      } else {
        spaced += c;
      }
    }
    std::istringstream is(spaced);
    SourceLine sl{number, {}};
    for (std::string tok; is >> tok;) sl.tokens.push_back(tok);
    if (!sl.tokens.empty()) out.push_back(std::move(sl));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

bool is_integer_token(std::string_view tok) {
  std::size_t i = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  }
  return true;
}

BigInt parse_integer(const std::string& tok, std::size_t line) {
  if (!is_integer_token(tok)) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return BigInt(tok[0] == '+' ? tok.substr(1) : tok);
}

std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  if (!is_integer_token(tok) || tok[0] == '-' || tok[0] == '+' || tok.size() > 18) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
  return std::stoull(tok);
}

std::size_t parse_line_ref(const std::string& tok, std::size_t line) {
  if (tok.size() < 2 || tok[0] != 'L') throw ParseError(line, "expected a line reference L<i>, got '" + tok + "'");
  return parse_count(tok.substr(1), line, "a line reference L<i>");
}

LinearInequality parse_inequality(const std::vector<std::string>& tokens, std::size_t from,
                                  std::size_t n, std::size_t line) {
  if (tokens.size() - from != n + 1) {
    throw ParseError(line, "expected " + std::to_string(n + 1) + " integers (n coefficients and a bound), got " +
                               std::to_string(tokens.size() - from));
  }
  LinearInequality ineq;
  ineq.coefficients.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ineq.coefficients.push_back(parse_integer(tokens[from + i], line));
  ineq.bound = parse_integer(tokens[from + n], line);
  return ineq;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string_view rule_name(RuleKind kind) noexcept {
  switch (kind) {
    case RuleKind::Axiom: return "axiom";
    case RuleKind::Add: return "add";
    case RuleKind::Mul: return "mul";
    case RuleKind::Div: return "div";
  }
  return "?";
}

std::vector<std::size_t> ProofLine::premises() const {
  switch (rule.kind) {
    case RuleKind::Axiom: return {};
    case RuleKind::Add: return {rule.first, rule.second};
    case RuleKind::Mul:
    case RuleKind::Div: return {rule.first};
  }
  return {};
}

System parse_system(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing variable count");
  const auto& header = lines.front();
  if (header.tokens.size() != 1) throw ParseError(header.number, "first line must hold only the variable count n");
  System system;
  system.n = parse_count(header.tokens[0], header.number, "the variable count n");
  if (system.n == 0) throw ParseError(header.number, "variable count must be positive");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    system.axioms.push_back(parse_inequality(lines[i].tokens, 0, system.n, lines[i].number));
  }
  return system;
}

Proof parse_proof(std::string_view text, std::size_t n) {
  Proof proof;
  for (const auto& sl : tokenize(text)) {
    const auto& t = sl.tokens;
    const std::size_t expected = proof.lines.size() + 1;
    if (t[0].size() < 3 || t[0][0] != 'L' || t[0].back() != ':') {
      throw ParseError(sl.number, "expected a line label L<k>:, got '" + t[0] + "'");
    }
    ProofLine line;
    line.id = parse_count(t[0].substr(1, t[0].size() - 2), sl.number, "a line label L<k>:");
    if (line.id != expected) {
      throw ParseError(sl.number, "line label L" + std::to_string(line.id) + " out of sequence, expected L" +
                                      std::to_string(expected));
    }
    if (t.size() < 2) throw ParseError(sl.number, "missing rule");

    const std::string& tag = t[1];
    std::size_t args = 0;
    if (tag == "axiom") {
      line.rule.kind = RuleKind::Axiom;
      args = 1;
    } else if (tag == "add") {
      line.rule.kind = RuleKind::Add;
      args = 2;
    } else if (tag == "mul") {
      line.rule.kind = RuleKind::Mul;
      args = 2;
    } else if (tag == "div") {
      line.rule.kind = RuleKind::Div;
      args = 2;
    } else {
      throw ParseError(sl.number, "unknown rule '" + tag + "'");
    }
    if (t.size() < 3 + args || t[2 + args] != ";") {
      throw ParseError(sl.number, "rule '" + tag + "' takes " + std::to_string(args) +
                                      " argument(s) followed by ';' and the stated inequality");
    }
    switch (line.rule.kind) {
      case RuleKind::Axiom:
        line.rule.axiom = parse_count(t[2], sl.number, "an axiom index");
        break;
      case RuleKind::Add:
        line.rule.first = parse_line_ref(t[2], sl.number);
        line.rule.second = parse_line_ref(t[3], sl.number);
        break;
      case RuleKind::Mul:
      case RuleKind::Div:
        line.rule.scalar = parse_integer(t[2], sl.number);
        line.rule.first = parse_line_ref(t[3], sl.number);
        break;
    }
    line.stated = parse_inequality(t, 3 + args, n, sl.number);
    proof.lines.push_back(std::move(line));
  }
  return proof;
}

System load_system(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_system(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path.string());
  }
}

Proof load_proof(const std::filesystem::path& path, std::size_t n) {
  const std::string text = read_file(path);
  try {
    return parse_proof(text, n);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path.string());
  }
}

std::string format_proof_line(const ProofLine& line) {
  std::ostringstream os;
  os << 'L' << line.id << ": " << rule_name(line.rule.kind);
  switch (line.rule.kind) {
    case RuleKind::Axiom: os << ' ' << line.rule.axiom; break;
    case RuleKind::Add: os << " L" << line.rule.first << " L" << line.rule.second; break;
    case RuleKind::Mul:
    case RuleKind::Div: os << ' ' << line.rule.scalar << " L" << line.rule.first; break;
  }
  os << " ; " << line.stated.to_string();
  return os.str();
}

std::string format_proof(const Proof& proof) {
  std::string out;
  for (const auto& line : proof.lines) out += format_proof_line(line) + '\n';
  return out;
}

std::string format_system(const System& system) {
  std::string out = std::to_string(system.n) + '\n';
  for (const auto& a : system.axioms) out += a.to_string() + '\n';
  return out;
}

}  // namespace kwcp::cp
