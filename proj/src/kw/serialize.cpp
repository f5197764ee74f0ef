#include <sstream>
#include <stdexcept>

#include "kwcp/cp/proof.hpp"
#include "kwcp/kw/search_tree.hpp"

namespace kwcp::kw {
namespace {

int parse_id(const std::string& tok, std::size_t count, std::size_t line) {
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size() || tok.empty() || tok[0] == '-' || value >= count) {
    throw cp::ParseError(line, "bad node id '" + tok + "'");
  }
  return static_cast<int>(value);
}

void expect(std::istringstream& is, const char* keyword, std::size_t line) {
  std::string tok;
  if (!(is >> tok) || tok != keyword) throw cp::ParseError(line, std::string("expected '") + keyword + "'");
}

std::string next(std::istringstream& is, std::size_t line) {
  std::string tok;
  if (!(is >> tok)) throw cp::ParseError(line, "unexpected end of line");
  return tok;
}

}  // namespace

std::string write_search_tree(const SearchTree& tree) {
  std::ostringstream os;
  os << "search-tree n " << tree.n << " nodes " << tree.nodes.size() << " root " << tree.root << '\n';
  for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
    const SearchNode& v = tree.nodes[id];
    os << "node " << id;
    if (v.leaf) {
      os << " leaf " << v.axiom;
    } else {
      os << " query " << v.query.to_string() << " zero " << v.zero << " one " << v.one;
    }
    os << '\n';
  }
  return os.str();
}

SearchTree read_search_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  SearchTree tree;
  std::size_t count = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream is(raw);
    std::string head;
    if (!(is >> head)) continue;
    if (!have_header) {
      if (head != "search-tree") throw cp::ParseError(line_no, "expected 'search-tree' header");
      expect(is, "n", line_no);
      tree.n = std::stoul(next(is, line_no));
      expect(is, "nodes", line_no);
      count = std::stoul(next(is, line_no));
      expect(is, "root", line_no);
      tree.root = parse_id(next(is, line_no), count, line_no);
      tree.nodes.resize(count);
      have_header = true;
      continue;
    }
    if (head != "node") throw cp::ParseError(line_no, "expected 'node'");
    const int id = parse_id(next(is, line_no), count, line_no);
    SearchNode& v = tree.nodes[static_cast<std::size_t>(id)];
    const std::string kind = next(is, line_no);
    if (kind == "leaf") {
      v.leaf = true;
      v.axiom = std::stoul(next(is, line_no));
    } else if (kind == "query") {
      for (std::size_t i = 0; i < tree.n; ++i) v.query.coefficients.emplace_back(next(is, line_no));
      v.query.bound = BigInt(next(is, line_no));
      expect(is, "zero", line_no);
      v.zero = parse_id(next(is, line_no), count, line_no);
      expect(is, "one", line_no);
      v.one = parse_id(next(is, line_no), count, line_no);
    } else {
      throw cp::ParseError(line_no, "expected 'leaf' or 'query', got '" + kind + "'");
    }
    std::string extra;
    if (is >> extra) throw cp::ParseError(line_no, "trailing token '" + extra + "'");
  }
  if (!have_header) throw cp::ParseError(line_no == 0 ? 1 : line_no, "empty search tree file");
  return tree;
}

}  // namespace kwcp::kw
