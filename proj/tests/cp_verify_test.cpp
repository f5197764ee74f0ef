#include <gtest/gtest.h>

#include <sstream>

#include "kwcp/cp/verify.hpp"
#include "kwcp/protocol/coins.hpp"
#include "mutation_corpus.hpp"
#include "test_support.hpp"

namespace kwcp::cp {
namespace {

using testing::assignment_from_mask;
using testing::kBundledStems;
using testing::load_bundled;

LinearInequality ineq(std::initializer_list<int> coeffs, int bound) {
  return {std::vector<BigInt>(coeffs.begin(), coeffs.end()), bound};
}

ProofLine derived_line(std::size_t id, RuleKind kind, std::size_t first, std::size_t second, BigInt scalar,
                       LinearInequality stated) {
  ProofLine line;
  line.id = id;
  line.rule.kind = kind;
  line.rule.first = first;
  line.rule.second = second;
  line.rule.scalar = std::move(scalar);
  line.stated = std::move(stated);
  return line;
}

LineResolver resolver(const std::vector<LinearInequality>& lines) {
  return [&lines](std::size_t id) -> const LinearInequality* {
    return id >= 1 && id <= lines.size() ? &lines[id - 1] : nullptr;
  };
}

TEST(CheckLine, AddExample) {
  const System sys{1, {}};
  const std::vector<LinearInequality> prem{ineq({-1}, -1), ineq({1}, 0)};
  EXPECT_FALSE(check_line(derived_line(3, RuleKind::Add, 1, 2, 0, ineq({0}, -1)), resolver(prem), sys));
}

TEST(CheckLine, DivExamples) {
  const System sys{2, {}};
  const std::vector<LinearInequality> ok{ineq({2, 2}, 3)};
  EXPECT_FALSE(check_line(derived_line(2, RuleKind::Div, 1, 0, 2, ineq({1, 1}, 1)), resolver(ok), sys));

  const std::vector<LinearInequality> bad{ineq({2, 1}, 3)};
  const auto v = check_line(derived_line(2, RuleKind::Div, 1, 0, 2, ineq({1, 0}, 1)), resolver(bad), sys);
  ASSERT_TRUE(v);
  EXPECT_NE(v->find("divisibility violation"), std::string::npos);
  EXPECT_NE(v->find("coefficient 2"), std::string::npos);
}

TEST(CheckLine, DivFloorsNegativeBounds) {
  const System sys{1, {}};
  const std::vector<LinearInequality> prem{ineq({-2}, -3)};
  EXPECT_FALSE(check_line(derived_line(2, RuleKind::Div, 1, 0, 2, ineq({-1}, -2)), resolver(prem), sys));
  EXPECT_TRUE(check_line(derived_line(2, RuleKind::Div, 1, 0, 2, ineq({-1}, -1)), resolver(prem), sys));
}

TEST(CheckLine, MulSigns) {
  const System sys{2, {}};
  const std::vector<LinearInequality> prem{ineq({1, -2}, 3)};
  EXPECT_FALSE(check_line(derived_line(2, RuleKind::Mul, 1, 0, 3, ineq({3, -6}, 9)), resolver(prem), sys));
  // -3 (x1 - 2 x2) >= -9, stored as 3 x1 - 6 x2 <= 9.
  EXPECT_FALSE(check_line(derived_line(2, RuleKind::Mul, 1, 0, -3, ineq({3, -6}, 9)), resolver(prem), sys));
  EXPECT_TRUE(check_line(derived_line(2, RuleKind::Mul, 1, 0, -3, ineq({-3, 6}, -9)), resolver(prem), sys));
  EXPECT_EQ(*check_line(derived_line(2, RuleKind::Mul, 1, 0, 0, ineq({0, 0}, 0)), resolver(prem), sys),
            "scalar must be nonzero");
  EXPECT_EQ(*check_line(derived_line(2, RuleKind::Div, 1, 0, 1, ineq({1, -2}, 3)), resolver(prem), sys),
            "divisor must be at least 2");
}

TEST(CheckLine, PremisesMustBeEarlier) {
  const System sys{1, {}};
  const std::vector<LinearInequality> prem{ineq({1}, 0), ineq({1}, 0), ineq({1}, 0)};
  const auto v = check_line(derived_line(2, RuleKind::Add, 1, 3, 0, ineq({2}, 0)), resolver(prem), sys);
  ASSERT_TRUE(v);
  EXPECT_NE(v->find("bad premise reference L3"), std::string::npos);
}

TEST(Axioms, BooleanNumbering) {
  const System sys{2, {ineq({1, 1}, 1)}};
  EXPECT_EQ(axiom_count(sys, true), 5u);
  EXPECT_EQ(axiom_count(sys, false), 1u);
  EXPECT_EQ(*axiom(sys, 2, true), ineq({-1, 0}, 0));
  EXPECT_EQ(*axiom(sys, 3, true), ineq({1, 0}, 1));
  EXPECT_EQ(*axiom(sys, 5, true), ineq({0, 1}, 1));
  EXPECT_FALSE(axiom(sys, 6, true));
  EXPECT_FALSE(axiom(sys, 2, false));
  EXPECT_TRUE(is_boolean_axiom(sys, 4));
  EXPECT_FALSE(is_boolean_axiom(sys, 1));
}

TEST(IsFalseLine, Examples) {
  EXPECT_TRUE(is_false_line(ineq({0}, -1)));
  EXPECT_FALSE(is_false_line(ineq({0}, 0)));
  EXPECT_FALSE(is_false_line(ineq({1}, -5)));
  EXPECT_TRUE(is_false_line(ineq({0, 0, 0}, -7)));
}

TEST(VerifyProof, BundledProofsAreTreeLike) {
  for (const char* stem : kBundledStems) {
    const auto b = load_bundled(stem);
    const VerifyResult r = verify_proof(b.proof, b.system, {.require_tree = true});
    EXPECT_TRUE(r.ok()) << stem << ": " << r.violation->to_string();
    EXPECT_TRUE(r.tree_like) << stem;
  }
}

TEST(VerifyProof, MutatedBoundIsAnArithmeticMismatch) {
  auto b = load_bundled("unit_contradiction");
  b.proof.lines[2].stated.bound = 0;
  const VerifyResult r = verify_proof(b.proof, b.system);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->line, 3u);
  EXPECT_EQ(r.violation->rule, "add");
  EXPECT_NE(r.violation->message.find("arithmetic mismatch"), std::string::npos);
  EXPECT_EQ(r.violation->to_string().rfind("L3: add: ", 0), 0u);
}

TEST(VerifyProof, DagRejectedOnlyWhenTreeRequired) {
  const System sys = load_system(testing::data_path("unit_contradiction.sys"));
  const Proof dag = load_proof(testing::data_path("unit_contradiction_dag.proof"), sys.n);
  EXPECT_FALSE(is_tree_like(dag));
  const VerifyResult loose = verify_proof(dag, sys);
  EXPECT_TRUE(loose.ok());
  EXPECT_FALSE(loose.tree_like);
  const VerifyResult strict = verify_proof(dag, sys, {.require_tree = true});
  ASSERT_FALSE(strict.ok());
  EXPECT_EQ(strict.violation->line, 4u);
  EXPECT_NE(strict.violation->message.find("not tree-like"), std::string::npos);
}

TEST(VerifyProof, LastLineMustBeFalse) {
  const System sys{1, {ineq({-1}, -1), ineq({1}, 0)}};
  const Proof p = parse_proof("L1: axiom 1 ; -1 -1\nL2: axiom 2 ; 1 0\n", 1);
  const VerifyResult r = verify_proof(p, sys);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.violation->message.find("not arithmetically false"), std::string::npos);
  EXPECT_FALSE(verify_proof(Proof{}, sys).ok());
}

TEST(VerifyProof, ImplicitAxiomsCanBeDisabled) {
  const auto b = load_bundled("needs_upper_bound");
  EXPECT_TRUE(verify_proof(b.proof, b.system).ok());
  const VerifyResult r = verify_proof(b.proof, b.system, {.boolean_axioms = false});
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->line, 2u);
  EXPECT_NE(r.violation->message.find("no axiom 3"), std::string::npos);
}

TEST(VerifyProof, MutationCorpusRejected) {
  std::size_t total = 0;
  for (const char* stem : kBundledStems) {
    const auto b = load_bundled(stem);
    const std::string text = format_proof(b.proof);
    ASSERT_TRUE(testing::accepted(text, b.system));
    for (const auto& m : testing::mutations(text)) {
      ++total;
      EXPECT_FALSE(testing::accepted(m, b.system)) << stem << " accepted mutant:\n" << m;
    }
  }
  EXPECT_GT(total, 300u);
}

// For every line, every 0-1 assignment satisfying its premises satisfies the line.
void expect_sound(const Proof& proof, const System& system, const std::string& label) {
  ASSERT_LE(system.n, 12u);
  for (const auto& line : proof.lines) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << system.n); ++mask) {
      const auto alpha = assignment_from_mask(mask, system.n);
      bool premises_hold = true;
      for (std::size_t id : line.premises()) premises_hold = premises_hold && proof.line(id).stated.satisfied_by(alpha);
      if (line.rule.kind == RuleKind::Axiom) {
        premises_hold = axiom(system, line.rule.axiom, true)->satisfied_by(alpha);
      }
      if (premises_hold) {
        ASSERT_TRUE(line.stated.satisfied_by(alpha)) << label << " L" << line.id << " mask " << mask;
      }
    }
  }
}

TEST(Soundness, BundledProofsLineByLine) {
  for (const char* stem : kBundledStems) {
    const auto b = load_bundled(stem);
    expect_sound(b.proof, b.system, stem);
  }
}

// Random derivations: premises are random, conclusions computed here, and
// only lines the verifier accepts are checked semantically.
TEST(Soundness, RandomDerivations) {
  CoinStream rng(31);
  const auto small = [&rng](int span) { return static_cast<int>(rng.draw_word(8) % (2 * span + 1)) - span; };
  std::size_t checked = 0;
  for (int rep = 0; rep < 3000; ++rep) {
    const std::size_t n = 1 + rng.draw_word(2);
    System sys{n, {}};
    std::vector<LinearInequality> prem(2);
    for (auto& p : prem) {
      p.coefficients.resize(n);
      for (auto& a : p.coefficients) a = small(4);
      p.bound = small(6);
    }
    LinearInequality concl = prem[0];
    ProofLine line;
    switch (rng.draw_word(2)) {
      case 0:
      case 1:
        for (std::size_t i = 0; i < n; ++i) concl.coefficients[i] += prem[1].coefficients[i];
        concl.bound += prem[1].bound;
        line = derived_line(3, RuleKind::Add, 1, 2, 0, concl);
        break;
      case 2: {
        int d = 0;
        while (d == 0) d = small(3);
        for (auto& a : concl.coefficients) a *= std::abs(d);
        concl.bound *= std::abs(d);
        line = derived_line(3, RuleKind::Mul, 1, 0, d, concl);
        break;
      }
      default: {
        const int c = 2 + static_cast<int>(rng.draw_word(2));
        for (auto& a : prem[0].coefficients) a *= c;
        prem[0].bound = small(9);
        for (std::size_t i = 0; i < n; ++i) concl.coefficients[i] = prem[0].coefficients[i] / c;
        // floor division, independent of the verifier's helper
        const int b = static_cast<int>(prem[0].bound);
        concl.bound = b >= 0 ? b / c : -((-b + c - 1) / c);
        line = derived_line(3, RuleKind::Div, 1, 0, c, concl);
        break;
      }
    }
    ASSERT_FALSE(check_line(line, resolver(prem), sys)) << "rep " << rep;
    ++checked;
    for (std::uint64_t mask = 0; mask < (1U << n); ++mask) {
      const auto alpha = assignment_from_mask(mask, n);
      bool hold = prem[0].satisfied_by(alpha);
      if (line.rule.kind == RuleKind::Add) hold = hold && prem[1].satisfied_by(alpha);
      if (hold) ASSERT_TRUE(line.stated.satisfied_by(alpha)) << "rep " << rep;
    }
    // A strictly stronger conclusion is never accepted.
    ProofLine stronger = line;
    stronger.stated.bound -= 1;
    EXPECT_TRUE(check_line(stronger, resolver(prem), sys));
  }
  EXPECT_EQ(checked, 3000u);
}

// A verified refutation certifies that no 0-1 point satisfies every axiom.
TEST(Soundness, VerifiedSystemsAreUnsatisfiable) {
  for (const char* stem : kBundledStems) {
    const auto b = load_bundled(stem);
    ASSERT_TRUE(verify_proof(b.proof, b.system).ok());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b.system.n); ++mask) {
      const auto alpha = assignment_from_mask(mask, b.system.n);
      bool all = true;
      for (const auto& ax : b.system.axioms) all = all && ax.satisfied_by(alpha);
      EXPECT_FALSE(all) << stem << " satisfied by mask " << mask;
    }
  }
}

}  // namespace
}  // namespace kwcp::cp
