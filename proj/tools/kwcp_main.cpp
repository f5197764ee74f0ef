// kwcp: verify cutting-planes refutations, build search trees, play the
// falsified-axiom game, and run protocol benches.
//
// Exit codes: 0 ok, 1 verification/protocol failure, 2 usage or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "kwcp/bench/bench.hpp"
#include "kwcp/cp/verify.hpp"
#include "kwcp/kw/kw_play.hpp"
#include "kwcp/kw/search_tree.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  kwcp::cp::System system;
  kwcp::cp::Proof proof;
};

// I/O problems are usage errors; malformed content is a verification failure.
Inputs load(const std::string& system_path, const std::string& proof_path) {
  Inputs in;
  try {
    in.system = kwcp::cp::load_system(system_path);
  } catch (const kwcp::cp::ParseError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  try {
    in.proof = kwcp::cp::load_proof(proof_path, in.system.n);
  } catch (const kwcp::cp::ParseError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  return in;
}

int cmd_verify(const std::string& system_path, const std::string& proof_path, bool require_tree,
               bool boolean_axioms) {
  const Inputs in = load(system_path, proof_path);
  kwcp::cp::VerifyOptions options;
  options.require_tree = require_tree;
  options.boolean_axioms = boolean_axioms;
  const auto result = kwcp::cp::verify_proof(in.proof, in.system, options);
  if (!result.ok()) {
    std::cerr << proof_path << ": " << result.violation->to_string() << '\n';
    return kFailure;
  }
  std::cout << "ok: " << (result.tree_like ? "tree-like" : "not tree-like") << ", " << in.proof.size()
            << " lines\n";
  return kOk;
}

int cmd_tree(const std::string& system_path, const std::string& proof_path, const std::string& out_path) {
  const Inputs in = load(system_path, proof_path);
  const auto tree = kwcp::kw::build_search_tree(in.proof, in.system);
  const std::string text = kwcp::kw::write_search_tree(tree);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError(out_path + ": cannot open for writing");
    out << text;
  }
  std::cerr << "depth " << kwcp::kw::depth(tree) << " (bound " << kwcp::kw::search_depth_bound(in.proof.size())
            << "), " << tree.nodes.size() << " nodes\n";
  return kOk;
}

int cmd_play(const std::string& system_path, const std::string& proof_path, const std::string& partition,
             const std::string& alpha_text, double epsilon, std::uint64_t seed) {
  const Inputs in = load(system_path, proof_path);
  kwcp::Partition part;
  kwcp::Assignment alpha;
  try {
    part = kwcp::Partition::parse(partition, in.system.n);
    alpha = kwcp::parse_assignment(alpha_text);
    if (alpha.size() != in.system.n) {
      throw kwcp::InputError("--alpha needs " + std::to_string(in.system.n) + " bits, got " +
                             std::to_string(alpha.size()));
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw kwcp::InputError("--epsilon must lie in (0, 1)");
  } catch (const kwcp::InputError& e) {
    throw UsageError(e.what());
  }

  const auto tree = kwcp::kw::build_search_tree(in.proof, in.system);
  kwcp::CoinStream coins(seed);
  const auto a = kwcp::project(alpha, part.alice);
  const auto b = kwcp::project(alpha, part.bob);
  const auto result = kwcp::kw::kw_play(tree, part, a, b, epsilon, coins);
  const std::size_t index = result.output;
  const auto& ineq = in.system.axioms.at(index - 1);
  const bool falsified = !ineq.satisfied_by(alpha);
  const std::size_t bits = kwcp::bits_used(result.transcript);
  const std::size_t bound = kwcp::kw::kw_bit_bound(tree, epsilon);

  std::cout << "axiom " << index << ": " << ineq.to_string() << '\n'
            << "falsified: " << (falsified ? "yes" : "no") << '\n'
            << "bits_used: " << bits << '\n'
            << "bound: " << bound << " (depth " << kwcp::kw::depth(tree) << ")\n";
  return falsified && bits <= bound ? kOk : kFailure;
}

int cmd_bench(const std::string& protocol, const std::vector<std::size_t>& ns, const std::vector<double>& epsilons,
              std::size_t trials, std::uint64_t seed, bool adversarial, bool equal_inputs, bool human,
              const std::string& out_path) {
  std::vector<kwcp::BenchRow> rows;
  try {
    if (adversarial && equal_inputs) throw kwcp::InputError("--adversarial and --equal-inputs are exclusive");
    for (std::size_t n : ns) {
      for (double eps : epsilons) {
        kwcp::BenchConfig config;
        config.protocol = kwcp::parse_protocol(protocol);
        config.n = n;
        config.epsilon = eps;
        config.trials = trials;
        config.seed = seed;
        config.inputs = adversarial    ? kwcp::InputMode::Adversarial
                        : equal_inputs ? kwcp::InputMode::Equal
                                       : kwcp::InputMode::Uniform;
        config.validate();
        rows.push_back(kwcp::run_bench(config));
      }
    }
  } catch (const kwcp::InputError& e) {
    throw UsageError(e.what());
  }

  std::ofstream file;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) throw UsageError(out_path + ": cannot open for writing");
  }
  std::ostream& os = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
  if (human) {
    kwcp::write_human(os, rows);
  } else {
    kwcp::write_csv(os, rows);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cutting-planes refutations, search trees and randomized communication protocols"};
  app.require_subcommand(1);

  std::string system_path;
  std::string proof_path;
  std::string out_path;
  std::string partition;
  std::string alpha;
  double epsilon = 0.05;
  std::uint64_t seed = 0;
  bool require_tree = false;
  bool no_boolean = false;

  auto* verify = app.add_subcommand("verify", "Check a cutting-planes refutation");
  verify->add_option("--system", system_path, "System file")->required();
  verify->add_option("--proof", proof_path, "Proof file")->required();
  verify->add_flag("--require-tree", require_tree, "Reject proofs that reuse a line");
  verify->add_flag("--no-boolean-axioms", no_boolean, "Disable the implicit 0 <= x_i <= 1 axioms");

  auto* tree = app.add_subcommand("tree", "Build and print the search tree of a tree-like refutation");
  tree->add_option("--system", system_path, "System file")->required();
  tree->add_option("--proof", proof_path, "Proof file")->required();
  tree->add_option("--out", out_path, "Output file (default: stdout)");

  auto* play = app.add_subcommand("play", "Play the falsified-axiom game on the proof's search tree");
  play->add_option("--system", system_path, "System file")->required();
  play->add_option("--proof", proof_path, "Proof file")->required();
  play->add_option("--partition", partition, "Variable split, e.g. \"1,3;2,4\" (Alice;Bob)")->required();
  play->add_option("--alpha", alpha, "Assignment as a 0/1 string of length n")->required();
  play->add_option("--epsilon", epsilon, "Total error budget")->capture_default_str();
  play->add_option("--seed", seed, "Coin seed")->capture_default_str();

  std::string protocol = "gt-walk";
  std::vector<std::size_t> ns{16};
  std::vector<double> epsilons{0.125};
  std::size_t trials = 10000;
  bool adversarial = false;
  bool equal_inputs = false;
  bool human = false;
  auto* bench = app.add_subcommand("bench", "Monte-Carlo error and communication measurements (CSV)");
  bench->add_option("--protocol", protocol, "eq | gt-baseline | gt-walk | threshold")->capture_default_str();
  bench->add_option("--n", ns, "Input length(s)")->capture_default_str();
  bench->add_option("--epsilon", epsilons, "Target error(s)")->capture_default_str();
  bench->add_option("--trials", trials, "Trials per row")->capture_default_str();
  bench->add_option("--seed", seed, "Base seed")->capture_default_str();
  bench->add_flag("--adversarial", adversarial, "Hardest inputs, e.g. (y, y+1) pairs for GT");
  bench->add_flag("--equal-inputs", equal_inputs, "Use x == y");
  bench->add_flag("--human", human, "Aligned table instead of CSV");
  bench->add_option("--out", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(system_path, proof_path, require_tree, !no_boolean);
    if (*tree) return cmd_tree(system_path, proof_path, out_path);
    if (*play) return cmd_play(system_path, proof_path, partition, alpha, epsilon, seed);
    if (*bench) {
      return cmd_bench(protocol, ns, epsilons, trials, seed, adversarial, equal_inputs, human, out_path);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const kwcp::cp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
