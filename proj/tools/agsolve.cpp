// agsolve: solve x^phi = b over finitely generated abelian groups.
//
// Subcommands:
//   solve <file> [--strategy ...] [--json]   exit 0 solvable, 10 inconsistent
//   verify <file>                            exit 0 iff all strategies agree
//   bench --seed N --count K ...             seeded method comparison
//
// Exit codes: 0 solved/agreement, 10 inconsistent, 1 usage or parse error,
// 2 strategy inapplicable to the problem shape.

#include "abelian/bench.hpp"
#include "abelian/oracle.hpp"
#include "abelian/problem_io.hpp"
#include "abelian/strategy.hpp"
#include "abelian/subgroup.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitSolvable = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitInconsistent = 10;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join_exponents(const abelian::Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += v[i].get_str();
  }
  return out;
}

nlohmann::json exponents_json(const abelian::Vec& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& x : v) arr.push_back(x.get_str());
  return arr;
}

int run_solve(const std::string& path, const std::string& strategy_name, bool json) {
  const auto strategy = abelian::parse_strategy(strategy_name);
  if (!strategy) {
    std::cerr << "unknown strategy '" << strategy_name << "'\n";
    return kExitUsage;
  }
  const auto file = abelian::parse_problem_file(read_file(path));
  const auto [phi, b] = abelian::to_problem(file);

  const abelian::StrategyOutcome outcome = abelian::solve_with_strategy(phi, b, *strategy);
  if (!outcome.applicable()) {
    std::cerr << "strategy '" << strategy_name << "' inapplicable: "
              << outcome.inapplicable_reason << "\n";
    return kExitInapplicable;
  }
  const abelian::SolutionSet& sol = *outcome.result;

  if (json) {
    nlohmann::json out;
    out["strategy"] = strategy_name;
    out["status"] = sol.solvable() ? "solvable" : "inconsistent";
    if (sol.solvable()) {
      out["particular"] = exponents_json(sol.particular().exponents);
      nlohmann::json gens = nlohmann::json::array();
      for (const auto& g : sol.kernel_generators()) gens.push_back(exponents_json(g.exponents));
      out["kernel_generators"] = gens;
    }
    std::cout << out.dump(2) << "\n";
  } else if (sol.solvable()) {
    std::cout << "SOLVABLE\n";
    std::cout << "particular: " << join_exponents(sol.particular().exponents) << "\n";
    for (const auto& g : sol.kernel_generators())
      std::cout << "kernel generator: " << join_exponents(g.exponents) << "\n";
    if (sol.kernel_generators().empty()) std::cout << "kernel: trivial\n";
  } else {
    std::cout << "INCONSISTENT\n";
  }
  return sol.solvable() ? kExitSolvable : kExitInconsistent;
}

int run_verify(const std::string& path) {
  const auto file = abelian::parse_problem_file(read_file(path));
  const auto [phi, b] = abelian::to_problem(file);

  const abelian::Strategy all[] = {abelian::Strategy::Snf, abelian::Strategy::Modular,
                                   abelian::Strategy::Block, abelian::Strategy::Hensel,
                                   abelian::Strategy::Auto, abelian::Strategy::Oracle};
  std::vector<std::pair<abelian::Strategy, abelian::SolutionSet>> results;
  for (const auto s : all) {
    const abelian::StrategyOutcome outcome = abelian::solve_with_strategy(phi, b, s);
    if (!outcome.applicable()) {
      std::cout << abelian::strategy_name(s) << ": inapplicable ("
                << outcome.inapplicable_reason << ")\n";
      continue;
    }
    std::cout << abelian::strategy_name(s) << ": "
              << (outcome.result->solvable() ? "SOLVABLE" : "INCONSISTENT") << "\n";
    results.emplace_back(s, *outcome.result);
  }

  bool agree = true;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i].second.solvable() != results[0].second.solvable()) agree = false;
  if (agree && !results.empty() && results[0].second.solvable()) {
    for (const auto& [s, sol] : results) {
      if (abelian::apply_hom(phi, sol.particular()) != b) {
        std::cout << abelian::strategy_name(s) << ": particular does not verify\n";
        agree = false;
      }
      if (!abelian::same_subgroup(phi.source, sol.kernel_generators(),
                                  results[0].second.kernel_generators())) {
        std::cout << abelian::strategy_name(s) << ": kernel differs\n";
        agree = false;
      }
    }
  }
  std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
  return agree ? 0 : kExitInconsistent;
}

int run_bench(const abelian::BenchProfile& profile, const std::string& csv_path) {
  const abelian::BenchReport report = abelian::run_bench(profile);
  std::cout << report.to_table();
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + csv_path + "'");
    out << report.to_csv();
  } else {
    std::cout << report.to_csv();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear equation solver for finitely generated abelian groups"};
  app.require_subcommand(1);

  std::string solve_file;
  std::string strategy = "auto";
  bool json = false;
  CLI::App* solve = app.add_subcommand("solve", "solve a problem file");
  solve->add_option("file", solve_file, "problem file")->required();
  solve->add_option("--strategy", strategy, "auto|snf|modular|block|hensel|oracle")
      ->default_val("auto");
  solve->add_flag("--json", json, "JSON output");

  std::string verify_file;
  CLI::App* verify = app.add_subcommand("verify", "run all applicable strategies and compare");
  verify->add_option("file", verify_file, "problem file")->required();

  abelian::BenchProfile profile;
  std::string csv_path;
  std::vector<unsigned> primes;
  CLI::App* bench = app.add_subcommand("bench", "seeded method comparison");
  bench->add_option("--seed", profile.seed, "random seed")->default_val(0);
  bench->add_option("--count", profile.count, "instances")->default_val(100);
  bench->add_option("--primes", primes, "primes for group orders")->delimiter(',');
  bench->add_option("--max-rank", profile.max_rank, "max factors per group")->default_val(3);
  bench->add_option("--max-exp", profile.max_exp, "max prime exponent")->default_val(2);
  bench->add_option("--csv", csv_path, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(solve_file, strategy, json);
    if (verify->parsed()) return run_verify(verify_file);
    if (bench->parsed()) {
      if (!primes.empty()) profile.primes = primes;
      return run_bench(profile, csv_path);
    }
  } catch (const abelian::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
