#include "abelian/bench.hpp"

#include "abelian/oracle.hpp"
#include "abelian/subgroup.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

namespace abelian {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

namespace {

FgAbelianGroup random_group(std::mt19937_64& rng, const BenchProfile& profile) {
  const unsigned rank = 1 + static_cast<unsigned>(uniform_below(rng, profile.max_rank));
  FgAbelianGroup g;
  Int total = 1;
  for (unsigned i = 0; i < rank; ++i) {
    const Int p = profile.primes[uniform_below(rng, profile.primes.size())];
    unsigned e = 1 + static_cast<unsigned>(uniform_below(rng, profile.max_exp));
    while (e > 0 && total * pow_ui(p, e) > profile.oracle_budget) --e;
    if (e == 0) break;  // keep |G| within the oracle budget
    g.orders.push_back(pow_ui(p, e));
    total *= g.orders.back();
  }
  if (g.orders.empty()) g.orders.push_back(profile.primes.front());
  return g;
}

Int random_below(std::mt19937_64& rng, const Int& n) {
  // group orders in bench profiles fit comfortably in 64 bits
  return Int(static_cast<unsigned long>(uniform_below(rng, n.get_ui())));
}

}  // namespace

std::vector<ProblemInstance> generate_instances(const BenchProfile& profile) {
  std::mt19937_64 rng(profile.seed);
  std::vector<ProblemInstance> out;
  out.reserve(profile.count);
  for (std::size_t k = 0; k < profile.count; ++k) {
    const FgAbelianGroup source = random_group(rng, profile);
    const FgAbelianGroup target = random_group(rng, profile);
    Matrix m(target.rank(), source.rank());
    for (std::size_t i = 0; i < target.rank(); ++i)
      for (std::size_t j = 0; j < source.rank(); ++j) {
        // valid entries are the multiples of q_i / gcd(q_i, o_j)
        const Int g = gcd(target.orders[i], source.orders[j]);
        m(i, j) = exact_div(target.orders[i], g) * random_below(rng, g);
      }
    Homomorphism phi = make_homomorphism(source, target, std::move(m));
    Vec rhs(target.rank());
    if (uniform_below(rng, 2) == 0) {
      Vec x(source.rank());
      for (std::size_t j = 0; j < source.rank(); ++j) x[j] = random_below(rng, source.orders[j]);
      rhs = apply_hom(phi, make_element(source, std::move(x))).exponents;
    } else {
      for (std::size_t i = 0; i < target.rank(); ++i) rhs[i] = random_below(rng, target.orders[i]);
    }
    GroupElement b = make_element(target, std::move(rhs));
    out.push_back(ProblemInstance{std::move(phi), std::move(b)});
  }
  return out;
}

namespace {

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

}  // namespace

std::string BenchReport::to_csv() const {
  std::ostringstream out;
  out << "strategy,instances,solvable,inconsistent,agree_oracle,total_ms,median_ms\n";
  for (const auto& row : rows)
    out << strategy_name(row.strategy) << ',' << row.instances << ',' << row.solvable << ','
        << row.inconsistent << ',' << row.agree_oracle << ',' << format_ms(row.total_ms) << ','
        << format_ms(row.median_ms) << '\n';
  return out.str();
}

std::string BenchReport::to_table() const {
  std::ostringstream out;
  out << "strategy  instances  solvable  inconsistent  agree_oracle  total_ms  median_ms\n";
  for (const auto& row : rows) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-8s  %9zu  %8zu  %12zu  %12zu  %8s  %9s\n",
                  std::string(strategy_name(row.strategy)).c_str(), row.instances, row.solvable,
                  row.inconsistent, row.agree_oracle, format_ms(row.total_ms).c_str(),
                  format_ms(row.median_ms).c_str());
    out << buf;
  }
  return out.str();
}

BenchReport run_bench(const BenchProfile& profile) {
  const std::vector<ProblemInstance> instances = generate_instances(profile);

  // oracle ground truth, shared by every agreement column
  std::vector<OracleResult> truth;
  truth.reserve(instances.size());
  for (const auto& inst : instances)
    truth.push_back(brute_force_solve(inst.hom, inst.rhs, EnumerationBudget{profile.oracle_budget}));

  BenchReport report;
  SolveOptions options;
  options.oracle_budget = profile.oracle_budget;
  for (const Strategy s : profile.strategies) {
    BenchRow row;
    row.strategy = s;
    row.instances = instances.size();
    std::vector<double> times;
    times.reserve(instances.size());
    for (std::size_t k = 0; k < instances.size(); ++k) {
      const auto& inst = instances[k];
      const auto start = std::chrono::steady_clock::now();
      const StrategyOutcome outcome = solve_with_strategy(inst.hom, inst.rhs, s, options);
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());

      if (!outcome.applicable()) continue;
      const SolutionSet& sol = *outcome.result;
      if (sol.solvable())
        ++row.solvable;
      else
        ++row.inconsistent;

      bool agree = sol.solvable() == truth[k].solution.solvable();
      if (agree && sol.solvable()) {
        agree = apply_hom(inst.hom, sol.particular()) == inst.rhs;
        if (agree) {
          std::set<Vec> kernel;
          for (const auto& e : truth[k].kernel_elements) kernel.insert(e.exponents);
          agree = enumerate_subgroup(inst.hom.source, sol.kernel_generators(),
                                     profile.oracle_budget) == kernel;
        }
      }
      if (agree) ++row.agree_oracle;
    }
    for (const double t : times) row.total_ms += t;
    if (!times.empty()) {
      std::vector<double> sorted = times;
      std::sort(sorted.begin(), sorted.end());
      const std::size_t mid = sorted.size() / 2;
      row.median_ms = sorted.size() % 2 == 1 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace abelian
