#include "abelian/strategy.hpp"

#include "abelian/block_lift.hpp"
#include "abelian/hensel.hpp"
#include "abelian/modular_snf.hpp"
#include "abelian/oracle.hpp"
#include "abelian/primary.hpp"
#include "abelian/snf.hpp"
#include "abelian/sylow.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <stdexcept>

namespace abelian {

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "auto") return Strategy::Auto;
  if (name == "snf") return Strategy::Snf;
  if (name == "modular") return Strategy::Modular;
  if (name == "block") return Strategy::Block;
  if (name == "hensel") return Strategy::Hensel;
  if (name == "oracle") return Strategy::Oracle;
  return std::nullopt;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Snf: return "snf";
    case Strategy::Modular: return "modular";
    case Strategy::Block: return "block";
    case Strategy::Hensel: return "hensel";
    case Strategy::Oracle: return "oracle";
  }
  return "?";
}

namespace {

using PGroupSolver = std::function<SolutionSet(const Homomorphism&, const GroupElement&)>;

// Shared pipeline: primary form, sylow split, per-prime solves (optionally
// concurrent), recombination, translation back to the original coordinates.
SolutionSet solve_via_decomposition(const Homomorphism& phi, const GroupElement& b,
                                    const PGroupSolver& solver, bool parallel) {
  const PrimaryDecomposition src = canonical_primary_form(phi.source);
  const PrimaryDecomposition tgt = canonical_primary_form(phi.target);
  const Homomorphism pphi = primary_form_hom(phi, src, tgt);
  const GroupElement pb = tgt.to_primary(b);

  const SylowSplit split = sylow_split(pphi, pb);
  const DiophantineSolution free_part = solve_free_block(split);

  std::vector<SolutionSet> parts;
  parts.reserve(split.blocks.size());
  if (parallel) {
    std::vector<std::future<SolutionSet>> futures;
    futures.reserve(split.blocks.size());
    for (const auto& block : split.blocks)
      futures.push_back(std::async(std::launch::async, [&block, &solver] {
        return solver(block.hom, block.rhs);
      }));
    for (auto& f : futures) parts.push_back(f.get());
  } else {
    for (const auto& block : split.blocks) parts.push_back(solver(block.hom, block.rhs));
  }

  const SolutionSet combined = crt_recombine(split, free_part, parts);
  if (!combined.solvable()) return combined;

  GroupElement particular = src.from_primary(combined.particular());
  std::vector<GroupElement> gens;
  gens.reserve(combined.kernel_generators().size());
  for (const auto& g : combined.kernel_generators()) gens.push_back(src.from_primary(g));
  return SolutionSet(std::move(particular), dedupe_generators(std::move(gens)));
}

StrategyOutcome inapplicable(std::string reason) {
  return StrategyOutcome{std::nullopt, std::move(reason)};
}

StrategyOutcome solve_modular(const Homomorphism& phi, const GroupElement& b) {
  const PrimaryDecomposition src = canonical_primary_form(phi.source);
  const PrimaryDecomposition tgt = canonical_primary_form(phi.target);
  const auto hs = src.primary.homocyclic_shape();
  const auto ht = tgt.primary.homocyclic_shape();
  if (!hs || !ht || hs->first != ht->first)
    return inapplicable("source and target are not homocyclic p-groups for a common prime");

  const Homomorphism pphi = primary_form_hom(phi, src, tgt);
  const GroupElement pb = tgt.to_primary(b);
  const Int p = hs->first;
  const unsigned exp = std::max(hs->second, ht->second);
  const ScaledSystem scaled =
      scale_rows_to_exponent(pphi.target, pphi.matrix, pb.exponents, p, exp);
  const SolutionSet sol = solve_homocyclic(scaled.matrix, scaled.rhs, p, exp);
  if (!sol.solvable()) return StrategyOutcome{sol, {}};

  // project back: coordinate j of the frame solution reduces mod p^{e_j}
  auto project = [&](const Vec& v) { return src.from_primary(make_element(src.primary, v)); };
  GroupElement particular = project(sol.particular().exponents);
  std::vector<GroupElement> gens;
  for (const auto& g : sol.kernel_generators()) gens.push_back(project(g.exponents));
  return StrategyOutcome{SolutionSet(std::move(particular), dedupe_generators(std::move(gens))),
                         {}};
}

}  // namespace

StrategyOutcome solve_with_strategy(const Homomorphism& phi, const GroupElement& b, Strategy s,
                                    const SolveOptions& options) {
  switch (s) {
    case Strategy::Snf:
      return StrategyOutcome{solve_fg_via_snf(phi, b, SnfStrategy::Direct), {}};

    case Strategy::Modular:
      return solve_modular(phi, b);

    case Strategy::Block: {
      if (!phi.source.is_finite() || !phi.target.is_finite())
        return inapplicable("block lifting applies to finite groups only");
      return StrategyOutcome{
          solve_via_decomposition(phi, b, solve_p_group_blockwise, options.parallel_primes), {}};
    }

    case Strategy::Hensel: {
      if (!phi.source.is_finite() || !phi.target.is_finite())
        return inapplicable("hensel lifting applies to finite groups only");
      HenselOptions hopts{options.verify_hensel};
      auto solver = [hopts](const Homomorphism& h, const GroupElement& rhs) {
        return solve_p_group_hom_hensel(h, rhs, hopts);
      };
      return StrategyOutcome{
          solve_via_decomposition(phi, b, solver, options.parallel_primes), {}};
    }

    case Strategy::Oracle: {
      if (!phi.source.is_finite())
        return inapplicable("oracle enumeration needs a finite source group");
      if (phi.source.order() > options.oracle_budget)
        return inapplicable("oracle enumeration budget exceeded");
      EnumerationBudget budget{options.oracle_budget};
      return StrategyOutcome{brute_force_solve(phi, b, budget).solution, {}};
    }

    case Strategy::Auto: {
      HenselOptions hopts{options.verify_hensel};
      auto solver = [hopts](const Homomorphism& h, const GroupElement& rhs) {
        return solve_p_group_hom_hensel(h, rhs, hopts);
      };
      return StrategyOutcome{
          solve_via_decomposition(phi, b, solver, options.parallel_primes), {}};
    }
  }
  throw std::logic_error("solve_with_strategy: unknown strategy");
}

}  // namespace abelian
