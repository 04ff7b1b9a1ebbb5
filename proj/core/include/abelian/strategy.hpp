#pragma once

#include "abelian/group.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace abelian {

enum class Strategy { Auto, Snf, Modular, Block, Hensel, Oracle };

std::optional<Strategy> parse_strategy(std::string_view name);
std::string_view strategy_name(Strategy s);

struct SolveOptions {
  /// Solve per-prime subproblems concurrently (results are identical either way).
  bool parallel_primes = false;
  /// Forwarded to the Hensel solver: re-substitute the whole family after
  /// each lifting level.
  bool verify_hensel = false;
  Int oracle_budget = 4096;
};

/// Result of a strategy run: a SolutionSet, or an explanation why the
/// strategy does not apply to this problem shape.
struct StrategyOutcome {
  std::optional<SolutionSet> result;
  std::string inapplicable_reason;

  bool applicable() const { return result.has_value(); }
};

/// Strategy semantics:
///   snf     - linear Diophantine system via the integer Smith normal form
///   modular - modular Smith normal form; source and target homocyclic for a
///             common prime
///   block   - primary decomposition + per-prime lifting along the layer
///             chain; finite groups only
///   hensel  - primary decomposition + per-prime Hensel lifting; finite only
///   oracle  - exhaustive enumeration within the budget
///   auto    - primary decomposition, Hensel per prime, integer SNF for the
///             torsion-free part
StrategyOutcome solve_with_strategy(const Homomorphism& phi, const GroupElement& b, Strategy s,
                                    const SolveOptions& options = {});

}  // namespace abelian
