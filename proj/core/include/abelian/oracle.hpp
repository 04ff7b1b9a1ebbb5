#pragma once

#include "abelian/group.hpp"

namespace abelian {

struct EnumerationBudget {
  Int max_group_order = 4096;
};

/// Ground truth by exhaustive enumeration of the source group.
struct OracleResult {
  SolutionSet solution;                       // lexicographically smallest particular
  std::vector<GroupElement> kernel_elements;  // the complete kernel, in lex order
};

/// Enumerates every source element; the particular solution is the
/// lexicographically smallest pre-image and the kernel generators are chosen
/// greedily from the kernel element list. Throws when the source is infinite
/// or exceeds the budget.
OracleResult brute_force_solve(const Homomorphism& phi, const GroupElement& b,
                               const EnumerationBudget& budget = {});

}  // namespace abelian
