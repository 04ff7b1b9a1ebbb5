#pragma once

#include "abelian/group.hpp"

#include <set>

namespace abelian {

/// All elements of the subgroup generated by gens (finite groups; throws
/// when the closure would exceed the budget).
std::set<Vec> enumerate_subgroup(const FgAbelianGroup& group,
                                 const std::vector<GroupElement>& gens, const Int& budget = 4096);

/// Membership of g in the subgroup generated by gens, for any finitely
/// generated group (integer-linear solve over the generator exponents).
bool in_generated_subgroup(const std::vector<GroupElement>& gens, const GroupElement& g);

/// Whether two generating sets span the same subgroup: by enumeration when
/// the ambient group is finite and within budget, otherwise by mutual
/// membership of the generators.
bool same_subgroup(const FgAbelianGroup& group, const std::vector<GroupElement>& a,
                   const std::vector<GroupElement>& b, const Int& budget = 4096);

}  // namespace abelian
