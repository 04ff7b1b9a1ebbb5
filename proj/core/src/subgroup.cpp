#include "abelian/subgroup.hpp"

#include "abelian/snf.hpp"

#include <stdexcept>

namespace abelian {

std::set<Vec> enumerate_subgroup(const FgAbelianGroup& group,
                                 const std::vector<GroupElement>& gens, const Int& budget) {
  if (!group.is_finite())
    throw std::invalid_argument("enumerate_subgroup: group has an infinite factor");
  if (group.order() > budget)
    throw std::invalid_argument("enumerate_subgroup: budget exceeded");
  std::set<Vec> elements;
  elements.insert(Vec(group.rank(), 0));
  for (const auto& g : gens) {
    if (g.group != group) throw std::invalid_argument("enumerate_subgroup: group mismatch");
    std::set<Vec> frontier = elements;
    while (!frontier.empty()) {
      std::set<Vec> fresh;
      for (const auto& v : frontier) {
        const GroupElement sum = add(GroupElement{group, v}, g);
        if (elements.insert(sum.exponents).second) fresh.insert(sum.exponents);
      }
      frontier = std::move(fresh);
    }
  }
  return elements;
}

bool in_generated_subgroup(const std::vector<GroupElement>& gens, const GroupElement& g) {
  // integer combinations of the generators: a Z^t -> G evaluation map
  FgAbelianGroup domain;
  domain.orders.assign(gens.size(), 0);
  Matrix m(g.group.rank(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].group != g.group)
      throw std::invalid_argument("in_generated_subgroup: group mismatch");
    for (std::size_t i = 0; i < g.group.rank(); ++i) m(i, j) = gens[j].exponents[i];
  }
  const Homomorphism eval = make_homomorphism(std::move(domain), g.group, std::move(m));
  return solve_fg_via_snf(eval, g, SnfStrategy::Direct).solvable();
}

bool same_subgroup(const FgAbelianGroup& group, const std::vector<GroupElement>& a,
                   const std::vector<GroupElement>& b, const Int& budget) {
  if (group.is_finite() && group.order() <= budget)
    return enumerate_subgroup(group, a, budget) == enumerate_subgroup(group, b, budget);
  for (const auto& g : a)
    if (!in_generated_subgroup(b, g)) return false;
  for (const auto& g : b)
    if (!in_generated_subgroup(a, g)) return false;
  return true;
}

}  // namespace abelian
