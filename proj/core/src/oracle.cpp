#include "abelian/oracle.hpp"

#include <set>
#include <stdexcept>

namespace abelian {

namespace {

// Iterates all exponent vectors of a finite group in lexicographic order.
bool next_vector(Vec& x, const std::vector<Int>& orders) {
  std::size_t i = x.size();
  while (i-- > 0) {
    x[i] += 1;
    if (x[i] < orders[i]) return true;
    x[i] = 0;
  }
  return false;
}

// Closure of `base` under addition of g and its multiples.
void close_under(std::set<Vec>& subgroup, const GroupElement& g) {
  std::set<Vec> frontier = subgroup;
  while (!frontier.empty()) {
    std::set<Vec> fresh;
    for (const auto& v : frontier) {
      const GroupElement sum = add(GroupElement{g.group, v}, g);
      if (subgroup.insert(sum.exponents).second) fresh.insert(sum.exponents);
    }
    frontier = std::move(fresh);
  }
}

}  // namespace

OracleResult brute_force_solve(const Homomorphism& phi, const GroupElement& b,
                               const EnumerationBudget& budget) {
  if (b.group != phi.target) throw std::invalid_argument("brute_force_solve: group mismatch");
  if (!phi.source.is_finite())
    throw std::invalid_argument("brute_force_solve: source has an infinite factor");
  const Int order = phi.source.order();
  if (order > budget.max_group_order)
    throw std::invalid_argument("brute_force_solve: enumeration budget exceeded");

  OracleResult out;
  out.solution = SolutionSet::make_inconsistent();
  std::optional<Vec> particular;
  Vec x(phi.source.rank(), 0);
  Int image_count = 0;
  std::set<Vec> image;
  do {
    const GroupElement g{phi.source, x};
    const GroupElement y = apply_hom(phi, g);
    image.insert(y.exponents);
    if (!particular && y.exponents == b.exponents) particular = x;
    if (y.is_identity()) out.kernel_elements.push_back(g);
  } while (next_vector(x, phi.source.orders));
  image_count = Int(image.size());

  // Lagrange: |G| = |ker| * |im|
  internal_check(Int(out.kernel_elements.size()) * image_count == order,
                 "oracle: kernel and image sizes violate Lagrange");

  if (!particular) return out;

  // greedy generating set from the lex-ordered kernel elements
  std::vector<GroupElement> gens;
  std::set<Vec> span;
  span.insert(Vec(phi.source.rank(), 0));
  for (const auto& k : out.kernel_elements) {
    if (span.contains(k.exponents)) continue;
    gens.push_back(k);
    close_under(span, k);
  }
  internal_check(span.size() == out.kernel_elements.size(),
                 "oracle: generated subgroup does not match kernel");

  out.solution = SolutionSet(GroupElement{phi.source, *particular}, std::move(gens));
  return out;
}

}  // namespace abelian
