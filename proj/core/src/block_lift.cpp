#include "abelian/block_lift.hpp"

#include "abelian/modular_snf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace abelian {

namespace {

unsigned factor_exponent(const Int& order, const Int& p) {
  unsigned e = 0;
  Int o = order;
  while (o > 1) {
    internal_check(divides(p, o), "factor_exponent: order is not a power of p");
    o = exact_div(o, p);
    ++e;
  }
  return e;
}

Int common_prime(const FgAbelianGroup& source, const FgAbelianGroup& target, const char* who) {
  const auto ps = source.p_group_prime();
  const auto pt = target.p_group_prime();
  if (ps && pt) {
    if (*ps != *pt) throw std::invalid_argument(std::string(who) + ": mixed primes");
    return *ps;
  }
  if (ps) return *ps;
  if (pt) return *pt;
  if (source.is_trivial() && target.is_trivial()) return 2;  // irrelevant
  throw std::invalid_argument(std::string(who) + ": groups are not p-groups");
}

std::vector<unsigned> group_exponents(const FgAbelianGroup& g, const Int& p) {
  std::vector<unsigned> e;
  e.reserve(g.rank());
  for (const auto& o : g.orders) e.push_back(factor_exponent(o, p));
  return e;
}

// Homocyclic coordinates of y in p^{e_from}H / p^{e_to}H: the factors of H
// with exponent > e_from, each contributing y_r / p^{e_from} mod p^(e_to-e_from).
struct LayerFrame {
  Int p;
  unsigned exp_from = 0;
  unsigned exp_to = 0;
  std::vector<std::size_t> rows;  // target factor indices with exponent > exp_from

  unsigned delta() const { return exp_to - exp_from; }

  Vec coords(const GroupElement& y_capped) const {
    const Int shift = pow_ui(p, exp_from);
    Vec w(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      internal_check(divides(shift, y_capped.exponents[rows[r]]),
                     "layer frame: element not in p^e H");
      w[r] = exact_div(y_capped.exponents[rows[r]], shift);
    }
    return w;
  }
};

LayerFrame make_frame(const FgAbelianGroup& target, const Int& p, unsigned exp_from,
                      unsigned exp_to) {
  LayerFrame f{p, exp_from, exp_to, {}};
  for (std::size_t r = 0; r < target.rank(); ++r)
    if (factor_exponent(target.orders[r], p) > exp_from) f.rows.push_back(r);
  return f;
}

// The layer condition in kernel-generator exponents: M * c ≡ rhs over the
// homocyclic quotient, where column j holds the frame coordinates of the
// image of generator j at level exp_to.
Matrix layer_matrix(const Homomorphism& phi, const std::vector<GroupElement>& gens,
                    const LayerFrame& frame) {
  Matrix m(frame.rows.size(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const GroupElement image = apply_hom(phi, gens[j]);
    internal_check(cap_element(image, frame.p, frame.exp_from).is_identity(),
                   "layer generator image does not vanish at the current level");
    const Vec w = frame.coords(cap_element(image, frame.p, frame.exp_to));
    for (std::size_t r = 0; r < w.size(); ++r) m(r, j) = w[r];
  }
  return m;
}

GroupElement combine(const std::vector<GroupElement>& gens, const Vec& coeffs,
                     const FgAbelianGroup& group) {
  GroupElement sum = identity_element(group);
  for (std::size_t j = 0; j < gens.size(); ++j) sum = add(sum, scale(coeffs[j], gens[j]));
  return sum;
}

// Drops generators expressible in the span of the remaining ones.
std::vector<GroupElement> prune_generators(std::vector<GroupElement> gens) {
  gens = dedupe_generators(std::move(gens));
  std::size_t i = 0;
  while (i < gens.size()) {
    std::vector<GroupElement> others;
    others.reserve(gens.size() - 1);
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (p_group_membership(others, gens[i]))
      gens.erase(gens.begin() + i);
    else
      ++i;
  }
  return gens;
}

}  // namespace

LayerChain build_layer_chain(const FgAbelianGroup& source, const FgAbelianGroup& target) {
  LayerChain chain;
  chain.p = common_prime(source, target, "build_layer_chain");
  std::set<unsigned> exps;
  for (const auto& o : source.orders) exps.insert(factor_exponent(o, chain.p));
  for (const auto& o : target.orders) exps.insert(factor_exponent(o, chain.p));
  exps.erase(0u);
  chain.exponents.assign(exps.begin(), exps.end());
  for (unsigned e : chain.exponents) {
    chain.source_quotients.push_back(cap_group(source, chain.p, e));
    chain.target_quotients.push_back(cap_group(target, chain.p, e));
  }
  return chain;
}

FgAbelianGroup cap_group(const FgAbelianGroup& group, const Int& p, unsigned exp) {
  const Int cap = pow_ui(p, exp);
  FgAbelianGroup out;
  out.orders.reserve(group.rank());
  for (const auto& o : group.orders) out.orders.push_back(std::min(o, cap));
  return out;
}

GroupElement cap_element(const GroupElement& g, const Int& p, unsigned exp) {
  return make_element(cap_group(g.group, p, exp), g.exponents);
}

Homomorphism induced_hom(const Homomorphism& phi, const Int& p, unsigned exp) {
  return make_homomorphism(cap_group(phi.source, p, exp), cap_group(phi.target, p, exp),
                           phi.matrix);
}

std::optional<GroupElement> lift_particular(const Homomorphism& phi, const GroupElement& b,
                                            const GroupElement& x,
                                            const std::vector<GroupElement>& kernel_gens,
                                            unsigned exp_from, unsigned exp_to) {
  const Int p = common_prime(phi.source, phi.target, "lift_particular");
  const LayerFrame frame = make_frame(phi.target, p, exp_from, exp_to);
  const GroupElement defect = subtract(apply_hom(phi, x), b);
  internal_check(cap_element(defect, p, exp_from).is_identity(),
                 "lift_particular: x does not solve the current level");
  const Vec rhs = frame.coords(cap_element(defect, p, exp_to));
  const Matrix m = layer_matrix(phi, kernel_gens, frame);
  const SolutionSet cond = solve_homocyclic(m, rhs, p, frame.delta());
  if (!cond.solvable()) return std::nullopt;
  const GroupElement lambda = combine(kernel_gens, cond.particular().exponents, phi.source);
  return subtract(x, lambda);
}

std::vector<GroupElement> lift_kernel(const Homomorphism& phi,
                                      const std::vector<GroupElement>& kernel_gens,
                                      unsigned exp_from, unsigned exp_to) {
  const Int p = common_prime(phi.source, phi.target, "lift_kernel");
  const LayerFrame frame = make_frame(phi.target, p, exp_from, exp_to);
  const Matrix m = layer_matrix(phi, kernel_gens, frame);
  const SolutionSet hom = solve_homocyclic(m, Vec(frame.rows.size()), p, frame.delta());
  internal_check(hom.solvable(), "homogeneous layer system must be solvable");

  std::vector<GroupElement> next;
  for (const auto& c : hom.kernel_generators())
    next.push_back(combine(kernel_gens, c.exponents, phi.source));
  const Int step = pow_ui(p, exp_to - exp_from);
  for (const auto& k : kernel_gens) next.push_back(scale(step, k));
  return prune_generators(std::move(next));
}

SolutionSet solve_p_group_blockwise(const Homomorphism& phi, const GroupElement& b) {
  if (b.group != phi.target) throw std::invalid_argument("solve_p_group_blockwise: group mismatch");
  if (auto v = validate_hom(phi))
    throw std::invalid_argument("solve_p_group_blockwise: invalid homomorphism");
  const Int p = common_prime(phi.source, phi.target, "solve_p_group_blockwise");

  if (phi.source.is_trivial()) {
    if (b.is_identity()) return SolutionSet(identity_element(phi.source), {});
    return SolutionSet::make_inconsistent();
  }

  const LayerChain chain = build_layer_chain(phi.source, phi.target);
  if (chain.exponents.empty())  // target trivial, source arbitrary p-group
    return SolutionSet(identity_element(phi.source),
                       dedupe_generators([&] {
                         std::vector<GroupElement> gens;
                         for (std::size_t j = 0; j < phi.source.rank(); ++j) {
                           Vec e(phi.source.rank());
                           e[j] = 1;
                           gens.push_back(make_element(phi.source, std::move(e)));
                         }
                         return gens;
                       }()));

  // base layer: homocyclic solve over G/p^{e_1}G -> H/p^{e_1}H
  const unsigned base_exp = chain.exponents.front();
  const Int base_mod = pow_ui(p, base_exp);
  Matrix base_matrix = phi.matrix;
  base_matrix.reduce_mod(base_mod);
  const GroupElement base_rhs = cap_element(b, p, base_exp);
  const SolutionSet base = solve_homocyclic(base_matrix, base_rhs.exponents, p, base_exp);
  if (!base.solvable()) return SolutionSet::make_inconsistent();

  GroupElement x = make_element(phi.source, base.particular().exponents);
  std::vector<GroupElement> kernel;
  for (const auto& g : base.kernel_generators())
    kernel.push_back(make_element(phi.source, g.exponents));
  for (std::size_t j = 0; j < phi.source.rank(); ++j) {
    // generators of ker iota_1 = p^{e_1} G
    if (phi.source.orders[j] > base_mod) {
      Vec e(phi.source.rank());
      e[j] = base_mod;
      kernel.push_back(make_element(phi.source, std::move(e)));
    }
  }
  kernel = prune_generators(std::move(kernel));

  for (std::size_t i = 0; i + 1 < chain.exponents.size(); ++i) {
    const unsigned from = chain.exponents[i];
    const unsigned to = chain.exponents[i + 1];
    const LayerFrame frame = make_frame(phi.target, p, from, to);
    const GroupElement defect = subtract(apply_hom(phi, x), b);
    internal_check(cap_element(defect, p, from).is_identity(),
                   "blockwise solve: level invariant broken");
    const Vec rhs = frame.coords(cap_element(defect, p, to));
    const Matrix m = layer_matrix(phi, kernel, frame);
    const SolutionSet cond = solve_homocyclic(m, rhs, p, frame.delta());
    if (!cond.solvable()) return SolutionSet::make_inconsistent();

    const GroupElement lambda = combine(kernel, cond.particular().exponents, phi.source);
    x = subtract(x, lambda);
    internal_check(cap_element(subtract(apply_hom(phi, x), b), p, to).is_identity(),
                   "blockwise solve: lifted solution does not solve next level");

    std::vector<GroupElement> next;
    for (const auto& c : cond.kernel_generators())
      next.push_back(combine(kernel, c.exponents, phi.source));
    const Int step = pow_ui(p, to - from);
    for (const auto& k : kernel) next.push_back(scale(step, k));
    kernel = prune_generators(std::move(next));
  }

  return SolutionSet(std::move(x), std::move(kernel));
}

std::optional<Vec> p_group_membership(const std::vector<GroupElement>& gens,
                                      const GroupElement& b) {
  if (gens.empty()) {
    if (b.is_identity()) return Vec{};
    return std::nullopt;
  }
  const FgAbelianGroup& g = b.group;
  for (const auto& gen : gens)
    if (gen.group != g) throw std::invalid_argument("p_group_membership: group mismatch");
  if (g.is_trivial()) return Vec(gens.size());
  const auto prime = g.p_group_prime();
  if (!prime) throw std::invalid_argument("p_group_membership: not a p-group");

  unsigned emax = 0;
  for (const auto& o : g.orders) emax = std::max(emax, factor_exponent(o, *prime));
  Matrix m(g.rank(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t r = 0; r < g.rank(); ++r) m(r, j) = gens[j].exponents[r];
  const ScaledSystem scaled = scale_rows_to_exponent(g, m, b.exponents, *prime, emax);
  const SolutionSet sol = solve_homocyclic(scaled.matrix, scaled.rhs, *prime, emax);
  if (!sol.solvable()) return std::nullopt;
  return sol.particular().exponents;
}

}  // namespace abelian
