#pragma once

#include "abelian/group.hpp"

#include <optional>

namespace abelian {

/// The homocyclic layer chain of a p-group homomorphism: the merged distinct
/// factor exponents e_1 < ... < e_L of source and target, with the quotient
/// presentations G/p^{e_i}G and H/p^{e_i}H (orders capped at p^{e_i}).
struct LayerChain {
  Int p;
  std::vector<unsigned> exponents;
  std::vector<FgAbelianGroup> source_quotients;
  std::vector<FgAbelianGroup> target_quotients;
};

LayerChain build_layer_chain(const FgAbelianGroup& source, const FgAbelianGroup& target);

/// Quotient G/p^exp G: each factor order capped at p^exp (trivial factors kept
/// so coordinates line up across layers).
FgAbelianGroup cap_group(const FgAbelianGroup& group, const Int& p, unsigned exp);
/// Natural projection of g into cap_group(g.group, p, exp).
GroupElement cap_element(const GroupElement& g, const Int& p, unsigned exp);
/// Induced map between the capped quotients (same matrix, reduced).
Homomorphism induced_hom(const Homomorphism& phi, const Int& p, unsigned exp);

/// One lifting step for the particular solution: from a solution x of the
/// level exp_from quotient problem and generators of the level kernel
/// preimage, produce a level exp_to solution x - lambda, or nullopt when no
/// lift exists. lambda is found by a homocyclic solve in the generator
/// exponents over p^{exp_from}H / p^{exp_to}H.
std::optional<GroupElement> lift_particular(const Homomorphism& phi, const GroupElement& b,
                                            const GroupElement& x,
                                            const std::vector<GroupElement>& kernel_gens,
                                            unsigned exp_from, unsigned exp_to);

/// One lifting step for the kernel: combinations of the level generators
/// annihilated at level exp_to, together with p^(exp_to - exp_from) times
/// each generator, pruned for redundancy.
std::vector<GroupElement> lift_kernel(const Homomorphism& phi,
                                      const std::vector<GroupElement>& kernel_gens,
                                      unsigned exp_from, unsigned exp_to);

/// Full solver for homomorphisms of abelian p-groups (same prime on both
/// sides): base solve over the first homocyclic quotient, then recursive
/// lifting of the particular solution and the kernel along the layer chain.
SolutionSet solve_p_group_blockwise(const Homomorphism& phi, const GroupElement& b);

/// Membership test b in <gens> inside a finite p-group, by a homocyclic
/// solve in the common frame p^e_max. Returns witness coefficients.
std::optional<Vec> p_group_membership(const std::vector<GroupElement>& gens,
                                      const GroupElement& b);

}  // namespace abelian
