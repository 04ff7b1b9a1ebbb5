#pragma once

#include "abelian/group.hpp"

namespace abelian {

/// Invertible coordinate translation between a presentation and its primary
/// form: every finite factor splits into prime-power factors (Chinese
/// remainder theorem), trivial factors are dropped, factors are sorted by
/// (prime, exponent ascending) and infinite factors go last.
struct PrimaryDecomposition {
  FgAbelianGroup original;
  FgAbelianGroup primary;
  /// For each primary factor: index of the originating factor and its
  /// modulus (the prime power, or 0 for an infinite factor).
  std::vector<std::size_t> source_index;
  std::vector<Int> moduli;

  GroupElement to_primary(const GroupElement& g) const;
  GroupElement from_primary(const GroupElement& g) const;
};

PrimaryDecomposition canonical_primary_form(const FgAbelianGroup& group);

/// Rewrites phi in the primary coordinates of both sides, i.e. the matrix of
/// tgt.to_primary ∘ phi ∘ src.from_primary.
Homomorphism primary_form_hom(const Homomorphism& phi, const PrimaryDecomposition& src,
                              const PrimaryDecomposition& tgt);

}  // namespace abelian
