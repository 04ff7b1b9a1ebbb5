#pragma once

#include "abelian/group.hpp"
#include "abelian/snf.hpp"

namespace abelian {

/// Decomposition of a primary-form problem into one torsion-free block plus
/// one block per prime. A free source column enters every prime block whose
/// target part is nontrivial, reduced modulo that part's exponent p^E and
/// flagged free; its residues are recombined by the Chinese remainder
/// theorem.
struct SylowSplit {
  FgAbelianGroup source;
  FgAbelianGroup target;

  /// Torsion-free block: infinite target rows over infinite source columns.
  Matrix free_matrix;
  Vec free_rhs;
  std::vector<std::size_t> free_cols;
  std::vector<std::size_t> free_rows;

  struct PrimeBlock {
    Int prime;
    unsigned target_exponent = 0;  // E with p^E the exponent of the target p-part
    Homomorphism hom;
    GroupElement rhs;
    /// Source column provenance: torsion columns first, then the free
    /// columns (flagged by index >= torsion_col_count).
    std::vector<std::size_t> source_cols;
    std::size_t torsion_col_count = 0;
    std::vector<std::size_t> target_rows;
  };
  std::vector<PrimeBlock> blocks;
};

/// Splits a valid problem over primary-form groups. Throws when a finite
/// order is not a prime power.
SylowSplit sylow_split(const Homomorphism& phi, const GroupElement& b);

/// Convenience: solves the split's torsion-free block.
DiophantineSolution solve_free_block(const SylowSplit& split);

/// Merges per-part solutions back into a SolutionSet over the split's source
/// group. Inconsistent as soon as any part is inconsistent; when free columns
/// couple the free block with prime blocks, the shared coordinates are
/// reconciled by one auxiliary congruence solve.
SolutionSet crt_recombine(const SylowSplit& split, const DiophantineSolution& free_part,
                          const std::vector<SolutionSet>& prime_parts);

}  // namespace abelian
