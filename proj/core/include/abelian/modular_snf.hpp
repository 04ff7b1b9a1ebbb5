#pragma once

#include "abelian/group.hpp"

namespace abelian {

/// Largest v <= cap with p^v | n; returns cap when n ≡ 0 mod p^cap
/// (so the valuation of 0 is the cap itself).
unsigned p_valuation(const Int& n, const Int& p, unsigned cap);

/// Diagonalization L*A*R ≡ D (mod p^ell) with L, R invertible mod p^ell and
/// D = diag(d_1,...,d_k,0,...,0), the d_i powers of p with d_i | d_{i+1}.
/// A zero diagonal entry stands for p^ell ≡ 0.
struct ModularSmithDecomposition {
  Int p;
  unsigned ell = 1;
  Matrix left;   // m x m, det coprime to p
  Matrix diag;   // m x n
  Matrix right;  // n x n, det coprime to p

  std::size_t rank() const;                 // number of nonzero diagonal entries
  std::vector<unsigned> valuations() const; // per nonzero diagonal entry
};

/// Constructive diagonalization over Z_{p^ell}: global minimal-valuation
/// pivot (ties by row then column), row scaled by the inverse of the pivot's
/// unit part, then row/column clearing and recursion on the submatrix.
ModularSmithDecomposition modular_snf(const Matrix& a, const Int& p, unsigned ell);

struct HomocyclicOptions {
  /// Materialize L and cross-check it against the row operations applied
  /// directly to the right-hand side.
  bool materialize_left = false;
};

/// All solutions of A*x ≡ b (mod p^ell) over the homocyclic group
/// (Z_{p^ell})^n, as a SolutionSet over that group.
SolutionSet solve_homocyclic(const Matrix& a, const Vec& b, const Int& p, unsigned ell,
                             const HomocyclicOptions& options = {});

/// Rescales the mixed-modulus system of a p-group target to the single
/// modulus p^exp: row i is multiplied by p^(exp - f_i). Used to embed
/// arbitrary p-group problems into a homocyclic frame.
struct ScaledSystem {
  Matrix matrix;
  Vec rhs;
};
ScaledSystem scale_rows_to_exponent(const FgAbelianGroup& target, const Matrix& m, const Vec& rhs,
                                    const Int& p, unsigned exp);

}  // namespace abelian
