#pragma once

#include "abelian/group.hpp"

#include <optional>

namespace abelian {

/// Smith normal form L*A*R = D with unimodular L, R and a diagonal D whose
/// positive entries form a divisibility chain d_i | d_{i+1}.
struct SmithDecomposition {
  Matrix left;   // m x m, det ±1
  Matrix diag;   // m x n
  Matrix right;  // n x n, det ±1

  std::size_t rank() const;
  Vec diagonal() const;  // min(m, n) entries
};

SmithDecomposition smith_normal_form(const Matrix& a);

/// Solutions of A*x = b over the integers: a particular vector plus a basis
/// of the kernel lattice, or inconsistent.
struct DiophantineSolution {
  std::optional<Vec> particular;
  std::vector<Vec> kernel;

  bool solvable() const { return particular.has_value(); }
};

DiophantineSolution solve_diophantine(const Matrix& a, const Vec& b);

/// Linear Diophantine embedding of apply_hom(phi, x) = b: one extra column
/// per finite target row carrying that row's modulus, so modular rows become
/// integer equations in the enlarged variable set.
struct DiophantineSystem {
  Matrix matrix;
  Vec rhs;
  std::size_t original_columns = 0;
};

DiophantineSystem embed_torsion_system(const Homomorphism& phi, const GroupElement& b);

enum class SnfStrategy {
  Direct,  // embed the whole system at once
  Hybrid,  // solve the torsion-free block first, substitute its parameters
};

/// Full solver for x^phi = b over finitely generated abelian groups via the
/// Smith normal form. Throws std::invalid_argument on an invalid phi.
SolutionSet solve_fg_via_snf(const Homomorphism& phi, const GroupElement& b,
                             SnfStrategy strategy = SnfStrategy::Direct);

}  // namespace abelian
