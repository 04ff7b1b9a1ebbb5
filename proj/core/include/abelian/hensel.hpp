#pragma once

#include "abelian/group.hpp"

#include <optional>
#include <utility>

namespace abelian {

/// Endomorphic modular system A*x ≡ b (mod [p^{e_1},...,p^{e_m}]) with
/// ascending exponents. Row i is a congruence modulo p^{e_i}; entry (i,j)
/// and rhs entry i are reduced modulo p^{e_i}.
struct EndoSystem {
  Int p;
  std::vector<unsigned> exponents;
  Matrix matrix;
  Vec rhs;

  FgAbelianGroup group() const;  // Z_{p^{e_1}} x ... x Z_{p^{e_m}}
};

/// Builds a reduced system; throws unless the exponents are ascending and
/// positive and the shapes agree.
EndoSystem make_endo_system(Int p, std::vector<unsigned> exponents, Matrix a, Vec b);

/// The endomorphism divisibility condition p^{e_i - e_min(i,j)} | a_ij.
/// Returns the first violating (i, j), or nullopt when satisfied.
std::optional<std::pair<std::size_t, std::size_t>> check_divisibility(const EndoSystem& system);

/// Affine family xi_0 + t_1 xi_1 + ... + t_r xi_r with coefficients in
/// {0,...,p-1}; coordinate j lives modulo ladder[j]. During lifting the
/// ladder is the mixed modulus [p^{e_1},...,p^{e_{k-1}},p^{l+1},...,p^l].
struct AffineSolutionSpace {
  Int p;
  Vec base;
  std::vector<Vec> basis;
  Vec ladder;

  std::size_t rank() const { return basis.size(); }
  Vec instantiate(const Vec& coeffs) const;
  /// All p^rank instantiations, reduced per the ladder (small ranks only).
  std::vector<Vec> enumerate() const;
};

/// Minimal i with p^i * xi ≡ 0 under the coordinate ladder.
unsigned weight(const Vec& xi, const Vec& ladder, const Int& p);

/// Row-reduced solution of A*x ≡ b (mod p) over the field with p elements:
/// a particular solution plus a nullspace basis. nullopt when inconsistent.
std::optional<AffineSolutionSpace> solve_mod_p(const Matrix& a, const Vec& b, const Int& p);

/// One lifting step for coordinate `coord` from modulus p^ell to p^(ell+1),
/// against a working row (coefficients + right-hand side) whose active
/// entries left of `coord` have been eliminated. A unit corner adjusts the
/// family in place; a singular corner either appends the free direction
/// p^ell*e_coord, eliminates one basis vector first, or reports nullopt when
/// the lifting condition is unsatisfiable.
std::optional<AffineSolutionSpace> hensel_step(AffineSolutionSpace space, const Vec& row,
                                               const Int& rhs, std::size_t coord, unsigned ell);

struct HenselOptions {
  /// After each level, substitute every instantiation back into the system
  /// (only when the family has at most 64 members).
  bool verify_levels = false;
};

struct HenselStats {
  std::size_t initial_rank = 0;
  std::size_t unique_lifts = 0;
  std::size_t trivial_conditions = 0;     // free direction appended, basis kept
  std::size_t restricted_conditions = 0;  // one basis vector eliminated
  std::size_t final_rank = 0;
};

/// Whole-space Hensel lifting: solve modulo p, then sweep levels
/// l = 2,...,e_m, echelonizing the active sub-matrix and lifting coordinates
/// from the bottom up. Requires check_divisibility to pass.
SolutionSet solve_endomorphic(const EndoSystem& system, const HenselOptions& options = {},
                              HenselStats* stats = nullptr);

/// Decides b in <generators> inside a finite p-group; returns witness
/// coefficients x with sum x_j g_j = b, or nullopt (not a member).
std::optional<Vec> solve_membership(const std::vector<GroupElement>& generators,
                                    const GroupElement& b, const HenselOptions& options = {});

/// Inverse of an automorphism of a finite p-group, built column-wise by
/// solving for each standard generator. Throws std::invalid_argument when
/// phi is not an automorphism.
Homomorphism invert_automorphism(const Homomorphism& phi, const HenselOptions& options = {});

/// Solver for arbitrary homomorphisms of abelian p-groups via the Hensel
/// machinery: endomorphic systems keep their mixed ladder, anything else is
/// embedded into a common homocyclic frame and projected back.
SolutionSet solve_p_group_hom_hensel(const Homomorphism& phi, const GroupElement& b,
                                     const HenselOptions& options = {},
                                     HenselStats* stats = nullptr);

}  // namespace abelian
