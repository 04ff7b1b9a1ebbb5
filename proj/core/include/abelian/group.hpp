#pragma once

#include "abelian/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abelian {

/// Finitely generated abelian group in direct-product form. orders[i] == 0
/// denotes an infinite cyclic factor Z, orders[i] == k > 0 denotes Z_k.
struct FgAbelianGroup {
  std::vector<Int> orders;

  std::size_t rank() const { return orders.size(); }
  bool is_trivial() const { return orders.empty(); }
  bool is_finite() const;
  /// Product of the factor orders; finite groups only.
  Int order() const;
  /// lcm of the finite factor orders (1 for the trivial group).
  Int torsion_exponent() const;
  /// Prime p when every factor is a nontrivial power of p (no infinite
  /// factors, at least one factor); nullopt otherwise.
  std::optional<Int> p_group_prime() const;
  /// (p, ell) when every factor equals the same prime power p^ell.
  std::optional<std::pair<Int, unsigned>> homocyclic_shape() const;

  bool operator==(const FgAbelianGroup&) const = default;
};

/// Group element as a reduced exponent vector relative to the factor orders:
/// 0 <= exponents[i] < orders[i] for finite factors, any integer for Z.
struct GroupElement {
  FgAbelianGroup group;
  Vec exponents;

  bool is_identity() const;
  bool operator==(const GroupElement&) const = default;
};

/// Builds an element from a raw exponent vector, reducing each coordinate.
GroupElement make_element(const FgAbelianGroup& group, Vec raw);
GroupElement identity_element(const FgAbelianGroup& group);
GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupElement& a);
GroupElement subtract(const GroupElement& a, const GroupElement& b);
GroupElement scale(const Int& c, const GroupElement& a);

/// Homomorphism phi: source -> target as an integer matrix A. Column j is
/// the exponent vector of the image of source generator j.
struct Homomorphism {
  FgAbelianGroup source;
  FgAbelianGroup target;
  Matrix matrix;  // target.rank() x source.rank()
};

/// Builds a homomorphism, reducing each matrix row modulo the corresponding
/// target order. Throws on dimension mismatch; does not check validity.
Homomorphism make_homomorphism(FgAbelianGroup source, FgAbelianGroup target, Matrix matrix);

struct HomViolation {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string reason;
};

/// Order-compatibility check: for every column j and row i the target order
/// q_i must divide o_j * a_ij (with "divides by 0" meaning "equals 0").
/// Returns the first violating entry, or nullopt when the matrix represents
/// a well-defined homomorphism.
std::optional<HomViolation> validate_hom(const Homomorphism& phi);

/// Evaluates phi at g (reduced A*g in the target). Throws on group mismatch.
GroupElement apply_hom(const Homomorphism& phi, const GroupElement& g);

/// Outcome of solving apply_hom(phi, x) = b: either inconsistent, or a
/// particular solution plus generators of ker phi.
class SolutionSet {
 public:
  static SolutionSet make_inconsistent() { return SolutionSet(); }
  SolutionSet(GroupElement particular, std::vector<GroupElement> kernel_generators)
      : particular_(std::move(particular)), kernel_(std::move(kernel_generators)) {}

  bool solvable() const { return particular_.has_value(); }
  const GroupElement& particular() const;
  const std::vector<GroupElement>& kernel_generators() const { return kernel_; }

  bool operator==(const SolutionSet&) const = default;

 private:
  SolutionSet() = default;
  std::optional<GroupElement> particular_;
  std::vector<GroupElement> kernel_;
};

/// Drops identity generators and exact duplicates, preserving first
/// occurrence order.
std::vector<GroupElement> dedupe_generators(std::vector<GroupElement> gens);

}  // namespace abelian
