#include "abelian/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace abelian {

bool FgAbelianGroup::is_finite() const {
  return std::none_of(orders.begin(), orders.end(), [](const Int& o) { return o == 0; });
}

Int FgAbelianGroup::order() const {
  Int n = 1;
  for (const auto& o : orders) {
    if (o == 0) throw std::invalid_argument("FgAbelianGroup::order: group is infinite");
    n *= o;
  }
  return n;
}

Int FgAbelianGroup::torsion_exponent() const {
  Int e = 1;
  for (const auto& o : orders)
    if (o > 0) e = lcm(e, o);
  return e;
}

std::optional<Int> FgAbelianGroup::p_group_prime() const {
  if (orders.empty()) return std::nullopt;
  std::optional<Int> prime;
  for (const auto& o : orders) {
    if (o <= 1) return std::nullopt;
    auto f = factorize(o);
    if (f.size() != 1) return std::nullopt;
    if (prime && *prime != f[0].first) return std::nullopt;
    prime = f[0].first;
  }
  return prime;
}

std::optional<std::pair<Int, unsigned>> FgAbelianGroup::homocyclic_shape() const {
  if (orders.empty()) return std::nullopt;
  for (const auto& o : orders)
    if (o != orders.front()) return std::nullopt;
  auto f = factorize(orders.front() > 1 ? orders.front() : Int(0));
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f[0].first, f[0].second);
}

bool GroupElement::is_identity() const {
  return std::all_of(exponents.begin(), exponents.end(), [](const Int& e) { return e == 0; });
}

GroupElement make_element(const FgAbelianGroup& group, Vec raw) {
  if (raw.size() != group.rank())
    throw std::invalid_argument("make_element: exponent count does not match group rank");
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = mod_reduce(raw[i], group.orders[i]);
  return GroupElement{group, std::move(raw)};
}

GroupElement identity_element(const FgAbelianGroup& group) {
  return GroupElement{group, Vec(group.rank())};
}

static void require_same_group(const GroupElement& a, const GroupElement& b, const char* op) {
  if (a.group != b.group) throw std::invalid_argument(std::string(op) + ": group mismatch");
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b, "add");
  return make_element(a.group, add(a.exponents, b.exponents));
}

GroupElement negate(const GroupElement& a) {
  return make_element(a.group, scaled(-1, a.exponents));
}

GroupElement subtract(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b, "subtract");
  return add(a, negate(b));
}

GroupElement scale(const Int& c, const GroupElement& a) {
  return make_element(a.group, scaled(c, a.exponents));
}

Homomorphism make_homomorphism(FgAbelianGroup source, FgAbelianGroup target, Matrix matrix) {
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
    throw std::invalid_argument("make_homomorphism: matrix shape does not match group ranks");
  for (std::size_t i = 0; i < matrix.rows(); ++i) matrix.reduce_row_mod(i, target.orders[i]);
  return Homomorphism{std::move(source), std::move(target), std::move(matrix)};
}

std::optional<HomViolation> validate_hom(const Homomorphism& phi) {
  if (phi.matrix.rows() != phi.target.rank() || phi.matrix.cols() != phi.source.rank())
    throw std::invalid_argument("validate_hom: matrix shape does not match group ranks");
  for (std::size_t j = 0; j < phi.source.rank(); ++j) {
    const Int& o = phi.source.orders[j];
    if (o == 0) continue;  // infinite-order generator is unconstrained
    for (std::size_t i = 0; i < phi.target.rank(); ++i) {
      const Int& q = phi.target.orders[i];
      const Int image = o * phi.matrix(i, j);
      if (!divides(q, image)) {
        std::string reason = "order of image must divide order of generator: " + o.get_str() +
                             "*" + phi.matrix(i, j).get_str() + " is not 0 mod " + q.get_str();
        return HomViolation{i, j, std::move(reason)};
      }
    }
  }
  return std::nullopt;
}

GroupElement apply_hom(const Homomorphism& phi, const GroupElement& g) {
  if (g.group != phi.source) throw std::invalid_argument("apply_hom: group mismatch");
  return make_element(phi.target, phi.matrix.apply(g.exponents));
}

const GroupElement& SolutionSet::particular() const {
  if (!particular_) throw std::logic_error("SolutionSet::particular: inconsistent system");
  return *particular_;
}

std::vector<GroupElement> dedupe_generators(std::vector<GroupElement> gens) {
  std::vector<GroupElement> out;
  std::set<Vec> seen;
  for (auto& g : gens) {
    if (g.is_identity()) continue;
    if (seen.insert(g.exponents).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace abelian
