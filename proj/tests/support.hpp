#pragma once

// Shared helpers for the test suites: seeded randomness and problem
// construction shortcuts.

#include "abelian/bench.hpp"
#include "abelian/group.hpp"
#include "abelian/oracle.hpp"
#include "abelian/subgroup.hpp"

#include <random>
#include <set>

namespace testsupport {

using namespace abelian;

inline FgAbelianGroup group(std::initializer_list<long> orders) {
  FgAbelianGroup g;
  for (long o : orders) g.orders.push_back(o);
  return g;
}

inline GroupElement elem(const FgAbelianGroup& g, std::initializer_list<long> exps) {
  Vec v;
  for (long e : exps) v.push_back(e);
  return make_element(g, std::move(v));
}

inline Homomorphism hom(std::initializer_list<long> source, std::initializer_list<long> target,
                        std::initializer_list<Int> entries) {
  FgAbelianGroup s = group(source);
  FgAbelianGroup t = group(target);
  Matrix m(t.rank(), s.rank(), entries);
  return make_homomorphism(std::move(s), std::move(t), std::move(m));
}

inline std::set<Vec> kernel_set(const OracleResult& oracle) {
  std::set<Vec> out;
  for (const auto& e : oracle.kernel_elements) out.insert(e.exponents);
  return out;
}

/// Checks a claimed solution against oracle ground truth: same verdict, a
/// verifying particular, and the same kernel subgroup as a set.
inline bool matches_oracle(const Homomorphism& phi, const GroupElement& b,
                           const SolutionSet& claimed, const OracleResult& oracle) {
  if (claimed.solvable() != oracle.solution.solvable()) return false;
  if (!claimed.solvable()) return true;
  if (apply_hom(phi, claimed.particular()) != b) return false;
  return enumerate_subgroup(phi.source, claimed.kernel_generators()) == kernel_set(oracle);
}

/// Random f.g. abelian problems, optionally with infinite factors. Matrices
/// are always valid homomorphisms.
struct RandomProblemGen {
  std::mt19937_64 rng;
  std::vector<unsigned> primes = {2, 3, 5};
  unsigned max_rank = 3;
  unsigned max_exp = 2;
  unsigned infinite_percent = 0;  // chance per factor of being Z
  long max_order = 256;

  explicit RandomProblemGen(std::uint64_t seed) : rng(seed) {}

  FgAbelianGroup random_group() {
    const unsigned rank = 1 + static_cast<unsigned>(uniform_below(rng, max_rank));
    FgAbelianGroup g;
    Int total = 1;
    for (unsigned i = 0; i < rank; ++i) {
      if (infinite_percent > 0 && uniform_below(rng, 100) < infinite_percent) {
        g.orders.push_back(0);
        continue;
      }
      const Int p = primes[uniform_below(rng, primes.size())];
      unsigned e = 1 + static_cast<unsigned>(uniform_below(rng, max_exp));
      while (e > 0 && total * pow_ui(p, e) > max_order) --e;
      if (e == 0) continue;
      g.orders.push_back(pow_ui(p, e));
      total *= g.orders.back();
    }
    if (g.orders.empty()) g.orders.push_back(2);
    return g;
  }

  Int below(const Int& n) {
    if (n == 0) return Int(static_cast<long>(uniform_below(rng, 41)) - 20);
    return Int(static_cast<unsigned long>(uniform_below(rng, n.get_ui())));
  }

  Homomorphism random_hom(const FgAbelianGroup& source, const FgAbelianGroup& target) {
    Matrix m(target.rank(), source.rank());
    for (std::size_t i = 0; i < target.rank(); ++i)
      for (std::size_t j = 0; j < source.rank(); ++j) {
        const Int& q = target.orders[i];
        const Int& o = source.orders[j];
        if (o == 0) {
          m(i, j) = below(q);  // infinite-order generator is unconstrained
        } else if (q == 0) {
          m(i, j) = 0;  // finite order cannot map to a nonzero element of Z
        } else {
          const Int g = gcd(q, o);
          m(i, j) = exact_div(q, g) * below(g);
        }
      }
    return make_homomorphism(source, target, std::move(m));
  }

  GroupElement random_element(const FgAbelianGroup& g) {
    Vec v(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) v[i] = below(g.orders[i]);
    return make_element(g, std::move(v));
  }

  /// Half the time the rhs is forced into the image.
  std::pair<Homomorphism, GroupElement> random_problem() {
    const FgAbelianGroup src = random_group();
    const FgAbelianGroup tgt = random_group();
    Homomorphism phi = random_hom(src, tgt);
    GroupElement b = uniform_below(rng, 2) == 0 ? apply_hom(phi, random_element(src))
                                                : random_element(tgt);
    return {std::move(phi), std::move(b)};
  }
};

}  // namespace testsupport
