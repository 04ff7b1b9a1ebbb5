#include "abelian/primary.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace abelian {

PrimaryDecomposition canonical_primary_form(const FgAbelianGroup& group) {
  struct Factor {
    Int prime;      // 0 for infinite factors
    unsigned exp;   // prime exponent
    Int modulus;    // prime^exp, or 0
    std::size_t src;
  };
  std::vector<Factor> factors;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    const Int& o = group.orders[i];
    if (o < 0) throw std::invalid_argument("canonical_primary_form: negative order");
    if (o == 0) {
      factors.push_back({0, 0, 0, i});
    } else if (o == 1) {
      // trivial factor, dropped
    } else {
      for (const auto& [p, e] : factorize(o)) factors.push_back({p, e, pow_ui(p, e), i});
    }
  }
  std::stable_sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
    // finite before infinite, then by (prime, exponent)
    if ((a.prime == 0) != (b.prime == 0)) return b.prime == 0;
    return std::tie(a.prime, a.exp) < std::tie(b.prime, b.exp);
  });

  PrimaryDecomposition dec;
  dec.original = group;
  for (const auto& f : factors) {
    dec.primary.orders.push_back(f.modulus);
    dec.source_index.push_back(f.src);
    dec.moduli.push_back(f.modulus);
  }
  return dec;
}

GroupElement PrimaryDecomposition::to_primary(const GroupElement& g) const {
  if (g.group != original) throw std::invalid_argument("to_primary: group mismatch");
  Vec out(primary.rank());
  for (std::size_t j = 0; j < primary.rank(); ++j)
    out[j] = mod_reduce(g.exponents[source_index[j]], moduli[j]);
  return GroupElement{primary, std::move(out)};
}

GroupElement PrimaryDecomposition::from_primary(const GroupElement& g) const {
  if (g.group != primary) throw std::invalid_argument("from_primary: group mismatch");
  Vec out(original.rank());
  std::vector<Int> combined_mod(original.rank(), 1);
  for (std::size_t j = 0; j < primary.rank(); ++j) {
    const std::size_t i = source_index[j];
    if (moduli[j] == 0) {
      out[i] = g.exponents[j];
      continue;
    }
    // incremental CRT: out[i] ≡ previous residues, extend by moduli[j]
    Int& x = out[i];
    Int& m = combined_mod[i];
    const Int delta = mod_reduce(g.exponents[j] - x, moduli[j]);
    x += m * mod_reduce(delta * invert_mod(m, moduli[j]), moduli[j]);
    m *= moduli[j];
  }
  return make_element(original, std::move(out));
}

Homomorphism primary_form_hom(const Homomorphism& phi, const PrimaryDecomposition& src,
                              const PrimaryDecomposition& tgt) {
  if (src.original != phi.source || tgt.original != phi.target)
    throw std::invalid_argument("primary_form_hom: decomposition does not match homomorphism");
  Matrix m(tgt.primary.rank(), src.primary.rank());
  for (std::size_t j = 0; j < src.primary.rank(); ++j) {
    Vec unit(src.primary.rank());
    unit[j] = 1;
    const GroupElement gen = src.from_primary(GroupElement{src.primary, std::move(unit)});
    const GroupElement image = tgt.to_primary(apply_hom(phi, gen));
    for (std::size_t i = 0; i < tgt.primary.rank(); ++i) m(i, j) = image.exponents[i];
  }
  return make_homomorphism(src.primary, tgt.primary, std::move(m));
}

}  // namespace abelian
