#include "abelian/sylow.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace abelian {

namespace {

struct PrimePower {
  Int prime;       // 0 for infinite factors
  unsigned exp = 0;
};

PrimePower prime_power_of(const Int& order, const char* who) {
  if (order == 0) return {0, 0};
  const auto f = factorize(order);
  if (f.size() != 1)
    throw std::invalid_argument(std::string(who) + ": group is not in primary form");
  return {f[0].first, f[0].second};
}

}  // namespace

SylowSplit sylow_split(const Homomorphism& phi, const GroupElement& b) {
  if (b.group != phi.target) throw std::invalid_argument("sylow_split: group mismatch");
  if (auto v = validate_hom(phi))
    throw std::invalid_argument("sylow_split: invalid homomorphism");

  SylowSplit split;
  split.source = phi.source;
  split.target = phi.target;

  std::vector<PrimePower> src_pp, tgt_pp;
  for (const auto& o : phi.source.orders) src_pp.push_back(prime_power_of(o, "sylow_split"));
  for (const auto& o : phi.target.orders) tgt_pp.push_back(prime_power_of(o, "sylow_split"));

  for (std::size_t j = 0; j < src_pp.size(); ++j)
    if (src_pp[j].prime == 0) split.free_cols.push_back(j);
  for (std::size_t i = 0; i < tgt_pp.size(); ++i)
    if (tgt_pp[i].prime == 0) split.free_rows.push_back(i);

  split.free_matrix = Matrix(split.free_rows.size(), split.free_cols.size());
  split.free_rhs.resize(split.free_rows.size());
  for (std::size_t r = 0; r < split.free_rows.size(); ++r) {
    for (std::size_t c = 0; c < split.free_cols.size(); ++c)
      split.free_matrix(r, c) = phi.matrix(split.free_rows[r], split.free_cols[c]);
    split.free_rhs[r] = b.exponents[split.free_rows[r]];
  }

  std::map<Int, std::size_t> block_of;  // ordered by prime
  for (const auto& pp : src_pp)
    if (pp.prime != 0) block_of.emplace(pp.prime, 0);
  for (const auto& pp : tgt_pp)
    if (pp.prime != 0) block_of.emplace(pp.prime, 0);

  for (auto& [prime, index] : block_of) {
    index = split.blocks.size();
    SylowSplit::PrimeBlock block;
    block.prime = prime;
    for (std::size_t i = 0; i < tgt_pp.size(); ++i)
      if (tgt_pp[i].prime == prime) {
        block.target_rows.push_back(i);
        block.target_exponent = std::max(block.target_exponent, tgt_pp[i].exp);
      }
    for (std::size_t j = 0; j < src_pp.size(); ++j)
      if (src_pp[j].prime == prime) block.source_cols.push_back(j);
    block.torsion_col_count = block.source_cols.size();
    if (block.target_exponent > 0)  // a mod-1 residue carries nothing
      for (std::size_t j : split.free_cols) block.source_cols.push_back(j);

    FgAbelianGroup bsource, btarget;
    const Int free_order = pow_ui(prime, block.target_exponent);
    for (std::size_t c = 0; c < block.source_cols.size(); ++c)
      bsource.orders.push_back(c < block.torsion_col_count
                                   ? phi.source.orders[block.source_cols[c]]
                                   : free_order);
    for (std::size_t i : block.target_rows) btarget.orders.push_back(phi.target.orders[i]);

    Matrix m(block.target_rows.size(), block.source_cols.size());
    Vec rhs(block.target_rows.size());
    for (std::size_t r = 0; r < block.target_rows.size(); ++r) {
      for (std::size_t c = 0; c < block.source_cols.size(); ++c)
        m(r, c) = phi.matrix(block.target_rows[r], block.source_cols[c]);
      rhs[r] = b.exponents[block.target_rows[r]];
    }
    block.hom = make_homomorphism(std::move(bsource), btarget, std::move(m));
    block.rhs = make_element(btarget, std::move(rhs));
    split.blocks.push_back(std::move(block));
  }
  return split;
}

DiophantineSolution solve_free_block(const SylowSplit& split) {
  return solve_diophantine(split.free_matrix, split.free_rhs);
}

SolutionSet crt_recombine(const SylowSplit& split, const DiophantineSolution& free_part,
                          const std::vector<SolutionSet>& prime_parts) {
  if (prime_parts.size() != split.blocks.size())
    throw std::invalid_argument("crt_recombine: mismatched part list");
  if (!free_part.solvable()) return SolutionSet::make_inconsistent();
  if (free_part.particular->size() != split.free_cols.size())
    throw std::invalid_argument("crt_recombine: free part does not match split");
  for (std::size_t bi = 0; bi < split.blocks.size(); ++bi) {
    if (!prime_parts[bi].solvable()) return SolutionSet::make_inconsistent();
    if (prime_parts[bi].particular().group != split.blocks[bi].hom.source)
      throw std::invalid_argument("crt_recombine: mismatched part list");
  }

  // unknowns: the free-block parameters u, then each block's kernel
  // coefficients t; shared free columns give one congruence per (block,
  // free column) pair, modulo that block's p^E
  const std::size_t nu = free_part.kernel.size();
  std::vector<std::size_t> t_offset(split.blocks.size());
  std::size_t nz = nu;
  for (std::size_t bi = 0; bi < split.blocks.size(); ++bi) {
    t_offset[bi] = nz;
    nz += prime_parts[bi].kernel_generators().size();
  }

  struct Equation {
    Vec coeffs;
    Int rhs;
    Int modulus;
  };
  std::vector<Equation> equations;
  for (std::size_t bi = 0; bi < split.blocks.size(); ++bi) {
    const auto& block = split.blocks[bi];
    const auto& part = prime_parts[bi];
    if (block.target_exponent == 0) continue;
    const Int modulus = pow_ui(block.prime, block.target_exponent);
    for (std::size_t l = block.torsion_col_count; l < block.source_cols.size(); ++l) {
      const std::size_t fi = l - block.torsion_col_count;
      Equation eq;
      eq.coeffs.assign(nz, 0);
      for (std::size_t k = 0; k < nu; ++k) eq.coeffs[k] = free_part.kernel[k][fi];
      const auto& gens = part.kernel_generators();
      for (std::size_t t = 0; t < gens.size(); ++t)
        eq.coeffs[t_offset[bi] + t] = -gens[t].exponents[l];
      eq.rhs = part.particular().exponents[l] - (*free_part.particular)[fi];
      eq.modulus = modulus;
      equations.push_back(std::move(eq));
    }
  }

  Matrix merge(equations.size(), nz + equations.size());
  Vec merge_rhs(equations.size());
  for (std::size_t r = 0; r < equations.size(); ++r) {
    for (std::size_t c = 0; c < nz; ++c) merge(r, c) = equations[r].coeffs[c];
    merge(r, nz + r) = equations[r].modulus;
    merge_rhs[r] = equations[r].rhs;
  }
  const DiophantineSolution merged = solve_diophantine(merge, merge_rhs);
  if (!merged.solvable()) return SolutionSet::make_inconsistent();

  auto assemble = [&](const Vec& z, bool homogeneous) {
    Vec x(split.source.rank(), 0);
    for (std::size_t bi = 0; bi < split.blocks.size(); ++bi) {
      const auto& block = split.blocks[bi];
      const auto& part = prime_parts[bi];
      GroupElement bvec = homogeneous ? identity_element(block.hom.source)
                                      : part.particular();
      const auto& gens = part.kernel_generators();
      for (std::size_t t = 0; t < gens.size(); ++t)
        bvec = add(bvec, scale(z[t_offset[bi] + t], gens[t]));
      for (std::size_t l = 0; l < block.torsion_col_count; ++l)
        x[block.source_cols[l]] = bvec.exponents[l];
    }
    for (std::size_t fi = 0; fi < split.free_cols.size(); ++fi) {
      Int v = homogeneous ? Int(0) : (*free_part.particular)[fi];
      for (std::size_t k = 0; k < nu; ++k) v += free_part.kernel[k][fi] * z[k];
      x[split.free_cols[fi]] = v;
    }
    return make_element(split.source, std::move(x));
  };

  GroupElement particular = assemble(*merged.particular, false);
  std::vector<GroupElement> gens;
  gens.reserve(merged.kernel.size());
  for (const auto& z : merged.kernel) gens.push_back(assemble(z, true));
  return SolutionSet(std::move(particular), dedupe_generators(std::move(gens)));
}

}  // namespace abelian
