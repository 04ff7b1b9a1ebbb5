#pragma once

#include "abelian/group.hpp"
#include "abelian/strategy.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace abelian {

/// Unbiased draw from {0, ..., n-1}; deterministic for a fixed engine state
/// (no reliance on distribution implementations).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Seeded random-instance profile. The same seed and shape produce the same
/// instance sequence, byte for byte.
struct BenchProfile {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<unsigned> primes = {2, 3};
  unsigned max_rank = 3;
  unsigned max_exp = 2;
  std::vector<Strategy> strategies = {Strategy::Snf, Strategy::Block, Strategy::Hensel,
                                      Strategy::Auto, Strategy::Oracle};
  Int oracle_budget = 4096;
};

struct ProblemInstance {
  Homomorphism hom;
  GroupElement rhs;
};

/// Finite random problems: group orders stay within the oracle budget, every
/// matrix is a valid homomorphism, and roughly half the right-hand sides are
/// forced into the image.
std::vector<ProblemInstance> generate_instances(const BenchProfile& profile);

struct BenchRow {
  Strategy strategy;
  std::size_t instances = 0;
  std::size_t solvable = 0;
  std::size_t inconsistent = 0;
  std::size_t agree_oracle = 0;
  double total_ms = 0.0;
  double median_ms = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  /// schema: strategy,instances,solvable,inconsistent,agree_oracle,total_ms,median_ms
  std::string to_csv() const;
  std::string to_table() const;
};

BenchReport run_bench(const BenchProfile& profile);

}  // namespace abelian
