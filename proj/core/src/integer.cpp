#include "abelian/integer.hpp"

namespace abelian {

bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  if (n <= 0) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<Int, unsigned>> factors;
  auto strip = [&](const Int& p) {
    unsigned mult = 0;
    while (divides(p, n)) {
      n = exact_div(n, p);
      ++mult;
    }
    if (mult > 0) factors.emplace_back(p, mult);
  };
  strip(2);
  for (Int p = 3; p * p <= n; p += 2) strip(p);
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

}  // namespace abelian
