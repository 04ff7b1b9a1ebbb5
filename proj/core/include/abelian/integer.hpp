#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abelian {

/// Unbounded signed integer. All arithmetic in this library is exact.
using Int = mpz_class;

/// Checks an internal arithmetic invariant; active in all build types.
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

/// x mod m in [0, m) for m > 0; x itself for m == 0 (integer convention).
inline Int mod_reduce(const Int& x, const Int& m) {
  if (m == 0) return x;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int pow_ui(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient a / d; throws when d does not divide a.
inline Int exact_div(const Int& a, const Int& d) {
  internal_check(d != 0 && divides(d, a), "exact_div: not divisible");
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

/// Inverse of a modulo m (m > 1); throws when gcd(a, m) != 1.
inline Int invert_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::invalid_argument("invert_mod: element not invertible");
  return r;
}

bool is_prime(const Int& n);

/// Prime factorization by trial division, (prime, multiplicity) pairs in
/// ascending prime order. Intended for group orders at desk scale.
std::vector<std::pair<Int, unsigned>> factorize(Int n);

}  // namespace abelian
