#include "abelian/modular_snf.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace abelian {

unsigned p_valuation(const Int& n, const Int& p, unsigned cap) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("p_valuation: p must be prime");
  Int q = pow_ui(p, cap);
  Int r = mod_reduce(n, q);
  if (r == 0) return cap;
  unsigned v = 0;
  while (divides(p, r)) {
    r = exact_div(r, p);
    ++v;
  }
  return v;
}

std::size_t ModularSmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t k = std::min(diag.rows(), diag.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (diag(i, i) != 0) ++r;
  return r;
}

std::vector<unsigned> ModularSmithDecomposition::valuations() const {
  std::vector<unsigned> v;
  const std::size_t k = std::min(diag.rows(), diag.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (diag(i, i) != 0) v.push_back(p_valuation(diag(i, i), p, ell));
  return v;
}

namespace {

struct Elimination {
  Matrix work;                  // diagonalized copy of A mod q
  Matrix right;                 // accumulated column operations
  std::optional<Matrix> left;   // row operations, when materialized
  Vec rhs;                      // row-transformed right-hand side
  std::vector<unsigned> pivot_valuations;
};

// Shared row-echelon core. Row operations are applied to `rhs` directly;
// L is only materialized on request.
Elimination eliminate(const Matrix& a, const Int& p, unsigned ell, const Vec* b, bool want_left) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("modular elimination: p must be prime");
  if (ell < 1) throw std::invalid_argument("modular elimination: ell must be >= 1");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const Int q = pow_ui(p, ell);

  Elimination e;
  e.work = a;
  e.work.reduce_mod(q);
  e.right = Matrix::identity(n);
  if (want_left) e.left = Matrix::identity(m);
  if (b) {
    if (b->size() != m) throw std::invalid_argument("modular elimination: rhs size mismatch");
    e.rhs = *b;
    for (auto& x : e.rhs) x = mod_reduce(x, q);
  }

  Matrix& w = e.work;
  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    // global minimal-valuation pivot, ties lexicographic by (row, column)
    unsigned best = ell;
    std::size_t pi = t;
    std::size_t pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (w(i, j) == 0) continue;
        const unsigned v = p_valuation(w(i, j), p, ell);
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == ell) break;  // residual matrix vanishes mod p^ell

    w.swap_rows(t, pi);
    if (e.left) e.left->swap_rows(t, pi);
    if (b) std::swap(e.rhs[t], e.rhs[pi]);
    w.swap_cols(t, pj);
    e.right.swap_cols(t, pj);

    const Int pv = pow_ui(p, best);
    const Int unit = exact_div(w(t, t), pv);
    const Int alpha = invert_mod(unit, q);
    w.scale_row(t, alpha);
    w.reduce_row_mod(t, q);
    if (e.left) {
      e.left->scale_row(t, alpha);
      e.left->reduce_row_mod(t, q);
    }
    if (b) e.rhs[t] = mod_reduce(e.rhs[t] * alpha, q);
    internal_check(w(t, t) == mod_reduce(pv, q), "modular pivot not normalized");

    for (std::size_t i = t + 1; i < m; ++i) {
      if (w(i, t) == 0) continue;
      const Int c = exact_div(w(i, t), pv);  // every entry is divisible by the pivot valuation
      w.add_row_multiple(i, t, -c);
      w.reduce_row_mod(i, q);
      if (e.left) {
        e.left->add_row_multiple(i, t, -c);
        e.left->reduce_row_mod(i, q);
      }
      if (b) e.rhs[i] = mod_reduce(e.rhs[i] - c * e.rhs[t], q);
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (w(t, j) == 0) continue;
      const Int c = exact_div(w(t, j), pv);
      w.add_col_multiple(j, t, -c);
      e.right.add_col_multiple(j, t, -c);
      for (std::size_t i = 0; i < m; ++i) w(i, j) = mod_reduce(w(i, j), q);
      for (std::size_t i = 0; i < n; ++i) e.right(i, j) = mod_reduce(e.right(i, j), q);
    }
    e.pivot_valuations.push_back(best);
  }

  // global-minimum pivoting leaves the valuations ascending
  for (std::size_t i = 1; i < e.pivot_valuations.size(); ++i)
    internal_check(e.pivot_valuations[i - 1] <= e.pivot_valuations[i],
                   "modular pivot valuations not ascending");
  return e;
}

}  // namespace

ModularSmithDecomposition modular_snf(const Matrix& a, const Int& p, unsigned ell) {
  Elimination e = eliminate(a, p, ell, nullptr, true);
  ModularSmithDecomposition dec;
  dec.p = p;
  dec.ell = ell;
  dec.left = std::move(*e.left);
  dec.diag = std::move(e.work);
  dec.right = std::move(e.right);
  return dec;
}

SolutionSet solve_homocyclic(const Matrix& a, const Vec& b, const Int& p, unsigned ell,
                             const HomocyclicOptions& options) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const Int q = pow_ui(p, ell);

  Elimination e = eliminate(a, p, ell, &b, options.materialize_left);
  if (options.materialize_left) {
    Vec check = e.left->apply(b);
    for (std::size_t i = 0; i < m; ++i)
      internal_check(mod_reduce(check[i], q) == e.rhs[i],
                     "materialized L disagrees with direct row operations");
  }

  const std::size_t k = e.pivot_valuations.size();
  Vec y(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < k) {
      const unsigned v = e.pivot_valuations[i];
      if (p_valuation(e.rhs[i], p, ell) < v) return SolutionSet::make_inconsistent();
      y[i] = exact_div(e.rhs[i], pow_ui(p, v));
    } else if (e.rhs[i] != 0) {
      return SolutionSet::make_inconsistent();
    }
  }

  FgAbelianGroup domain;
  domain.orders.assign(n, q);
  GroupElement particular = make_element(domain, e.right.apply(y));

  std::vector<GroupElement> gens;
  for (std::size_t j = 0; j < n; ++j) {
    const unsigned v = j < k ? e.pivot_valuations[j] : 0u;
    // column j is free modulo p^(ell - v); v == 0 pivots are uniquely determined
    if (j < k && v == 0) continue;
    const Int step = j < k ? pow_ui(p, ell - v) : Int(1);
    Vec dir(n);
    dir[j] = step;
    gens.push_back(make_element(domain, e.right.apply(dir)));
  }
  return SolutionSet(std::move(particular), dedupe_generators(std::move(gens)));
}

ScaledSystem scale_rows_to_exponent(const FgAbelianGroup& target, const Matrix& m, const Vec& rhs,
                                    const Int& p, unsigned exp) {
  if (m.rows() != target.rank() || rhs.size() != target.rank())
    throw std::invalid_argument("scale_rows_to_exponent: shape mismatch");
  const Int q = pow_ui(p, exp);
  ScaledSystem out{m, rhs};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Int& o = target.orders[i];
    internal_check(o > 0 && divides(o, q), "scale_rows_to_exponent: row order does not divide p^exp");
    const Int factor = exact_div(q, o);
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.matrix(i, j) = mod_reduce(out.matrix(i, j) * factor, q);
    out.rhs[i] = mod_reduce(out.rhs[i] * factor, q);
  }
  return out;
}

}  // namespace abelian
