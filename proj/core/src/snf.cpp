#include "abelian/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace abelian {

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t k = std::min(diag.rows(), diag.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (diag(i, i) != 0) ++r;
  return r;
}

Vec SmithDecomposition::diagonal() const {
  const std::size_t k = std::min(diag.rows(), diag.cols());
  Vec d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = diag(i, i);
  return d;
}

namespace {

// Nonzero entry of minimal absolute value in the trailing submatrix;
// ties broken by smallest row, then column index.
bool find_pivot(const Matrix& w, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < w.rows(); ++i)
    for (std::size_t j = t; j < w.cols(); ++j) {
      if (w(i, j) == 0) continue;
      Int a = abs(w(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

Int trunc_quotient(const Int& a, const Int& d) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition dec{Matrix::identity(m), a, Matrix::identity(n)};
  Matrix& left = dec.left;
  Matrix& w = dec.diag;
  Matrix& right = dec.right;

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = t;
    std::size_t pj = t;
    if (!find_pivot(w, t, pi, pj)) break;  // trailing submatrix is zero
    w.swap_rows(t, pi);
    left.swap_rows(t, pi);
    w.swap_cols(t, pj);
    right.swap_cols(t, pj);

    for (;;) {
      // clear the pivot column and row by division with remainder
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w(i, t) == 0) continue;
        const Int q = trunc_quotient(w(i, t), w(t, t));
        if (q != 0) {
          w.add_row_multiple(i, t, -q);
          left.add_row_multiple(i, t, -q);
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w(t, j) == 0) continue;
        const Int q = trunc_quotient(w(t, j), w(t, t));
        if (q != 0) {
          w.add_col_multiple(j, t, -q);
          right.add_col_multiple(j, t, -q);
        }
      }

      bool lone = true;
      for (std::size_t i = t + 1; i < m && lone; ++i)
        if (w(i, t) != 0) lone = false;
      for (std::size_t j = t + 1; j < n && lone; ++j)
        if (w(t, j) != 0) lone = false;

      if (lone) {
        // the pivot must divide the whole trailing submatrix
        bool chain_ok = true;
        for (std::size_t i = t + 1; i < m && chain_ok; ++i)
          for (std::size_t j = t + 1; j < n && chain_ok; ++j)
            if (!divides(w(t, t), w(i, j))) {
              w.add_row_multiple(t, i, 1);
              left.add_row_multiple(t, i, 1);
              chain_ok = false;
            }
        if (chain_ok) break;
      }

      // remainders or a divisibility repair left new entries: re-pick the
      // smallest one and continue
      if (!find_pivot(w, t, pi, pj)) break;
      w.swap_rows(t, pi);
      left.swap_rows(t, pi);
      w.swap_cols(t, pj);
      right.swap_cols(t, pj);
    }

    if (w(t, t) < 0) {  // sign-normalize into L
      w.negate_row(t);
      left.negate_row(t);
    }
  }
  return dec;
}

DiophantineSolution solve_diophantine(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_diophantine: shape mismatch");
  const SmithDecomposition dec = smith_normal_form(a);
  const std::size_t n = a.cols();
  const std::size_t r = dec.rank();
  const Vec c = dec.left.apply(b);
  const Vec d = dec.diagonal();

  Vec y(n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r) {
      if (!divides(d[i], c[i])) return {};
      y[i] = exact_div(c[i], d[i]);
    } else if (c[i] != 0) {
      return {};
    }
  }

  DiophantineSolution sol;
  sol.particular = dec.right.apply(y);
  for (std::size_t j = r; j < n; ++j) sol.kernel.push_back(dec.right.col(j));
  return sol;
}

DiophantineSystem embed_torsion_system(const Homomorphism& phi, const GroupElement& b) {
  if (b.group != phi.target) throw std::invalid_argument("embed_torsion_system: group mismatch");
  const std::size_t m = phi.target.rank();
  const std::size_t n = phi.source.rank();
  std::vector<std::size_t> finite_rows;
  for (std::size_t i = 0; i < m; ++i)
    if (phi.target.orders[i] > 0) finite_rows.push_back(i);

  DiophantineSystem sys;
  sys.matrix = Matrix(m, n + finite_rows.size());
  sys.rhs = b.exponents;
  sys.original_columns = n;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) sys.matrix(i, j) = phi.matrix(i, j);
  for (std::size_t k = 0; k < finite_rows.size(); ++k)
    sys.matrix(finite_rows[k], n + k) = phi.target.orders[finite_rows[k]];
  return sys;
}

namespace {

// Drops free-variable columns from a Diophantine solution and reads the rest
// as elements of the source group.
SolutionSet project_onto_source(const FgAbelianGroup& source, const DiophantineSolution& dio) {
  if (!dio.solvable()) return SolutionSet::make_inconsistent();
  const std::size_t n = source.rank();
  GroupElement particular =
      make_element(source, Vec(dio.particular->begin(), dio.particular->begin() + n));
  std::vector<GroupElement> gens;
  gens.reserve(dio.kernel.size());
  for (const auto& k : dio.kernel)
    gens.push_back(make_element(source, Vec(k.begin(), k.begin() + n)));
  return SolutionSet(std::move(particular), dedupe_generators(std::move(gens)));
}

SolutionSet solve_direct(const Homomorphism& phi, const GroupElement& b) {
  const DiophantineSystem sys = embed_torsion_system(phi, b);
  return project_onto_source(phi.source, solve_diophantine(sys.matrix, sys.rhs));
}

// Torsion-free block first; its parameters become extra generators of the
// torsion subsystem, reduced modulo the target torsion exponent.
SolutionSet solve_hybrid(const Homomorphism& phi, const GroupElement& b) {
  const std::size_t m = phi.target.rank();
  const std::size_t n = phi.source.rank();
  std::vector<std::size_t> free_rows, torsion_rows, free_cols, torsion_cols;
  for (std::size_t i = 0; i < m; ++i)
    (phi.target.orders[i] == 0 ? free_rows : torsion_rows).push_back(i);
  for (std::size_t j = 0; j < n; ++j)
    (phi.source.orders[j] == 0 ? free_cols : torsion_cols).push_back(j);

  Matrix af(free_rows.size(), free_cols.size());
  Vec bf(free_rows.size());
  for (std::size_t r = 0; r < free_rows.size(); ++r) {
    for (std::size_t c = 0; c < free_cols.size(); ++c)
      af(r, c) = phi.matrix(free_rows[r], free_cols[c]);
    bf[r] = b.exponents[free_rows[r]];
  }
  const DiophantineSolution free_sol = solve_diophantine(af, bf);
  if (!free_sol.solvable()) return SolutionSet::make_inconsistent();
  const std::size_t params = free_sol.kernel.size();

  const Int exponent = phi.target.torsion_exponent();

  // torsion rows over (torsion columns | parameter columns)
  FgAbelianGroup tsrc, ttgt;
  for (std::size_t j : torsion_cols) tsrc.orders.push_back(phi.source.orders[j]);
  for (std::size_t t = 0; t < params; ++t) tsrc.orders.push_back(exponent);
  for (std::size_t i : torsion_rows) ttgt.orders.push_back(phi.target.orders[i]);

  Matrix at(torsion_rows.size(), torsion_cols.size() + params);
  Vec bt(torsion_rows.size());
  for (std::size_t r = 0; r < torsion_rows.size(); ++r) {
    const std::size_t i = torsion_rows[r];
    for (std::size_t c = 0; c < torsion_cols.size(); ++c) at(r, c) = phi.matrix(i, torsion_cols[c]);
    for (std::size_t t = 0; t < params; ++t) {
      Int coeff = 0;
      for (std::size_t c = 0; c < free_cols.size(); ++c)
        coeff += phi.matrix(i, free_cols[c]) * free_sol.kernel[t][c];
      at(r, torsion_cols.size() + t) = coeff;
    }
    Int rhs = b.exponents[i];
    for (std::size_t c = 0; c < free_cols.size(); ++c)
      rhs -= phi.matrix(i, free_cols[c]) * (*free_sol.particular)[c];
    bt[r] = rhs;
  }

  const Homomorphism tphi = make_homomorphism(tsrc, ttgt, std::move(at));
  const SolutionSet tsol = solve_direct(tphi, make_element(ttgt, std::move(bt)));
  if (!tsol.solvable()) return SolutionSet::make_inconsistent();

  auto assemble = [&](const Vec& tvec, bool homogeneous) {
    Vec x(n);
    for (std::size_t c = 0; c < torsion_cols.size(); ++c) x[torsion_cols[c]] = tvec[c];
    for (std::size_t c = 0; c < free_cols.size(); ++c) {
      Int v = homogeneous ? Int(0) : (*free_sol.particular)[c];
      for (std::size_t t = 0; t < params; ++t)
        v += free_sol.kernel[t][c] * tvec[torsion_cols.size() + t];
      x[free_cols[c]] = v;
    }
    return make_element(phi.source, std::move(x));
  };

  GroupElement particular = assemble(tsol.particular().exponents, false);
  std::vector<GroupElement> gens;
  for (const auto& g : tsol.kernel_generators()) gens.push_back(assemble(g.exponents, true));
  // shifting a parameter by the torsion exponent is invisible to every
  // torsion row, so scaled free-block kernel vectors stay solutions
  for (std::size_t t = 0; t < params; ++t) {
    Vec x(n);
    for (std::size_t c = 0; c < free_cols.size(); ++c)
      x[free_cols[c]] = exponent * free_sol.kernel[t][c];
    gens.push_back(make_element(phi.source, std::move(x)));
  }
  return SolutionSet(std::move(particular), dedupe_generators(std::move(gens)));
}

}  // namespace

SolutionSet solve_fg_via_snf(const Homomorphism& phi, const GroupElement& b,
                             SnfStrategy strategy) {
  if (b.group != phi.target) throw std::invalid_argument("solve_fg_via_snf: group mismatch");
  if (auto v = validate_hom(phi))
    throw std::invalid_argument("solve_fg_via_snf: invalid homomorphism at (" +
                                std::to_string(v->row) + "," + std::to_string(v->col) + ")");
  return strategy == SnfStrategy::Direct ? solve_direct(phi, b) : solve_hybrid(phi, b);
}

}  // namespace abelian
