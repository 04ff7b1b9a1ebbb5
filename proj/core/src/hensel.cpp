#include "abelian/hensel.hpp"

#include "abelian/modular_snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace abelian {

FgAbelianGroup EndoSystem::group() const {
  FgAbelianGroup g;
  g.orders.reserve(exponents.size());
  for (unsigned e : exponents) g.orders.push_back(pow_ui(p, e));
  return g;
}

EndoSystem make_endo_system(Int p, std::vector<unsigned> exponents, Matrix a, Vec b) {
  if (!is_prime(p)) throw std::invalid_argument("make_endo_system: p must be prime");
  const std::size_t m = exponents.size();
  if (a.rows() != m || a.cols() != m || b.size() != m)
    throw std::invalid_argument("make_endo_system: shape mismatch");
  for (std::size_t i = 0; i < m; ++i) {
    if (exponents[i] < 1 || (i > 0 && exponents[i - 1] > exponents[i]))
      throw std::invalid_argument("make_endo_system: exponents must be ascending and positive");
  }
  EndoSystem sys{std::move(p), std::move(exponents), std::move(a), std::move(b)};
  for (std::size_t i = 0; i < m; ++i) {
    const Int q = pow_ui(sys.p, sys.exponents[i]);
    sys.matrix.reduce_row_mod(i, q);
    sys.rhs[i] = mod_reduce(sys.rhs[i], q);
  }
  return sys;
}

std::optional<std::pair<std::size_t, std::size_t>> check_divisibility(const EndoSystem& system) {
  const std::size_t m = system.exponents.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      // e_min(i,j) = e_j for j < i; rows i <= j need p^0 only
      const Int need = pow_ui(system.p, system.exponents[i] - system.exponents[j]);
      if (!divides(need, system.matrix(i, j))) return std::make_pair(i, j);
    }
  return std::nullopt;
}

Vec AffineSolutionSpace::instantiate(const Vec& coeffs) const {
  if (coeffs.size() != basis.size())
    throw std::invalid_argument("AffineSolutionSpace::instantiate: coefficient count mismatch");
  Vec x = base;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += coeffs[i] * basis[i][j];
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = mod_reduce(x[j], ladder[j]);
  return x;
}

std::vector<Vec> AffineSolutionSpace::enumerate() const {
  std::vector<Vec> out;
  Vec coeffs(basis.size(), 0);
  for (;;) {
    out.push_back(instantiate(coeffs));
    std::size_t i = 0;
    while (i < coeffs.size()) {
      coeffs[i] += 1;
      if (coeffs[i] < p) break;
      coeffs[i] = 0;
      ++i;
    }
    if (i == coeffs.size()) break;
  }
  return out;
}

unsigned weight(const Vec& xi, const Vec& ladder, const Int& p) {
  if (xi.size() != ladder.size()) throw std::invalid_argument("weight: shape mismatch");
  unsigned w = 0;
  for (std::size_t j = 0; j < xi.size(); ++j) {
    unsigned cap = 0;
    Int l = ladder[j];
    while (l > 1) {
      l = exact_div(l, p);
      ++cap;
    }
    const unsigned v = p_valuation(xi[j], p, cap);
    w = std::max(w, cap - v);
  }
  return w;
}

std::optional<AffineSolutionSpace> solve_mod_p(const Matrix& a, const Vec& b, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("solve_mod_p: p must be prime");
  if (b.size() != a.rows()) throw std::invalid_argument("solve_mod_p: shape mismatch");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  Matrix w = a;
  w.reduce_mod(p);
  Vec rhs(m);
  for (std::size_t i = 0; i < m; ++i) rhs[i] = mod_reduce(b[i], p);

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t r = row;
    while (r < m && w(r, col) == 0) ++r;
    if (r == m) continue;
    w.swap_rows(row, r);
    std::swap(rhs[row], rhs[r]);
    const Int inv = invert_mod(w(row, col), p);
    w.scale_row(row, inv);
    w.reduce_row_mod(row, p);
    rhs[row] = mod_reduce(rhs[row] * inv, p);
    for (std::size_t r2 = 0; r2 < m; ++r2) {
      if (r2 == row || w(r2, col) == 0) continue;
      const Int c = w(r2, col);
      w.add_row_multiple(r2, row, -c);
      w.reduce_row_mod(r2, p);
      rhs[r2] = mod_reduce(rhs[r2] - c * rhs[row], p);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (rhs[r] != 0) return std::nullopt;

  AffineSolutionSpace space;
  space.p = p;
  space.base.assign(n, 0);
  space.ladder.assign(n, p);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) space.base[pivot_cols[k]] = rhs[k];
  std::size_t next_pivot = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == j) {
      ++next_pivot;
      continue;
    }
    Vec v(n);
    v[j] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      v[pivot_cols[k]] = mod_reduce(-w(k, j), p);
    space.basis.push_back(std::move(v));
  }
  return space;
}

namespace {

std::optional<AffineSolutionSpace> step_impl(AffineSolutionSpace s, const Vec& row,
                                             const Int& rhs, std::size_t n, unsigned ell,
                                             HenselStats* stats) {
  const Int p = s.p;
  const Int pl = pow_ui(p, ell);
  const Int corner = mod_reduce(row[n], p);

  // gamma_i = f(xi_i)/p^ell; a failed division would contradict xi_i being a
  // level-ell solution, so it is a checked invariant rather than an assumption
  const Int g0 = exact_div(dot(row, s.base) - rhs, pl);
  std::vector<Int> g(s.basis.size());
  for (std::size_t i = 0; i < s.basis.size(); ++i) g[i] = exact_div(dot(row, s.basis[i]), pl);

  if (corner != 0) {
    // unit corner: every member lifts uniquely by x_n += t * p^ell
    const Int ainv = invert_mod(corner, p);
    s.base[n] += pl * mod_reduce(-ainv * g0, p);
    for (std::size_t i = 0; i < s.basis.size(); ++i)
      s.basis[i][n] += pl * mod_reduce(-ainv * g[i], p);
    if (stats) ++stats->unique_lifts;
  } else {
    // singular corner: the lifting condition gamma_0 + sum gamma_i t_i ≡ 0 (p)
    std::optional<std::size_t> pivot;
    for (std::size_t i = s.basis.size(); i-- > 0;) {
      if (mod_reduce(g[i], p) != 0) {
        pivot = i;
        break;
      }
    }
    if (!pivot) {
      if (mod_reduce(g0, p) != 0) return std::nullopt;  // unsatisfiable
      if (stats) ++stats->trivial_conditions;
    } else {
      // eliminate t_pivot and restrict to the combinations that lift
      const Int ginv = invert_mod(mod_reduce(g[*pivot], p), p);
      const Vec xs = s.basis[*pivot];
      const Int tau0 = mod_reduce(-ginv * g0, p);
      for (std::size_t j = 0; j < s.base.size(); ++j) s.base[j] += tau0 * xs[j];
      for (std::size_t i = 0; i < s.basis.size(); ++i) {
        if (i == *pivot) continue;
        const Int tau = mod_reduce(-ginv * g[i], p);
        if (tau == 0) continue;
        for (std::size_t j = 0; j < xs.size(); ++j) s.basis[i][j] += tau * xs[j];
      }
      s.basis.erase(s.basis.begin() + static_cast<std::ptrdiff_t>(*pivot));
      if (stats) ++stats->restricted_conditions;
    }
    Vec dir(s.base.size());
    dir[n] = pl;
    s.basis.push_back(std::move(dir));
  }

  s.ladder[n] *= p;
  // only coordinate n is reduced here; other coordinates wait for the sweep
  // boundary, where reduction is safe against the raw rows
  s.base[n] = mod_reduce(s.base[n], s.ladder[n]);
  for (auto& v : s.basis) v[n] = mod_reduce(v[n], s.ladder[n]);
  return s;
}

void reduce_by_ladder(AffineSolutionSpace& s) {
  for (std::size_t j = 0; j < s.base.size(); ++j) s.base[j] = mod_reduce(s.base[j], s.ladder[j]);
  for (auto& v : s.basis)
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = mod_reduce(v[j], s.ladder[j]);
}

void verify_space(const EndoSystem& sys, const AffineSolutionSpace& space, unsigned level) {
  Int count = 1;
  for (std::size_t i = 0; i < space.rank() && count <= 64; ++i) count *= space.p;
  if (count > 64) return;
  const auto members = space.enumerate();
  for (const auto& x : members) {
    for (std::size_t i = 0; i < sys.exponents.size(); ++i) {
      const Int q = pow_ui(sys.p, std::min<unsigned>(sys.exponents[i], level));
      internal_check(mod_reduce(dot(sys.matrix.row(i), x) - sys.rhs[i], q) == 0,
                     "hensel level verification failed");
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      internal_check(members[i] != members[j], "hensel space members not distinct");
}

}  // namespace

std::optional<AffineSolutionSpace> hensel_step(AffineSolutionSpace space, const Vec& row,
                                               const Int& rhs, std::size_t coord, unsigned ell) {
  if (row.size() != space.base.size())
    throw std::invalid_argument("hensel_step: row width mismatch");
  return step_impl(std::move(space), row, rhs, coord, ell, nullptr);
}

SolutionSet solve_endomorphic(const EndoSystem& system, const HenselOptions& options,
                              HenselStats* stats) {
  HenselStats local;
  if (!stats) stats = &local;
  *stats = HenselStats{};
  if (auto v = check_divisibility(system))
    throw std::invalid_argument("solve_endomorphic: divisibility condition violated at (" +
                                std::to_string(v->first) + "," + std::to_string(v->second) + ")");

  const std::size_t m = system.exponents.size();
  const FgAbelianGroup g = system.group();
  if (m == 0) return SolutionSet(identity_element(g), {});

  auto first = solve_mod_p(system.matrix, system.rhs, system.p);
  if (!first) return SolutionSet::make_inconsistent();
  AffineSolutionSpace space = std::move(*first);
  stats->initial_rank = space.rank();
  if (options.verify_levels) verify_space(system, space, 1);

  const unsigned emax = system.exponents.back();
  for (unsigned level = 2; level <= emax; ++level) {
    // active window: rows and coordinates whose modulus still grows
    std::size_t active_begin = 0;
    while (active_begin < m && system.exponents[active_begin] < level) ++active_begin;
    const std::size_t width = m - active_begin;
    const Int q = pow_ui(system.p, level);

    reduce_by_ladder(space);

    // working copy of the active rows, echelonized on the active columns
    std::vector<Vec> rows(width);
    Vec rhs(width);
    for (std::size_t r = 0; r < width; ++r) {
      rows[r] = system.matrix.row(active_begin + r);
      for (auto& x : rows[r]) x = mod_reduce(x, q);
      rhs[r] = mod_reduce(system.rhs[active_begin + r], q);
    }
    for (std::size_t c = 0; c < width; ++c) {
      const std::size_t col = active_begin + c;
      unsigned best = level;
      std::size_t pick = c;
      for (std::size_t r = c; r < width; ++r) {
        const unsigned v = p_valuation(rows[r][col], system.p, level);
        if (v < best) {
          best = v;
          pick = r;
        }
      }
      if (best == level) continue;  // zero corner for this coordinate
      std::swap(rows[c], rows[pick]);
      std::swap(rhs[c], rhs[pick]);
      const Int pv = pow_ui(system.p, best);
      const Int punit = invert_mod(exact_div(mod_reduce(rows[c][col], q), pv), q);
      for (std::size_t r = c + 1; r < width; ++r) {
        const Int entry = mod_reduce(rows[r][col], q);
        if (entry == 0) continue;
        const Int factor = mod_reduce(exact_div(entry, pv) * punit, q);
        for (std::size_t j = 0; j < m; ++j)
          rows[r][j] = mod_reduce(rows[r][j] - factor * rows[c][j], q);
        rhs[r] = mod_reduce(rhs[r] - factor * rhs[c], q);
      }
    }

    for (std::size_t r = width; r-- > 0;) {
      auto next = step_impl(std::move(space), rows[r], rhs[r], active_begin + r, level - 1, stats);
      if (!next) return SolutionSet::make_inconsistent();
      space = std::move(*next);
    }

    if (options.verify_levels) verify_space(system, space, level);
  }

  stats->final_rank = space.rank();
  GroupElement particular = make_element(g, space.base);
  std::vector<GroupElement> gens;
  gens.reserve(space.basis.size());
  for (const auto& v : space.basis) gens.push_back(make_element(g, v));
  return SolutionSet(std::move(particular), dedupe_generators(std::move(gens)));
}

namespace {

unsigned order_exponent(const Int& order, const Int& p) {
  unsigned e = 0;
  Int o = order;
  while (o > 1) {
    internal_check(divides(p, o), "order is not a power of p");
    o = exact_div(o, p);
    ++e;
  }
  return e;
}

Int require_common_prime(const FgAbelianGroup& source, const FgAbelianGroup& target,
                         const char* who) {
  const auto ps = source.p_group_prime();
  const auto pt = target.p_group_prime();
  if (ps && pt && *ps != *pt) throw std::invalid_argument(std::string(who) + ": mixed primes");
  if (ps) return *ps;
  if (pt) return *pt;
  if (source.is_trivial() && target.is_trivial()) return 2;  // irrelevant
  throw std::invalid_argument(std::string(who) + ": groups are not p-groups");
}

std::vector<GroupElement> standard_generators(const FgAbelianGroup& g) {
  std::vector<GroupElement> gens;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    Vec e(g.rank());
    e[j] = 1;
    gens.push_back(make_element(g, std::move(e)));
  }
  return gens;
}

}  // namespace

SolutionSet solve_p_group_hom_hensel(const Homomorphism& phi, const GroupElement& b,
                                     const HenselOptions& options, HenselStats* stats) {
  if (b.group != phi.target)
    throw std::invalid_argument("solve_p_group_hom_hensel: group mismatch");
  if (auto v = validate_hom(phi))
    throw std::invalid_argument("solve_p_group_hom_hensel: invalid homomorphism");
  const Int p = require_common_prime(phi.source, phi.target, "solve_p_group_hom_hensel");

  if (phi.source.is_trivial()) {
    if (b.is_identity()) return SolutionSet(identity_element(phi.source), {});
    return SolutionSet::make_inconsistent();
  }
  if (phi.target.is_trivial())
    return SolutionSet(identity_element(phi.source),
                       dedupe_generators(standard_generators(phi.source)));

  const std::size_t m = phi.target.rank();
  const std::size_t n = phi.source.rank();

  if (phi.source.orders == phi.target.orders &&
      std::is_sorted(phi.source.orders.begin(), phi.source.orders.end())) {
    // endomorphic shape: keep the mixed ladder
    std::vector<unsigned> exps;
    exps.reserve(m);
    for (const auto& o : phi.source.orders) exps.push_back(order_exponent(o, p));
    EndoSystem sys = make_endo_system(p, std::move(exps), phi.matrix, b.exponents);
    internal_check(!check_divisibility(sys),
                   "valid endomorphism must satisfy the divisibility condition");
    const SolutionSet sol = solve_endomorphic(sys, options, stats);
    if (!sol.solvable()) return sol;
    std::vector<GroupElement> gens;
    for (const auto& k : sol.kernel_generators())
      gens.push_back(make_element(phi.source, k.exponents));
    return SolutionSet(make_element(phi.source, sol.particular().exponents), std::move(gens));
  }

  // common homocyclic frame: scale every row to modulus p^E and pad square
  unsigned cap = 0;
  for (const auto& o : phi.source.orders) cap = std::max(cap, order_exponent(o, p));
  for (const auto& o : phi.target.orders) cap = std::max(cap, order_exponent(o, p));
  const ScaledSystem scaled = scale_rows_to_exponent(phi.target, phi.matrix, b.exponents, p, cap);
  const std::size_t size = std::max(m, n);
  Matrix square(size, size);
  Vec rhs(size);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) square(i, j) = scaled.matrix(i, j);
    rhs[i] = scaled.rhs[i];
  }
  EndoSystem sys = make_endo_system(p, std::vector<unsigned>(size, cap), std::move(square),
                                    std::move(rhs));
  const SolutionSet sol = solve_endomorphic(sys, options, stats);
  if (!sol.solvable()) return sol;

  auto project = [&](const Vec& v) {
    return make_element(phi.source, Vec(v.begin(), v.begin() + n));
  };
  std::vector<GroupElement> gens;
  for (const auto& k : sol.kernel_generators()) gens.push_back(project(k.exponents));
  return SolutionSet(project(sol.particular().exponents), dedupe_generators(std::move(gens)));
}

std::optional<Vec> solve_membership(const std::vector<GroupElement>& generators,
                                    const GroupElement& b, const HenselOptions& options) {
  if (generators.empty()) {
    if (b.is_identity()) return Vec{};
    return std::nullopt;
  }
  const FgAbelianGroup& g = b.group;
  for (const auto& gen : generators)
    if (gen.group != g) throw std::invalid_argument("solve_membership: group mismatch");
  if (g.is_trivial()) return Vec(generators.size());
  const auto prime = g.p_group_prime();
  if (!prime) throw std::invalid_argument("solve_membership: not a p-group");

  // the G^n -> G evaluation map (x_1,...,x_n) -> sum x_j g_j; its columns are
  // the generators, so the divisibility condition holds in the padded frame
  unsigned cap = 0;
  for (const auto& o : g.orders) cap = std::max(cap, order_exponent(o, *prime));
  FgAbelianGroup domain;
  domain.orders.assign(generators.size(), pow_ui(*prime, cap));
  Matrix mat(g.rank(), generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t r = 0; r < g.rank(); ++r) mat(r, j) = generators[j].exponents[r];
  const Homomorphism phi = make_homomorphism(std::move(domain), g, std::move(mat));
  const SolutionSet sol = solve_p_group_hom_hensel(phi, b, options);
  if (!sol.solvable()) return std::nullopt;
  return sol.particular().exponents;
}

Homomorphism invert_automorphism(const Homomorphism& phi, const HenselOptions& options) {
  if (phi.source != phi.target)
    throw std::invalid_argument("invert_automorphism: not an endomorphism");
  if (auto v = validate_hom(phi))
    throw std::invalid_argument("invert_automorphism: invalid homomorphism");
  const FgAbelianGroup& g = phi.source;
  const std::size_t n = g.rank();

  Matrix inverse(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec e(n);
    e[j] = 1;
    const SolutionSet sol = solve_p_group_hom_hensel(phi, make_element(g, std::move(e)), options);
    if (!sol.solvable())
      throw std::invalid_argument("invert_automorphism: not an automorphism (generator " +
                                  std::to_string(j) + " has no pre-image)");
    if (j == 0 && !sol.kernel_generators().empty())
      throw std::invalid_argument("invert_automorphism: not an automorphism (nontrivial kernel)");
    for (std::size_t i = 0; i < n; ++i) inverse(i, j) = sol.particular().exponents[i];
  }

  const Homomorphism inv = make_homomorphism(g, g, std::move(inverse));
  const Homomorphism ab = make_homomorphism(g, g, phi.matrix * inv.matrix);
  const Homomorphism ba = make_homomorphism(g, g, inv.matrix * phi.matrix);
  internal_check(ab.matrix == Matrix::identity(n) && ba.matrix == Matrix::identity(n),
                 "automorphism inverse does not compose to the identity");
  return inv;
}

}  // namespace abelian
