#include "unbendable/fundforms.hpp"

namespace unbendable {

namespace {

// Ordering key for the transverse choice.
bool larger(const Rational& a, const Rational& b) { return a.abs() > b.abs(); }
bool larger(const RationalFunction& a, const RationalFunction& b) {
  return a.is_constant() && !b.is_constant();
}

template <class F>
std::uint32_t max_degree(const std::vector<MultiPoly<F>>& system) {
  std::uint32_t d = 1;
  for (const auto& p : system) d = std::max(d, p.total_degree());
  return d;
}

}  // namespace

template <class F>
CurveGerm<F> germ_from_coefficients(const Ring& chart, const std::vector<std::vector<F>>& coeffs) {
  if (coeffs.empty()) throw PreconditionError("germ needs at least one coefficient vector");
  CurveGerm<F> g;
  g.chart = chart;
  g.base.assign(chart.size(), F());
  g.series.order = int(coeffs.size());
  g.series.coeffs = coeffs;
  g.series.exact = true;
  g.transverse = choose_transverse(coeffs[0]);
  return g;
}

template <class F>
Matrix<F> jacobian_at(const std::vector<MultiPoly<F>>& system, const std::vector<F>& pt) {
  Matrix<F> j(system.size(), pt.size());
  for (std::size_t i = 0; i < system.size(); ++i)
    for (std::size_t v = 0; v < pt.size(); ++v) j(i, v) = system[i].derivative(v).evaluate(pt);
  return j;
}

template <class F>
TangentSpace<F> zariski_tangent(const std::vector<MultiPoly<F>>& system, const std::vector<F>& pt) {
  for (const auto& p : system)
    if (!p.evaluate(pt).is_zero()) throw PreconditionError("point not on scheme");
  auto rr = rref_rank_kernel(jacobian_at(system, pt));
  TangentSpace<F> t;
  t.dimension = rr.kernel.size();
  t.kernel = std::move(rr.kernel);
  return t;
}

template <class F>
std::size_t choose_transverse(const std::vector<F>& direction) {
  std::size_t best = direction.size();
  for (std::size_t i = 0; i < direction.size(); ++i) {
    if (direction[i].is_zero()) continue;
    if (best == direction.size() || larger(direction[i], direction[best])) best = i;
  }
  if (best == direction.size()) throw PreconditionError("zero tangent direction");
  return best;
}

template <class F>
CurveGerm<F> branch_expand(const std::vector<MultiPoly<F>>& system, const std::vector<F>& pt,
                           std::optional<std::size_t> transverse, int order) {
  if (order < 1) throw PreconditionError("expansion order must be at least 1");
  auto tangent = zariski_tangent(system, pt);
  if (tangent.dimension != 1)
    throw PreconditionError("not a smooth curve germ (tangent dimension " + std::to_string(tangent.dimension) + ")");
  const auto& dir = tangent.kernel[0];
  std::size_t T = transverse ? *transverse : choose_transverse(dir);
  if (T >= pt.size() || dir[T].is_zero()) throw PreconditionError("transverse direction not in kernel");

  std::size_t n = pt.size();
  Matrix<F> jac = jacobian_at(system, pt);
  Matrix<F> jnt(jac.rows(), n - 1);
  for (std::size_t i = 0; i < jac.rows(); ++i)
    for (std::size_t v = 0, c = 0; v < n; ++v)
      if (v != T) jnt(i, c++) = jac(i, v);

  CurveGerm<F> g;
  g.chart = system.empty() ? Ring() : system.front().ring();
  g.base = pt;
  g.transverse = T;
  g.series.order = 1;
  std::vector<F> c1(n);
  F inv = F(1) / dir[T];
  for (std::size_t v = 0; v < n; ++v) c1[v] = dir[v] * inv;
  g.series.coeffs.push_back(c1);

  for (int j = 2; j <= order; ++j) {
    g.series.order = j;
    g.series.coeffs.push_back(std::vector<F>(n));
    std::vector<F> rhs;
    for (const auto& p : system) rhs.push_back(-series_substitute(p, g.series, pt).c[std::size_t(j)]);
    auto sol = solve_affine_system(jnt, rhs);
    if (sol.kind == SolveKind::Inconsistent)
      throw PreconditionError("no formal branch at order " + std::to_string(j) + ", check smoothness");
    if (sol.kind != SolveKind::Unique) throw InternalError("branch coefficients are not unique");
    auto& cj = g.series.coeffs.back();
    for (std::size_t v = 0, c = 0; v < n; ++v)
      if (v != T) cj[v] = sol.particular[c++];
  }
  // The germ is exact when it solves the system as a polynomial curve.
  int full = order * int(max_degree(system));
  bool exact = true;
  for (const auto& p : system) {
    auto s = series_substitute(p, g.series, pt, full);
    exact = exact && s.is_zero() && !s.truncated;
  }
  g.series.exact = exact;
  return g;
}

template <class F>
bool branch_residuals_vanish(const std::vector<MultiPoly<F>>& system, const CurveGerm<F>& germ) {
  for (const auto& p : system)
    if (!series_substitute(p, germ.series, germ.base).is_zero()) return false;
  return true;
}

template <class F>
OsculatingFlag<F> osculating_flag(const CurveGerm<F>& germ) {
  OsculatingFlag<F> f;
  f.vectors = germ.series.coeffs;
  for (std::size_t k = 1; k <= f.vectors.size(); ++k) {
    std::vector<std::vector<F>> rows(f.vectors.begin(), f.vectors.begin() + long(k));
    f.ranks.push_back(rank_of(Matrix<F>::from_rows(rows)));
  }
  return f;
}

const char* to_string(Nondegeneracy n) {
  switch (n) {
    case Nondegeneracy::Nondegenerate: return "nondegenerate";
    case Nondegeneracy::Degenerate: return "degenerate";
    case Nondegeneracy::Undecided: return "undecided";
  }
  return "?";
}

template <class F>
NondegeneracyResult linear_nondegenerate(const CurveGerm<F>& germ, std::size_t ambient_dim) {
  NondegeneracyResult r;
  r.order = germ.series.order;
  r.ranks = osculating_flag(germ).ranks;
  std::size_t top = r.ranks.empty() ? 0 : r.ranks.back();
  if (top >= ambient_dim)
    r.status = Nondegeneracy::Nondegenerate;
  else if (germ.series.exact)
    r.status = Nondegeneracy::Degenerate;
  else
    r.status = Nondegeneracy::Undecided;
  return r;
}

template <class F>
NondegeneracyResult linear_nondegenerate(const std::vector<MultiPoly<F>>& system, const std::vector<F>& pt,
                                         std::size_t ambient_dim, std::optional<std::size_t> transverse) {
  int cap = int(ambient_dim) + 2;
  NondegeneracyResult r;
  for (int order = std::max(2, int(ambient_dim)); order <= cap; ++order) {
    r = linear_nondegenerate(branch_expand(system, pt, transverse, order), ambient_dim);
    if (r.status != Nondegeneracy::Undecided) return r;
  }
  return r;
}

#define INSTANTIATE(F)                                                                                        \
  template CurveGerm<F> germ_from_coefficients(const Ring&, const std::vector<std::vector<F>>&);             \
  template Matrix<F> jacobian_at(const std::vector<MultiPoly<F>>&, const std::vector<F>&);                   \
  template TangentSpace<F> zariski_tangent(const std::vector<MultiPoly<F>>&, const std::vector<F>&);         \
  template std::size_t choose_transverse(const std::vector<F>&);                                             \
  template CurveGerm<F> branch_expand(const std::vector<MultiPoly<F>>&, const std::vector<F>&,               \
                                      std::optional<std::size_t>, int);                                      \
  template bool branch_residuals_vanish(const std::vector<MultiPoly<F>>&, const CurveGerm<F>&);              \
  template OsculatingFlag<F> osculating_flag(const CurveGerm<F>&);                                           \
  template NondegeneracyResult linear_nondegenerate(const CurveGerm<F>&, std::size_t);                       \
  template NondegeneracyResult linear_nondegenerate(const std::vector<MultiPoly<F>>&, const std::vector<F>&, \
                                                    std::size_t, std::optional<std::size_t>);

INSTANTIATE(Rational)
INSTANTIATE(RationalFunction)

}  // namespace unbendable
