#include "unbendable/vmrt.hpp"

#include <sstream>

#include "unbendable/poly_gcd.hpp"
#include "unbendable/univariate.hpp"

namespace unbendable {

namespace {

constexpr std::uint32_t kMaxDegree = 6;
constexpr std::size_t kMaxAmbient = 8;

void require_caps(const Hypersurface& h) {
  if (h.degree > kMaxDegree) throw PreconditionError("degree above the supported cap of 6");
  if (h.ambient_dim > kMaxAmbient) throw PreconditionError("ambient dimension above the supported cap of 8");
}

const Poly& lift(const Poly& p, const Rational*) { return p; }
PolyRF lift(const Poly& p, const RationalFunction*) { return lift_to_rf(p); }

std::string index_name(const char* prefix, std::size_t i) { return prefix + std::to_string(i); }

std::size_t first_nonzero(const auto& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) return i;
  throw PreconditionError("zero vector is not a projective point");
}

Matrix<Rational> inverse_of(const Matrix<Rational>& a) {
  std::size_t n = a.rows();
  Matrix<Rational> inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    VecQ e(n);
    e[j] = 1;
    auto sol = solve_affine_system(a, e);
    if (sol.kind != SolveKind::Unique) throw InternalError("coordinate change is not invertible");
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = sol.particular[i];
  }
  return inv;
}

Poly binary_restriction(const Poly& f, const Ring& binary, const VecQ& p, const VecQ& q) {
  Poly t0 = Poly::variable(binary, 0), t1 = Poly::variable(binary, 1);
  std::vector<Poly> images;
  for (std::size_t i = 0; i < p.size(); ++i)
    images.push_back(t0.scaled(p[i]) + t1.scaled(q[i]));
  return f.compose(images, binary);
}

Ring binary_ring() { return Ring({"t0", "t1"}); }

VecQ unit(std::size_t n, std::size_t i) {
  VecQ e(n);
  e[i] = 1;
  return e;
}

// Profile computed in normalized coordinates.
FfProfile profile_normalized(const Hypersurface& fn, const VecQ& x, int order) {
  FfProfile prof;
  prof.equations = vmrt_equations<Rational>(fn, x);
  prof.affine = affine_vmrt<Rational>(fn, x);
  VecQ origin(prof.affine.empty() ? 0 : prof.affine.front().ring().size());
  auto tangent = zariski_tangent(prof.affine, origin);
  prof.tangent_dim = tangent.dimension;
  if (tangent.dimension != 1) {
    prof.note = "VMRT singular at the point";
    return prof;
  }
  prof.germ = branch_expand(prof.affine, origin, std::nullopt, order);
  prof.ranks = osculating_flag(*prof.germ).ranks;
  return prof;
}

Poly monic_squarefree(const Poly& p) {
  if (p.is_constant()) return Poly::constant(Rational(1), p.ring());
  return make_monic(squarefree_part(p, 0));
}

}  // namespace

Hypersurface::Hypersurface(Poly poly) : ring(poly.ring()), f(std::move(poly)) {
  if (f.is_zero()) throw PreconditionError("hypersurface polynomial is zero");
  if (!f.is_homogeneous()) throw PreconditionError("hypersurface polynomial is not homogeneous");
  if (ring.size() < 3) throw PreconditionError("need at least three homogeneous coordinates");
  ambient_dim = ring.size() - 1;
  degree = f.total_degree();
}

NormalizedLine normalize_line(const Hypersurface& h, const LineSpec& l) {
  std::size_t n1 = h.ring.size();
  if (l.p.size() != n1 || l.q.size() != n1) throw PreconditionError("line basis has the wrong length");
  std::vector<VecQ> cols{l.p, l.q};
  if (rank_of(Matrix<Rational>::from_rows(cols)) != 2) throw PreconditionError("line basis is not of rank 2");
  for (std::size_t j = 0; j < n1 && cols.size() < n1; ++j) {
    cols.push_back(unit(n1, j));
    if (rank_of(Matrix<Rational>::from_rows(cols)) != cols.size()) cols.pop_back();
  }
  NormalizedLine nl;
  nl.change = Matrix<Rational>::from_rows(cols).transpose();
  nl.inverse = inverse_of(nl.change);
  std::vector<Poly> images;
  for (std::size_t i = 0; i < n1; ++i) {
    Poly img(h.ring);
    for (std::size_t j = 0; j < n1; ++j)
      if (!nl.change(i, j).is_zero()) img += Poly::variable(h.ring, j).scaled(nl.change(i, j));
    images.push_back(img);
  }
  nl.surface = Hypersurface(h.f.compose(images, h.ring));
  return nl;
}

bool contains_line(const Hypersurface& h, const LineSpec& l) {
  if (l.p.size() != h.ring.size() || l.q.size() != h.ring.size())
    throw PreconditionError("line basis has the wrong length");
  return binary_restriction(h.f, binary_ring(), l.p, l.q).is_zero();
}

std::vector<Poly> restricted_gradient(const Hypersurface& h, const LineSpec& l) {
  auto fn = normalize_line(h, l).surface;
  std::size_t n1 = h.ring.size();
  std::vector<Poly> out;
  for (std::size_t i = 0; i < n1; ++i)
    out.push_back(binary_restriction(fn.f.derivative(i), binary_ring(), unit(n1, 0), unit(n1, 1)));
  return out;
}

bool smooth_along_line(const Hypersurface& h, const LineSpec& l) {
  try {
    return !binary_form_common_zeros(restricted_gradient(h, l)).common_zero;
  } catch (const PreconditionError&) {
    return false;
  }
}

template <class F>
std::vector<MultiPoly<F>> vmrt_equations(const Hypersurface& h, const std::vector<F>& x) {
  std::size_t n1 = h.ring.size();
  if (x.size() != n1) throw PreconditionError("point has the wrong number of coordinates");
  std::size_t j = first_nonzero(x);
  std::vector<std::string> names{"lam"}, ynames;
  for (std::size_t i = 0; i < n1; ++i)
    if (i != j) ynames.push_back(index_name("y", i));
  names.insert(names.end(), ynames.begin(), ynames.end());
  Ring target(names), yring(ynames);
  using P = MultiPoly<F>;
  P lam = P::variable(target, 0);
  std::vector<P> images;
  for (std::size_t i = 0, k = 1; i < n1; ++i) {
    P img = P::constant(x[i], target);
    if (i != j) img += lam * P::variable(target, k++);
    images.push_back(img);
  }
  auto expanded = lift(h.f, static_cast<const F*>(nullptr)).compose(images, target);
  auto coeffs = expanded.coefficients_in(0);
  if (!coeffs[0].is_zero()) throw PreconditionError("point not on the hypersurface");
  std::vector<long> map{-1};
  for (std::size_t i = 0; i < ynames.size(); ++i) map.push_back(long(i));
  std::vector<P> hs;
  for (std::uint32_t k = 1; k <= h.degree; ++k)
    hs.push_back(k < coeffs.size() ? coeffs[k].remapped(yring, map) : P(yring));
  return hs;
}

template <class F>
std::vector<MultiPoly<F>> affine_vmrt(const Hypersurface& h, const std::vector<F>& x,
                                      std::optional<std::size_t> dehomogenize) {
  auto hs = vmrt_equations(h, x);
  std::size_t n1 = h.ring.size();
  std::size_t j = first_nonzero(x);
  std::size_t chart = dehomogenize ? *dehomogenize : (j == 0 ? 1 : 0);
  if (chart == j || chart >= n1) throw PreconditionError("invalid dehomogenizing coordinate");
  std::vector<std::string> znames;
  for (std::size_t i = 0; i < n1; ++i)
    if (i != j && i != chart) znames.push_back(index_name("z", i));
  Ring zring(znames);
  using P = MultiPoly<F>;
  std::vector<P> images;
  for (std::size_t i = 0, k = 0; i < n1; ++i) {
    if (i == j) continue;
    images.push_back(i == chart ? P::constant(F(1), zring) : P::variable(zring, k++));
  }
  std::vector<P> gs;
  std::vector<F> origin(znames.size());
  for (const auto& hk : hs) {
    gs.push_back(hk.compose(images, zring));
    if (!gs.back().evaluate(origin).is_zero()) throw PreconditionError("chart misses the line direction");
  }
  return gs;
}

bool NormalBundleType::unbendable() const {
  if (splitting.empty() || splitting[0] != 1) return false;
  for (std::size_t i = 1; i < splitting.size(); ++i)
    if (splitting[i] != 0) return false;
  return true;
}

std::string NormalBundleType::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < splitting.size(); ++i) s += (i ? "," : "") + std::to_string(splitting[i]);
  return s + "}";
}

NormalBundleType normal_bundle_type(const Hypersurface& h, const LineSpec& l) {
  require_caps(h);
  if (!contains_line(h, l)) throw PreconditionError("line not contained in the hypersurface");
  if (!smooth_along_line(h, l)) throw PreconditionError("hypersurface is singular along the line");
  auto grads = restricted_gradient(h, l);
  std::size_t n = h.ambient_dim;
  long d = long(h.degree);
  std::size_t rank = n - 2;
  // coefficient of t0^a t1^(deg-a) in a binary form
  auto coeff = [](const Poly& form, long a, long deg) {
    if (a < 0 || a > deg) return Rational(0);
    return form.coefficient(Monomial::from_dense({std::uint32_t(a), std::uint32_t(deg - a)}));
  };
  NormalBundleType nb;
  std::vector<std::size_t> delta;
  std::size_t prev = 0;
  for (long k = -1;; ++k) {
    if (k > d + 1) throw InternalError("sheaf map not surjective along the line");
    long sdeg = 1 + k, tdeg = d + k;
    std::size_t cols = (n - 1) * std::size_t(sdeg + 1);
    std::size_t h0 = 0;
    if (cols > 0) {
      Matrix<Rational> m(std::size_t(tdeg + 1), cols);
      for (std::size_t i = 2; i <= n; ++i)
        for (long b = 0; b <= sdeg; ++b)
          for (long a = 0; a <= tdeg; ++a)
            m(std::size_t(a), (i - 2) * std::size_t(sdeg + 1) + std::size_t(b)) = coeff(grads[i], a - b, d - 1);
      h0 = cols - rank_of(m);
    }
    nb.h0_twists.push_back(h0);
    delta.push_back(h0 - prev);
    prev = h0;
    if (delta.back() == rank) break;
  }
  // delta[k + 1] = #{summands >= -k}
  std::size_t before = 0;
  for (std::size_t idx = 0; idx < delta.size(); ++idx) {
    int value = 1 - int(idx);
    for (std::size_t c = before; c < delta[idx]; ++c) nb.splitting.push_back(value);
    before = delta[idx];
  }
  long sum = 0;
  for (int a : nb.splitting) sum += a;
  if (nb.splitting.size() != rank || sum != long(n) - 1 - d)
    throw InternalError("normal bundle degrees do not add up to n-1-d");
  return nb;
}

FfProfile ff_profile_at_point(const Hypersurface& h, const LineSpec& l, const VecQ& x, int order) {
  require_caps(h);
  auto nl = normalize_line(h, l);
  VecQ nx = nl.to_normalized(x);
  for (std::size_t i = 2; i < nx.size(); ++i)
    if (!nx[i].is_zero()) throw PreconditionError("point not on the line");
  auto prof = profile_normalized(nl.surface, nx, order);
  prof.point = x;
  return prof;
}

const char* to_string(LocusKind k) {
  switch (k) {
    case LocusKind::Empty: return "empty";
    case LocusKind::Points: return "points";
    case LocusKind::Everywhere: return "everywhere";
  }
  return "?";
}

Ff3Locus ff3_vanishing_locus(const Hypersurface& h, const LineSpec& l) {
  require_caps(h);
  auto nb = normal_bundle_type(h, l);
  if (!nb.unbendable()) throw PreconditionError("line is not unbendable, normal bundle " + nb.to_string());
  auto fn = normalize_line(h, l).surface;
  std::size_t n1 = h.ring.size();
  Ring sring({"s"});
  Ff3Locus out;
  Poly one = Poly::constant(Rational(1), sring);

  std::vector<RationalFunction> xs(n1);
  xs[0] = 1;
  xs[1] = RationalFunction::variable(sring, 0);
  auto gs = affine_vmrt<RationalFunction>(fn, xs);
  std::vector<RationalFunction> origin(gs.front().ring().size());
  auto jac = jacobian_at(gs, origin);
  auto tangent = rref_rank_kernel(jac);
  if (tangent.kernel.size() != 1) throw PreconditionError("VMRT is not a smooth curve at the generic point");
  auto germ = branch_expand(gs, origin, std::nullopt, 3);

  // Degeneracy factors: det of the non-transverse Jacobian and all denominators.
  Poly degeneracy = one;
  if (jac.rows() + 1 == jac.cols()) {
    Matrix<RationalFunction> jnt(jac.rows(), jac.rows());
    for (std::size_t i = 0; i < jac.rows(); ++i)
      for (std::size_t v = 0, c = 0; v < jac.cols(); ++v)
        if (v != germ.transverse) jnt(i, c++) = jac(i, v);
    auto det = determinant(jnt);
    if (det.is_zero()) throw InternalError("non-transverse Jacobian is singular over Q(s)");
    degeneracy = degeneracy * det.numerator().with_ring(sring) * det.denominator().with_ring(sring);
  } else {
    throw PreconditionError("VMRT is not cut out by a complete intersection of curve type");
  }
  for (const auto& c : germ.series.coeffs)
    for (const auto& e : c) degeneracy = poly_lcm(degeneracy, e.denominator().with_ring(sring));
  out.exceptional = monic_squarefree(degeneracy);

  // FF^3 nonzero iff rank(a, b, c) = 3: gcd of the 3x3 minors.
  const auto& rows = germ.series.coeffs;
  std::size_t m = rows[0].size();
  Poly g(sring);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        Matrix<RationalFunction> sub(3, 3);
        for (std::size_t r = 0; r < 3; ++r) {
          sub(r, 0) = rows[r][i];
          sub(r, 1) = rows[r][j];
          sub(r, 2) = rows[r][k];
        }
        auto minor = determinant(sub);
        if (!minor.is_zero()) g = poly_gcd(g, minor.numerator().with_ring(sring));
      }
  if (g.is_zero()) {
    out.kind = LocusKind::Everywhere;
    out.locus = Poly(sring);
    out.reason = "FF3 generically zero";
  } else {
    out.locus = monic_squarefree(g);
    out.kind = out.locus.is_constant() ? LocusKind::Empty : LocusKind::Points;
    if (out.kind == LocusKind::Points) out.rational_zeros = rational_roots(out.locus, 0);
  }

  auto infinity = profile_normalized(fn, unit(n1, 1), 3);
  out.infinity_ranks = infinity.ranks;
  out.infinity_ff3_nonzero = infinity.ff_nonzero(3);

  std::vector<Rational> exceptional_roots;
  if (!out.exceptional.is_constant()) exceptional_roots = rational_roots(out.exceptional, 0);
  std::size_t extra_zeros = 0;
  for (const auto& s0 : exceptional_roots) {
    VecQ x(n1);
    x[0] = 1;
    x[1] = s0;
    auto prof = profile_normalized(fn, x, 3);
    ExceptionalValue ev{s0, prof.ranks, !prof.ff_nonzero(3)};
    if (ev.ff3_zero && (out.kind != LocusKind::Points || !out.locus.evaluate({s0}).is_zero())) ++extra_zeros;
    out.resolved.push_back(std::move(ev));
  }
  out.unresolved = out.exceptional.is_constant() ? one : monic_squarefree(strip_roots(out.exceptional, 0, exceptional_roots));
  if (out.kind != LocusKind::Everywhere) {
    std::size_t zeros = out.locus.total_degree() + (out.infinity_ff3_nonzero ? 0 : 1) + extra_zeros;
    out.degree_bound_ok = zeros <= 1;
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Goursat: return "Goursat";
    case Verdict::Cartan: return "Cartan";
    case Verdict::NotApplicable: return "NotApplicable";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

VmrtReport classify_line_family(const Hypersurface& h, const LineSpec& l, const std::vector<Rational>& probes,
                                int order) {
  require_caps(h);
  VmrtReport r;
  r.contains_line = contains_line(h, l);
  if (!r.contains_line) {
    r.reason = "line not contained in the hypersurface";
    return r;
  }
  auto nl = normalize_line(h, l);
  r.change = nl.change;
  r.smooth_along_line = smooth_along_line(h, l);
  if (!r.smooth_along_line) {
    r.reason = "hypersurface singular along the line";
    return r;
  }
  std::size_t n = h.ambient_dim;
  r.normal_bundle = normal_bundle_type(h, l);
  if (h.degree < 3) {
    r.reason = "VMRT degree too low";
    return r;
  }
  if (!r.normal_bundle->unbendable()) {
    r.reason = "line is not unbendable, normal bundle " + r.normal_bundle->to_string();
    return r;
  }
  if (n != 5 && n != 6) {
    r.reason = "hypersurface dimension must be 4 or 5";
    return r;
  }

  for (const auto& s0 : probes) {
    VecQ x(n + 1);
    x[0] = 1;
    x[1] = s0;
    auto prof = profile_normalized(nl.surface, x, order);
    prof.point = nl.to_original(x);
    if (!r.certificate && prof.tangent_dim == 1) {
      VecQ origin(prof.affine.front().ring().size());
      if (linear_nondegenerate(prof.affine, origin, n - 2).status == Nondegeneracy::Nondegenerate)
        r.certificate = prof.point;
    }
    r.profiles.push_back(std::move(prof));
  }

  try {
    r.ff3 = ff3_vanishing_locus(h, l);
  } catch (const Error& e) {
    if (n == 6) {
      r.verdict = Verdict::Inconclusive;
      r.reason = e.what();
      return r;
    }
  }

  if (n == 5) {
    if (r.certificate) {
      r.verdict = Verdict::Goursat;
      r.reason = "dimension 4 and the VMRT germ is linearly nondegenerate at a probe, so D is bracket-generating";
    } else {
      r.verdict = Verdict::Inconclusive;
      r.reason = "no probe certified bracket generation";
    }
    return r;
  }

  const auto& loc = *r.ff3;
  bool exceptional_zero = false;
  for (const auto& ev : loc.resolved) exceptional_zero = exceptional_zero || ev.ff3_zero;
  bool known_zero = loc.kind != LocusKind::Empty || !loc.infinity_ff3_nonzero || exceptional_zero;
  if (known_zero) {
    if (r.certificate) {
      r.verdict = Verdict::Goursat;
      r.reason = "FF3 vanishes at some point of the line and D is bracket-generating";
    } else {
      r.verdict = Verdict::Inconclusive;
      r.reason = "FF3 vanishes somewhere but bracket generation is not certified";
    }
  } else if (!loc.unresolved.is_constant()) {
    r.verdict = Verdict::Inconclusive;
    r.reason = "unresolved exceptional values: roots of " + loc.unresolved.to_string();
  } else {
    r.verdict = Verdict::Cartan;
    r.reason = "FF3 nonzero at every point of the line, including infinity";
  }
  return r;
}

VecQ CoordinateMap::apply(const VecQ& x) const {
  VecQ y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = scale[i] * x[perm[i]];
  return y;
}

SymmetryResult check_symmetry(const Hypersurface& h, const CoordinateMap& gamma, const std::optional<LineSpec>& l) {
  std::size_t n1 = h.ring.size();
  if (gamma.perm.size() != n1 || gamma.scale.size() != n1) throw PreconditionError("map has the wrong size");
  std::vector<bool> seen(n1);
  for (auto p : gamma.perm) {
    if (p >= n1 || seen[p]) throw PreconditionError("not a permutation");
    seen[p] = true;
  }
  for (const auto& c : gamma.scale)
    if (c.is_zero()) throw PreconditionError("zero scaling");
  SymmetryResult res;
  std::vector<Poly> images;
  for (std::size_t i = 0; i < n1; ++i) images.push_back(Poly::variable(h.ring, gamma.perm[i]).scaled(gamma.scale[i]));
  Poly fg = h.f.compose(images, h.ring);
  auto c = h.f.coefficient(fg.leading_monomial()) ;
  if (!c.is_zero()) {
    res.factor = fg.leading_coefficient() / c;
    res.symmetric = fg == h.f.scaled(res.factor);
  }
  if (!res.symmetric) res.factor = 0;
  if (!l) return res;

  auto basis = Matrix<Rational>::from_rows({l->p, l->q}).transpose();
  Matrix<Rational> m(2, 2);
  res.preserves_line = true;
  const VecQ* vs[2] = {&l->p, &l->q};
  for (std::size_t col = 0; col < 2; ++col) {
    auto sol = solve_affine_system(basis, gamma.apply(*vs[col]));
    if (sol.kind != SolveKind::Unique) {
      res.preserves_line = false;
      return res;
    }
    m(0, col) = sol.particular[0];
    m(1, col) = sol.particular[1];
  }
  auto point = [&](const Rational& u, const Rational& v) {
    VecQ x(n1);
    for (std::size_t i = 0; i < n1; ++i) x[i] = u * l->p[i] + v * l->q[i];
    Rational last;
    for (const auto& xi : x)
      if (!xi.is_zero()) last = xi;
    for (auto& xi : x) xi /= last;
    return x;
  };
  if (m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1)) {
    res.fixes_line_pointwise = true;
    return res;
  }
  Ring lr({"lambda"});
  Poly lam = Poly::variable(lr, 0);
  Poly charpoly = lam * lam - lam.scaled(m(0, 0) + m(1, 1)) + Poly::constant(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0), lr);
  for (const auto& ev : rational_roots(charpoly, 0)) {
    Matrix<Rational> shifted = m;
    shifted(0, 0) -= ev;
    shifted(1, 1) -= ev;
    for (const auto& k : rref_rank_kernel(shifted).kernel) res.fixed_points.push_back(point(k[0], k[1]));
  }
  return res;
}

template std::vector<Poly> vmrt_equations(const Hypersurface&, const std::vector<Rational>&);
template std::vector<PolyRF> vmrt_equations(const Hypersurface&, const std::vector<RationalFunction>&);
template std::vector<Poly> affine_vmrt(const Hypersurface&, const std::vector<Rational>&, std::optional<std::size_t>);
template std::vector<PolyRF> affine_vmrt(const Hypersurface&, const std::vector<RationalFunction>&,
                                         std::optional<std::size_t>);

}  // namespace unbendable
