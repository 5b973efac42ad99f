#include "unbendable/distributions.hpp"

#include "unbendable/parser.hpp"

namespace unbendable {

namespace {

Rational eval_at(const RationalFunction& f, const PointQ& pt) {
  if (f.is_constant()) return f.constant_value();
  try {
    return f.evaluate(pt);
  } catch (const DomainError&) {
    throw PreconditionError("probe invalid, supply another point (a denominator vanishes there)");
  }
}

Matrix<Rational> evaluate(const Matrix<RationalFunction>& m, const PointQ& pt) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = eval_at(m(i, j), pt);
  return out;
}

void check_probe(const Ring& chart, const PointQ& pt) {
  if (pt.size() != chart.size()) throw PreconditionError("probe has wrong dimension for the chart");
}

std::string fresh_name(const Ring& chart, const std::string& base) {
  std::string n = base;
  while (chart.index_of(n)) n += "_";
  return n;
}

}  // namespace

VectorField::VectorField(Ring c, std::vector<RationalFunction> comps) : chart(std::move(c)), components(std::move(comps)) {
  if (components.size() != chart.size()) throw PreconditionError("vector field has wrong number of components");
  for (auto& f : components) f = f.with_ring(chart);
}

VectorField VectorField::zero(const Ring& chart) {
  return VectorField(chart, std::vector<RationalFunction>(chart.size(), RationalFunction(Poly(chart))));
}

VectorField VectorField::coordinate(const Ring& chart, std::size_t i) {
  VectorField v = zero(chart);
  v.components.at(i) = RationalFunction(Poly::constant(Rational(1), chart));
  return v;
}

VectorField VectorField::parse(const std::string& text, const Ring& chart) {
  return VectorField(chart, parse_vector_field(text, chart));
}

bool VectorField::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

VectorField VectorField::operator+(const VectorField& o) const {
  if (!(chart == o.chart)) throw RingMismatch("vector fields on different charts");
  VectorField r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r.components[i] += o.components[i];
  return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
  if (!(chart == o.chart)) throw RingMismatch("vector fields on different charts");
  VectorField r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r.components[i] -= o.components[i];
  return r;
}

VectorField VectorField::scaled(const RationalFunction& f) const {
  VectorField r = *this;
  for (auto& c : r.components) c *= f;
  return r;
}

RationalFunction VectorField::apply(const RationalFunction& f) const {
  RationalFunction sum{Poly(chart)};
  for (std::size_t j = 0; j < dim(); ++j)
    if (!components[j].is_zero()) sum += components[j] * f.derivative(j);
  return sum;
}

std::vector<Rational> VectorField::evaluate(const PointQ& pt) const {
  std::vector<Rational> out;
  out.reserve(dim());
  for (const auto& c : components) out.push_back(c.is_constant() ? c.constant_value() : c.evaluate(pt));
  return out;
}

std::string VectorField::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    const auto& c = components[i];
    if (c.is_zero()) continue;
    bool neg = coeff_is_negative(c);
    RationalFunction mag = neg ? -c : c;
    std::string term = "d/d" + chart.name(i);
    if (!mag.is_one()) term = (coeff_is_atomic(mag) ? mag.to_string() : "(" + mag.to_string() + ")") + "*" + term;
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

VectorField lie_bracket(const VectorField& v, const VectorField& w) {
  if (!(v.chart == w.chart)) throw RingMismatch("lie bracket of fields on different charts");
  VectorField r = VectorField::zero(v.chart);
  for (std::size_t i = 0; i < v.dim(); ++i) r.components[i] = v.apply(w.components[i]) - w.apply(v.components[i]);
  return r;
}

const char* to_string(FlagMode m) { return m == FlagMode::Strong ? "strong" : "weak"; }

Matrix<RationalFunction> generator_matrix(const std::vector<VectorField>& fields) {
  std::vector<std::vector<RationalFunction>> rows;
  for (const auto& f : fields) rows.push_back(f.components);
  return Matrix<RationalFunction>::from_rows(rows);
}

std::size_t generic_rank(const std::vector<VectorField>& fields) {
  if (fields.empty()) return 0;
  return rank_of(generator_matrix(fields));
}

std::size_t rank_at(const std::vector<VectorField>& fields, const PointQ& pt) {
  if (fields.empty()) return 0;
  check_probe(fields.front().chart, pt);
  return rank_of(evaluate(generator_matrix(fields), pt));
}

std::vector<VectorField> prune_to_basis(const std::vector<VectorField>& fields) {
  if (fields.empty()) return {};
  std::vector<VectorField> out;
  for (auto c : independent_columns(generator_matrix(fields).transpose())) out.push_back(fields[c]);
  return out;
}

bool in_span(const std::vector<VectorField>& span, const std::vector<VectorField>& fields) {
  std::size_t base = generic_rank(span);
  std::vector<VectorField> all = span;
  all.insert(all.end(), fields.begin(), fields.end());
  return generic_rank(all) == base;
}

FlagReport derived_flag(const DistributionSpec& d, FlagMode mode, std::size_t max_steps, const PointQ& probe) {
  if (d.generators.empty()) throw PreconditionError("distribution has no generators");
  check_probe(d.chart, probe);
  std::size_t dim = d.chart.size();
  if (max_steps == 0) max_steps = dim + 1;
  FlagReport rep;
  rep.mode = mode;

  std::vector<VectorField> base = prune_to_basis(d.generators);
  FlagStep step0;
  step0.generators = base;
  step0.generic_rank = base.size();
  step0.probe_rank = rank_at(d.generators, probe);
  rep.steps.push_back(step0);

  for (std::size_t i = 0;; ++i) {
    const FlagStep& cur = rep.steps.back();
    if (cur.generic_rank == dim) {
      rep.stabilized_at = i;
      break;
    }
    if (i >= max_steps)
      throw InternalError("derived flag did not stabilize within " + std::to_string(max_steps) + " steps");
    std::vector<VectorField> all = cur.generators;
    const auto& g = cur.generators;
    if (mode == FlagMode::Strong) {
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b) all.push_back(lie_bracket(g[a], g[b]));
    } else {
      for (const auto& x : base)
        for (const auto& y : g) all.push_back(lie_bracket(x, y));
    }
    FlagStep next;
    next.generators = prune_to_basis(all);
    next.generic_rank = next.generators.size();
    next.probe_rank = rank_at(all, probe);
    if (next.generic_rank == cur.generic_rank) {
      rep.stabilized_at = i;
      break;
    }
    rep.steps.push_back(std::move(next));
  }
  for (const auto& s : rep.steps) rep.growth_vector.push_back(s.generic_rank);
  rep.bracket_generating = rep.steps.back().generic_rank == dim;
  return rep;
}

std::vector<std::size_t> growth_vector_at(const DistributionSpec& d, const PointQ& pt) {
  FlagReport r = derived_flag(d, FlagMode::Strong, 0, pt);
  std::vector<std::size_t> out;
  for (const auto& s : r.steps)
    if (out.empty() || out.back() != s.probe_rank) out.push_back(s.probe_rank);
  return out;
}

std::vector<std::vector<RationalFunction>> annihilator_coframe(const std::vector<VectorField>& fields) {
  if (fields.empty()) throw PreconditionError("no fields to annihilate");
  return rref_rank_kernel(generator_matrix(fields)).kernel;
}

namespace {

RationalFunction pair(const std::vector<RationalFunction>& form, const VectorField& v) {
  RationalFunction s{Poly(v.chart)};
  for (std::size_t i = 0; i < form.size(); ++i)
    if (!form[i].is_zero() && !v.components[i].is_zero()) s += form[i] * v.components[i];
  return s;
}

}  // namespace

CauchyCharacteristic cauchy_characteristic(const DistributionSpec& d, const PointQ& pt) {
  check_probe(d.chart, pt);
  auto basis = prune_to_basis(d.generators);
  std::size_t k = basis.size();
  CauchyCharacteristic ch;
  std::vector<std::vector<RationalFunction>> forms;
  if (k < d.chart.size()) forms = annihilator_coframe(basis);
  // Row (j, l): sum_i c_i * omega_l([b_i, b_j]) = 0.
  std::vector<std::vector<RationalFunction>> rows;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<VectorField> br;
    for (std::size_t i = 0; i < k; ++i) br.push_back(lie_bracket(basis[i], basis[j]));
    for (const auto& w : forms) {
      std::vector<RationalFunction> row;
      for (std::size_t i = 0; i < k; ++i) row.push_back(pair(w, br[i]));
      rows.push_back(row);
    }
  }
  Matrix<RationalFunction> m = rows.empty() ? Matrix<RationalFunction>(0, k) : Matrix<RationalFunction>::from_rows(rows);
  std::vector<std::vector<RationalFunction>> kernel;
  if (rows.empty()) {
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<RationalFunction> e(k, RationalFunction(0));
      e[i] = RationalFunction(1);
      kernel.push_back(e);
    }
  } else {
    kernel = rref_rank_kernel(m).kernel;
  }
  ch.generic_rank = kernel.size();
  for (const auto& c : kernel) {
    VectorField v = VectorField::zero(d.chart);
    for (std::size_t i = 0; i < k; ++i)
      if (!c[i].is_zero()) v = v + basis[i].scaled(c[i]);
    ch.generic_basis.push_back(v);
  }
  Matrix<Rational> mp = rows.empty() ? Matrix<Rational>(0, k) : evaluate(m, pt);
  auto rr = rref_rank_kernel(mp);
  ch.rank_at_point = rr.kernel.size();
  Matrix<Rational> bp = evaluate(generator_matrix(basis), pt);
  for (const auto& c : rr.kernel) {
    std::vector<Rational> v(d.chart.size());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < v.size(); ++l) v[l] += c[i] * bp(i, l);
    ch.basis_at_point.push_back(v);
  }
  return ch;
}

bool regularity_check(const DistributionSpec& d, const PointQ& pt) {
  for (FlagMode mode : {FlagMode::Strong, FlagMode::Weak}) {
    FlagReport r = derived_flag(d, mode, 0, pt);
    for (const auto& s : r.steps)
      if (s.probe_rank != s.generic_rank) return false;
  }
  CauchyCharacteristic ch = cauchy_characteristic(d, pt);
  return ch.rank_at_point == ch.generic_rank;
}

LeviTensor levi_tensor_at(const DistributionSpec& d, const PointQ& pt) {
  check_probe(d.chart, pt);
  const auto& g = d.generators;
  std::size_t n = d.chart.size();
  LeviTensor lt;
  // Basis of T at pt: independent generator values, then coordinate vectors.
  std::vector<std::vector<Rational>> cols;
  std::vector<std::vector<Rational>> gvals;
  for (const auto& v : g) gvals.push_back(v.evaluate(pt));
  auto indep = independent_columns(Matrix<Rational>::from_rows(gvals).transpose());
  for (auto i : indep) cols.push_back(gvals[i]);
  std::size_t drank = cols.size();
  for (std::size_t e = 0; e < n && cols.size() < n; ++e) {
    std::vector<Rational> unit(n);
    unit[e] = Rational(1);
    auto trial = cols;
    trial.push_back(unit);
    if (rank_of(Matrix<Rational>::from_rows(trial)) == trial.size()) {
      cols = trial;
      lt.complement.push_back(e);
    }
  }
  Matrix<Rational> basis = Matrix<Rational>::from_rows(cols).transpose();
  std::vector<std::vector<Rational>> images;
  lt.entries.assign(g.size(), std::vector<std::vector<Rational>>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      std::vector<Rational> b;
      try {
        b = lie_bracket(g[i], g[j]).evaluate(pt);
      } catch (const DomainError&) {
        throw PreconditionError("probe invalid, supply another point (a denominator vanishes there)");
      }
      auto sol = solve_affine_system(basis, b);
      std::vector<Rational> cls(sol.particular.begin() + long(drank), sol.particular.end());
      lt.entries[i][j] = cls;
      images.push_back(cls);
    }
  lt.image_rank = lt.complement.empty() ? 0 : rank_of(Matrix<Rational>::from_rows(images));
  return lt;
}

DistributionSpec prolong(const DistributionSpec& d) {
  auto basis = prune_to_basis(d.generators);
  std::size_t r = basis.size();
  if (r < 2) throw PreconditionError("prolongation needs rank at least 2");
  std::vector<std::string> extra;
  for (std::size_t i = 2; i <= r; ++i) extra.push_back(fresh_name(d.chart, "p" + std::to_string(i)));
  Ring chart = d.chart.extended(extra);
  std::size_t n = d.chart.size();
  DistributionSpec based = d;
  based.generators = basis;
  auto lifted = pullback_to(based, chart, false).generators;
  DistributionSpec pr;
  pr.chart = chart;
  pr.name = "pr(" + d.name + ")";
  for (std::size_t i = 0; i + 1 < r; ++i) pr.generators.push_back(VectorField::coordinate(chart, n + i));
  VectorField main = lifted[0];
  for (std::size_t i = 1; i < r; ++i)
    main = main + lifted[i].scaled(RationalFunction::variable(chart, n + i - 1));
  pr.generators.push_back(main);
  if (!d.probe.empty()) {
    pr.probe = d.probe;
    pr.probe.resize(chart.size(), Rational(0));
  }
  return pr;
}

DistributionSpec pullback_to(const DistributionSpec& d, const Ring& bigger, bool add_fiber_directions) {
  std::size_t n = d.chart.size();
  std::vector<long> map(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (bigger.name(k) != d.chart.name(k)) throw PreconditionError("chart is not an extension of the base chart");
    map[k] = long(k);
  }
  DistributionSpec out;
  out.chart = bigger;
  out.name = "pullback(" + d.name + ")";
  for (const auto& v : d.generators) {
    VectorField w = VectorField::zero(bigger);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& f = v.components[i];
      w.components[i] = RationalFunction(f.numerator().remapped(bigger, map), f.denominator().remapped(bigger, map));
    }
    out.generators.push_back(w);
  }
  if (add_fiber_directions)
    for (std::size_t i = n; i < bigger.size(); ++i) out.generators.push_back(VectorField::coordinate(bigger, i));
  return out;
}

const char* to_string(Rank2Class c) {
  switch (c) {
    case Rank2Class::Goursat: return "Goursat";
    case Rank2Class::Cartan: return "Cartan";
    case Rank2Class::NotBracketGenerating: return "NotBracketGenerating";
    case Rank2Class::Irregular: return "Irregular";
    case Rank2Class::OtherBracketGenerating: return "OtherBracketGenerating";
  }
  return "?";
}

Rank2Classification classify_rank2(const DistributionSpec& d, const PointQ& pt) {
  if (rank_at(d.generators, pt) != 2) throw PreconditionError("distribution does not have rank 2 at the point");
  Rank2Classification c;
  c.strong = derived_flag(d, FlagMode::Strong, 0, pt);
  std::size_t dim = d.chart.size();
  if (!regularity_check(d, pt)) {
    c.kind = Rank2Class::Irregular;
    c.reason = "some flag member or Ch(D) drops rank at the point";
    return c;
  }
  const auto& g = c.strong.growth_vector;
  if (!c.strong.bracket_generating) {
    c.kind = Rank2Class::NotBracketGenerating;
    c.reason = "flag stabilizes at rank " + std::to_string(g.back()) + " < " + std::to_string(dim);
    return c;
  }
  bool unit = dim >= 3;
  for (std::size_t i = 0; i < g.size(); ++i) unit = unit && g[i] == i + 2;
  if (unit) {
    c.kind = Rank2Class::Goursat;
    c.reason = "growth increases by one at every step";
  } else if (dim == 5 && g == std::vector<std::size_t>{2, 3, 5}) {
    c.kind = Rank2Class::Cartan;
    c.reason = "growth (2,3,5) on a 5-dimensional chart";
  } else {
    c.kind = Rank2Class::OtherBracketGenerating;
    c.reason = "bracket-generating with a growth vector that is neither Goursat nor (2,3,5)";
  }
  return c;
}

ZelenkoNullField zelenko_null_field(const DistributionSpec& d, const PointQ& pt) {
  auto cls = classify_rank2(d, pt);
  if (cls.kind != Rank2Class::Cartan)
    throw PreconditionError(std::string("distribution is not Cartan (") + to_string(cls.kind) + ")");
  ZelenkoNullField z;
  const auto& dd = cls.strong.steps.at(1).generators;  // basis of the first derived distribution
  z.forms = annihilator_coframe(dd);
  if (z.forms.size() != 2) throw InternalError("annihilator of the derived distribution is not rank 2");
  std::size_t n = d.chart.size();
  std::string w1 = fresh_name(d.chart, "w1"), w2 = fresh_name(d.chart, "w2");
  z.chart = d.chart.extended({w1, w2});
  std::vector<long> map(n);
  for (std::size_t k = 0; k < n; ++k) map[k] = long(k);
  auto up = [&](const RationalFunction& f) {
    return RationalFunction(f.numerator().remapped(z.chart, map), f.denominator().remapped(z.chart, map));
  };
  RationalFunction W1 = RationalFunction::variable(z.chart, n), W2 = RationalFunction::variable(z.chart, n + 1);
  std::size_t N = n + 2;
  z.theta.assign(N, RationalFunction(Poly(z.chart)));
  for (std::size_t i = 0; i < n; ++i) z.theta[i] = W1 * up(z.forms[0][i]) + W2 * up(z.forms[1][i]);
  z.sigma = Matrix<RationalFunction>(N, N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) z.sigma(a, b) = z.theta[b].derivative(a) - z.theta[a].derivative(b);
  auto rr = rref_rank_kernel(z.sigma);
  z.sigma_rank = rr.rank;
  if (rr.kernel.size() != 1)
    throw PreconditionError("d(theta) has rank " + std::to_string(rr.rank) + ", expected " + std::to_string(N - 1));
  z.null_field = VectorField(z.chart, rr.kernel[0]);

  RationalFunction th{Poly(z.chart)};
  for (std::size_t i = 0; i < N; ++i) th += z.theta[i] * z.null_field.components[i];
  z.theta_vanishes = th.is_zero();

  VectorField base = VectorField::zero(z.chart);
  for (std::size_t i = 0; i < n; ++i) base.components[i] = z.null_field.components[i];
  z.transverse_to_fiber = !base.is_zero();
  std::vector<VectorField> dgens = pullback_to(d, z.chart, false).generators;
  z.projects_into_d = z.transverse_to_fiber && in_span(dgens, {base});

  const std::vector<std::pair<long, long>> fibers{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 3}};
  for (const auto& [a, b] : fibers) {
    PointQ q = pt;
    q.push_back(Rational(a));
    q.push_back(Rational(b));
    z.null_dims_at_probes.push_back(N - rank_of(evaluate(z.sigma, q)));
  }
  return z;
}

}  // namespace unbendable
