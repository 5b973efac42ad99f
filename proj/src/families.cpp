#include "unbendable/families.hpp"

#include <sstream>

#include "unbendable/parser.hpp"

namespace unbendable {

namespace {

Ring zeta_ring(const std::vector<Poly>& zeta) {
  Ring r;
  for (const auto& z : zeta) {
    if (z.ring().is_null()) continue;
    if (z.ring().size() != 1) throw PreconditionError("zeta must be polynomials in one variable");
    if (r.is_null()) r = z.ring();
    else if (!(r == z.ring())) throw RingMismatch("zeta components use different variables");
  }
  return r.is_null() ? Ring({"s"}) : r;
}

std::vector<VectorField> t0_generators(const FamilyChart& fc) {
  std::vector<VectorField> g = fc.V;
  g.insert(g.end(), fc.F.begin(), fc.F.end());
  return g;
}

FlagStep last_or(const FlagReport& r, std::size_t k) { return r.steps[std::min(k, r.steps.size() - 1)]; }

}  // namespace

FamilyChart blowup_family_chart(const std::vector<Poly>& zeta) {
  if (zeta.empty()) throw PreconditionError("zeta has no components");
  Ring zr = zeta_ring(zeta);
  std::vector<std::string> names{zr.name(0)};
  for (std::size_t i = 1; i <= zeta.size(); ++i) names.push_back("x" + std::to_string(i));
  FamilyChart fc;
  fc.chart = Ring(names);
  bool moving = false, nonzero = false;
  VectorField f = VectorField::zero(fc.chart);
  for (std::size_t i = 0; i < zeta.size(); ++i) {
    Poly lifted = zeta[i].ring().is_null() ? Poly::constant(zeta[i].constant_term(), fc.chart)
                                           : zeta[i].remapped(fc.chart, {0});
    moving = moving || !zeta[i].derivative(0).is_zero();
    nonzero = nonzero || !zeta[i].is_zero();
    f.components[i + 1] = RationalFunction(lifted);
  }
  if (!nonzero) throw PreconditionError("zeta is identically zero");
  if (!moving) throw PreconditionError("zeta' vanishes identically");
  fc.V = {VectorField::coordinate(fc.chart, 0)};
  fc.F = {f};
  fc.name = "blowup";
  fc.probe.assign(fc.chart.size(), Rational(0));
  fc.probe[0] = 1;
  return fc;
}

std::vector<Poly> parse_zeta(const std::string& text) {
  Ring r({"s"});
  std::vector<Poly> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_polynomial(item, r));
  return out;
}

FlagReport family_flag(const FamilyChart& fc, std::size_t max_k, const PointQ& probe) {
  FlagReport rep;
  FlagStep step;
  step.generators = prune_to_basis(t0_generators(fc));
  step.generic_rank = step.generators.size();
  step.probe_rank = rank_at(t0_generators(fc), probe);
  rep.steps.push_back(step);
  bool stable = false;
  for (std::size_t k = 0; k < max_k; ++k) {
    const auto& cur = rep.steps.back().generators;
    std::vector<VectorField> all = cur;
    for (const auto& v : fc.V)
      for (const auto& g : cur) all.push_back(lie_bracket(v, g));
    FlagStep next;
    next.generators = prune_to_basis(all);
    next.generic_rank = next.generators.size();
    next.probe_rank = rank_at(all, probe);
    if (!stable && next.generic_rank == rep.steps.back().generic_rank) {
      rep.stabilized_at = k;
      stable = true;
    }
    rep.steps.push_back(std::move(next));
  }
  if (!stable) rep.stabilized_at = max_k;
  for (const auto& s : rep.steps) rep.growth_vector.push_back(s.generic_rank);
  rep.bracket_generating = rep.steps.back().generic_rank == fc.chart.size();
  return rep;
}

bool check_F_invariance(const FamilyChart& fc, std::size_t k, const PointQ& probe) {
  auto flag = family_flag(fc, k, probe);
  const auto& tk = flag.steps[k].generators;
  std::vector<VectorField> brackets;
  for (const auto& f : fc.F)
    for (const auto& g : tk) brackets.push_back(lie_bracket(f, g));
  return in_span(tk, brackets);
}

bool check_T2_identity(const FamilyChart& fc, const PointQ& probe) {
  DistributionSpec t0{fc.chart, t0_generators(fc), fc.name, probe};
  auto weak = last_or(derived_flag(t0, FlagMode::Weak, 0, probe), 2);
  auto strong = last_or(derived_flag(t0, FlagMode::Strong, 0, probe), 2);
  auto t2 = family_flag(fc, 2, probe).steps[2];
  if (weak.generic_rank != t2.generic_rank || strong.generic_rank != t2.generic_rank) return false;
  return in_span(t2.generators, weak.generators) && in_span(t2.generators, strong.generators) &&
         in_span(weak.generators, t2.generators) && in_span(strong.generators, t2.generators);
}

CurveGerm<Rational> zeta_germ(const std::vector<Poly>& zeta, const Rational& s0, int order) {
  Ring tr({"t"});
  Poly shifted = Poly::variable(tr, 0) + Poly::constant(s0, tr);
  std::vector<std::vector<Rational>> coeffs(std::size_t(order), std::vector<Rational>(zeta.size()));
  for (std::size_t i = 0; i < zeta.size(); ++i) {
    Poly z = zeta[i].ring().is_null() ? zeta[i] : zeta[i].compose({shifted}, tr);
    for (int k = 1; k <= order; ++k) coeffs[std::size_t(k - 1)][i] = z.coefficient(Monomial::variable(0, std::uint32_t(k)));
  }
  Ring chart([&] {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= zeta.size(); ++i) names.push_back("x" + std::to_string(i));
    return names;
  }());
  auto g = germ_from_coefficients(chart, coeffs);
  for (std::size_t i = 0; i < zeta.size(); ++i) g.base[i] = zeta[i].ring().is_null() ? zeta[i].constant_term() : zeta[i].evaluate({s0});
  // a polynomial germ is exact only if no terms were cut off
  for (const auto& z : zeta) g.series.exact = g.series.exact && int(z.total_degree()) <= order;
  return g;
}

FamilyChart cartan_family_chart(const DistributionSpec& d, const PointQ& pt, const Rational& fiber_probe) {
  auto z = zelenko_null_field(d, pt);
  std::size_t n = d.chart.size();
  auto names = d.chart.names();
  std::string w = "w";
  while (d.chart.index_of(w)) w += "_";
  names.push_back(w);
  Ring chart(names);
  // w1 = 1, w2 = w
  std::vector<RationalFunction> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(RationalFunction::variable(chart, i));
  images.push_back(RationalFunction(1));
  images.push_back(RationalFunction::variable(chart, n));
  std::vector<RationalFunction> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(z.null_field.components[i].compose(images, chart));
  auto v1 = z.null_field.components[n].compose(images, chart);
  auto v2 = z.null_field.components[n + 1].compose(images, chart);
  comps.push_back(v2 - images[n + 1] * v1);
  FamilyChart fc;
  fc.chart = chart;
  fc.V = {VectorField(chart, comps)};
  fc.F = {VectorField::coordinate(chart, n)};
  fc.name = "cartan";
  fc.probe = pt;
  fc.probe.push_back(fiber_probe);
  return fc;
}

}  // namespace unbendable
