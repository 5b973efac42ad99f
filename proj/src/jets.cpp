#include "unbendable/jets.hpp"

#include "unbendable/parser.hpp"

namespace unbendable {

Ring jet_chart(int k) {
  if (k < 0) throw PreconditionError("jet order must be nonnegative");
  std::vector<std::string> names{"t", "u"};
  for (int i = 1; i <= k; ++i) names.push_back("u" + std::to_string(i));
  return Ring(names);
}

namespace {

// d/dt + sum_{i=0}^{k-1} u_{i+1} d/du_i on jet_chart(k).
VectorField total_derivative(const Ring& c, int k) {
  VectorField v = VectorField::coordinate(c, 0);
  for (int i = 0; i < k; ++i)
    v.components[std::size_t(i + 1)] = RationalFunction::variable(c, std::size_t(i + 2));
  return v;
}

}  // namespace

DistributionSpec build_jet_distribution(int k) {
  if (k < 1) throw PreconditionError("jet distribution needs k >= 1");
  DistributionSpec d;
  d.chart = jet_chart(k);
  d.name = "J" + std::to_string(k);
  d.generators = {VectorField::coordinate(d.chart, std::size_t(k + 1)), total_derivative(d.chart, k)};
  d.probe = PointQ(d.chart.size(), Rational(0));
  return d;
}

OdeSpec make_ode(int order, const std::string& rhs) {
  if (order < 2) throw PreconditionError("ODE order must be at least 2");
  OdeSpec o;
  o.order = order;
  o.rhs = parse_rational_function(rhs, jet_chart(order - 1));
  return o;
}

DistributionSpec ode_to_distribution(const OdeSpec& o) {
  int k = o.order - 1;
  DistributionSpec d;
  d.chart = jet_chart(k);
  d.name = "ode" + std::to_string(o.order);
  VectorField v = total_derivative(d.chart, k);
  v.components[std::size_t(k + 1)] = o.rhs.with_ring(d.chart);
  d.generators = {VectorField::coordinate(d.chart, std::size_t(k + 1)), v};
  d.probe = PointQ(d.chart.size(), Rational(0));
  return d;
}

GoursatOdeForm check_goursat_ode_form(const OdeSpec& o) {
  Ring c = jet_chart(o.order - 1);
  std::size_t top = c.size() - 1;
  RationalFunction f = o.rhs.with_ring(c);
  if (f.denominator().uses_variable(top))
    throw PreconditionError("F is not polynomial in " + c.name(top));
  RationalFunction den(f.denominator());
  auto coeffs = f.numerator().coefficients_in(top);
  GoursatOdeForm g;
  for (auto& a : g.a) a = RationalFunction(Poly(c));
  if (coeffs.size() <= 4) {
    g.admissible = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) g.a[k] = RationalFunction(coeffs[k]) / den;
    return g;
  }
  std::size_t deg = coeffs.size() - 1;
  Poly lead = coeffs[deg] * Poly::monomial(c, Monomial::variable(std::uint32_t(top), std::uint32_t(deg)), Rational(1));
  g.witness = (RationalFunction(lead) / den).to_string();
  return g;
}

}  // namespace unbendable
