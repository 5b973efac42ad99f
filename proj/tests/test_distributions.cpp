#include <random>

#include "doctest.h"
#include "unbendable/distributions.hpp"

using namespace unbendable;

namespace {

Ring chart(std::vector<std::string> names) { return Ring(std::move(names)); }

DistributionSpec make(const Ring& c, std::vector<std::string> gens, std::string name = "D") {
  DistributionSpec d;
  d.chart = c;
  d.name = std::move(name);
  for (const auto& g : gens) d.generators.push_back(VectorField::parse(g, c));
  return d;
}

DistributionSpec hilbert_cartan() {
  return make(chart({"x", "y", "p", "q", "z"}), {"d/dq", "d/dx + p*d/dy + q*d/dp + q^2*d/dz"}, "hilbert-cartan");
}

PointQ zeros(std::size_t n) { return PointQ(n, Rational(0)); }

}  // namespace

TEST_CASE("lie_bracket examples") {
  Ring xy = chart({"x", "y"});
  auto b = lie_bracket(VectorField::parse("x*d/dy", xy), VectorField::parse("d/dx", xy));
  CHECK(b == VectorField::parse("-d/dy", xy));

  auto hc = hilbert_cartan();
  auto v12 = lie_bracket(hc.generators[0], hc.generators[1]);
  CHECK(v12 == VectorField::parse("d/dp + 2*q*d/dz", hc.chart));
  CHECK(v12.to_string() == "d/dp + 2*q*d/dz");

  // [sum a_i(l) d/dl_i, sum l_i d/dx_i] = sum a_i d/dx_i (no d/dl terms for this choice).
  Ring c = chart({"l1", "l2", "x1", "x2"});
  auto v = VectorField::parse("(l1^2+1)*d/dl1 + l2*l1*d/dl2", c);
  auto w = VectorField::parse("l1*d/dx1 + l2*d/dx2", c);
  CHECK(lie_bracket(v, w) == VectorField::parse("(l1^2+1)*d/dx1 + l2*l1*d/dx2", c));
}

TEST_CASE("derived_flag examples") {
  Ring xyz = chart({"x", "y", "z"});
  auto inv = make(chart({"x", "y"}), {"d/dx", "d/dy"});
  auto r = derived_flag(inv, FlagMode::Strong, 0, zeros(2));
  CHECK(r.growth_vector == std::vector<std::size_t>{2});
  CHECK(r.stabilized_at == 0);

  auto hc = hilbert_cartan();
  auto s = derived_flag(hc, FlagMode::Strong, 0, zeros(5));
  auto w = derived_flag(hc, FlagMode::Weak, 0, zeros(5));
  CHECK(s.growth_vector == std::vector<std::size_t>{2, 3, 5});
  CHECK(w.growth_vector == std::vector<std::size_t>{2, 3, 5});
  CHECK(s.bracket_generating);
  CHECK(generic_rank(w.steps[2].generators) == generic_rank(s.steps[2].generators));

  auto flat = make(xyz, {"d/dx", "d/dy"});
  auto fr = derived_flag(flat, FlagMode::Strong, 0, zeros(3));
  CHECK_FALSE(fr.bracket_generating);
  CHECK(fr.growth_vector == std::vector<std::size_t>{2});

  auto pole = make(xyz, {"d/dx", "1/x*d/dy"});
  CHECK_THROWS_AS(derived_flag(pole, FlagMode::Strong, 0, zeros(3)), PreconditionError);
  CHECK_THROWS_AS(derived_flag(hc, FlagMode::Strong, 1, zeros(5)), InternalError);
}

TEST_CASE("growth_vector_at") {
  auto inv = make(chart({"x", "y"}), {"d/dx", "d/dy"});
  CHECK(growth_vector_at(inv, {Rational(3), Rational(-1)}) == std::vector<std::size_t>{2});
  auto hc = hilbert_cartan();
  CHECK(growth_vector_at(hc, {Rational(1), Rational(2), Rational(0), Rational(-1), Rational(5)}) ==
        std::vector<std::size_t>{2, 3, 5});
}

TEST_CASE("regularity_check examples") {
  Ring xy = chart({"x", "y"});
  CHECK_FALSE(regularity_check(make(xy, {"d/dx", "x*d/dy"}), zeros(2)));
  CHECK(regularity_check(make(xy, {"d/dx", "x*d/dy"}), {Rational(1), Rational(0)}));
  CHECK(regularity_check(hilbert_cartan(), zeros(5)));
}

TEST_CASE("cauchy_characteristic examples") {
  auto inv = make(chart({"x", "y", "z"}), {"d/dx", "d/dy"});
  CHECK(cauchy_characteristic(inv, zeros(3)).generic_rank == 2);
  CHECK(cauchy_characteristic(hilbert_cartan(), zeros(5)).generic_rank == 0);
  auto j1 = make(chart({"t", "u", "u1"}), {"d/du1", "d/dt + u1*d/du"});
  auto ch = cauchy_characteristic(j1, zeros(3));
  CHECK(ch.generic_rank == 0);
  CHECK(ch.rank_at_point == 0);
  // Rank-3 distribution with a one-dimensional characteristic d/dw.
  auto c = make(chart({"t", "u", "u1", "w"}), {"d/du1", "d/dt + u1*d/du", "d/dw"});
  auto cc = cauchy_characteristic(c, zeros(4));
  CHECK(cc.generic_rank == 1);
  REQUIRE(cc.generic_basis.size() == 1);
  CHECK(in_span({VectorField::coordinate(c.chart, 3)}, cc.generic_basis));
}

TEST_CASE("levi_tensor_at examples") {
  auto inv = make(chart({"x", "y", "z"}), {"d/dx", "d/dy"});
  CHECK(levi_tensor_at(inv, zeros(3)).is_zero());
  auto j1 = make(chart({"t", "u", "u1"}), {"d/du1", "d/dt + u1*d/du"});
  auto lt = levi_tensor_at(j1, zeros(3));
  CHECK(lt.image_rank == 1);
  CHECK_FALSE(lt.entries[0][1][0].is_zero());
  CHECK(lt.entries[0][1][0] == -lt.entries[1][0][0]);
  CHECK(lt.entries[0][0][0].is_zero());
  auto ddhc = derived_flag(hilbert_cartan(), FlagMode::Strong, 0, zeros(5)).steps[1];
  DistributionSpec dd{hilbert_cartan().chart, ddhc.generators, "dD", {}};
  CHECK(levi_tensor_at(dd, zeros(5)).image_rank == 2);
  CHECK(levi_tensor_at(hilbert_cartan(), zeros(5)).image_rank == 1);
}

TEST_CASE("prolong examples") {
  auto tj0 = make(chart({"t", "u"}), {"d/dt", "d/du"});
  auto pr = prolong(tj0);
  CHECK(pr.chart.names() == std::vector<std::string>{"t", "u", "p2"});
  CHECK(pr.generators[0] == VectorField::coordinate(pr.chart, 2));
  CHECK(pr.generators[1] == VectorField::parse("d/dt + p2*d/du", pr.chart));
  auto f = derived_flag(pr, FlagMode::Strong, 0, zeros(3));
  CHECK(f.growth_vector == std::vector<std::size_t>{2, 3});
  CHECK(cauchy_characteristic(pr, zeros(3)).generic_rank == 0);

  // d(pr(J^2)) = pi^{-1} J^2 as a rank identity.
  auto j2 = make(chart({"t", "u", "u1", "u2"}), {"d/du2", "d/dt + u1*d/du + u2*d/du1"});
  auto pj = prolong(j2);
  auto step1 = derived_flag(pj, FlagMode::Strong, 0, zeros(5)).steps[1];
  auto pulled = pullback_to(j2, pj.chart, true);
  CHECK(step1.generic_rank == 3);
  CHECK(generic_rank(pulled.generators) == 3);
  CHECK(in_span(pulled.generators, step1.generators));
}

TEST_CASE("classify_rank2 examples") {
  auto j3 = make(chart({"t", "u", "u1", "u2", "u3"}), {"d/du3", "d/dt + u1*d/du + u2*d/du1 + u3*d/du2"});
  CHECK(classify_rank2(j3, zeros(5)).kind == Rank2Class::Goursat);
  CHECK(classify_rank2(hilbert_cartan(), zeros(5)).kind == Rank2Class::Cartan);
  auto flat = make(chart({"x", "y", "z"}), {"d/dx", "d/dy"});
  CHECK(classify_rank2(flat, zeros(3)).kind == Rank2Class::NotBracketGenerating);
  auto irr = make(chart({"x", "y", "z"}), {"d/dx", "d/dy + x^2*d/dz"});
  CHECK(classify_rank2(irr, zeros(3)).kind == Rank2Class::Irregular);
  CHECK(classify_rank2(irr, {Rational(1), Rational(0), Rational(0)}).kind == Rank2Class::Goursat);
  auto rank3 = make(chart({"x", "y", "z"}), {"d/dx", "d/dy", "d/dz"});
  CHECK_THROWS_AS(classify_rank2(rank3, zeros(3)), PreconditionError);
}

TEST_CASE("annihilator_coframe examples") {
  auto hc = hilbert_cartan();
  auto dd = derived_flag(hc, FlagMode::Strong, 0, zeros(5)).steps[1].generators;
  auto forms = annihilator_coframe(dd);
  REQUIRE(forms.size() == 2);
  for (const auto& w : forms)
    for (const auto& v : dd) {
      RationalFunction s;
      for (std::size_t i = 0; i < 5; ++i) s += w[i] * v.components[i];
      CHECK(s.is_zero());
    }
  auto flat = make(chart({"x", "y", "z"}), {"d/dx", "d/dy"});
  auto f1 = annihilator_coframe(flat.generators);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0][0].is_zero());
  CHECK(f1[0][1].is_zero());
  CHECK(f1[0][2].is_one());
  auto j1 = make(chart({"t", "u", "u1"}), {"d/du1", "d/dt + u1*d/du"});
  auto c = annihilator_coframe(j1.generators);
  REQUIRE(c.size() == 1);
  // du - u1 dt up to scale.
  CHECK(c[0][0] == -c[0][1] * RationalFunction::variable(j1.chart, 2));
  CHECK(c[0][2].is_zero());
}

TEST_CASE("zelenko_null_field on the Hilbert-Cartan distribution") {
  auto z = zelenko_null_field(hilbert_cartan(), zeros(5));
  CHECK(z.chart.size() == 7);
  CHECK(z.sigma_rank == 6);
  CHECK(z.theta_vanishes);
  CHECK(z.transverse_to_fiber);
  CHECK(z.projects_into_d);
  CHECK(z.passed());
  for (auto d : z.null_dims_at_probes) CHECK(d == 1);
  // sigma is antisymmetric.
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = 0; b < 7; ++b) CHECK(z.sigma(a, b) == -z.sigma(b, a));
  auto j3 = make(chart({"t", "u", "u1", "u2", "u3"}), {"d/du3", "d/dt + u1*d/du + u2*d/du1 + u3*d/du2"});
  CHECK_THROWS_AS(zelenko_null_field(j3, zeros(5)), PreconditionError);
}

namespace {

std::string random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  std::string out = std::to_string(coef(rng)) + " + (" + std::to_string(coef(rng)) + ")*" + vars[pick(rng)];
  for (int t = 0; t < 2; ++t) out += " + (" + std::to_string(coef(rng)) + ")*" + vars[pick(rng)] + "*" + vars[pick(rng)];
  return out;
}

VectorField random_field(std::mt19937_64& rng, const Ring& c) {
  std::string text;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::string comp = "(" + random_poly(rng, c.names()) + ")";
    if (rng() % 4 == 0) comp += "/(2 + " + c.name(rng() % c.size()) + ")";
    text += (i ? " + " : "") + comp + "*d/d" + c.name(i);
  }
  return VectorField::parse(text, c);
}

}  // namespace

TEST_CASE("property: bracket is antisymmetric and satisfies Jacobi") {
  std::mt19937_64 rng(23);
  Ring c = chart({"x", "y", "z"});
  for (int trial = 0; trial < 100; ++trial) {
    auto u = random_field(rng, c), v = random_field(rng, c), w = random_field(rng, c);
    CHECK(lie_bracket(u, v) == VectorField::zero(c) - lie_bracket(v, u));
    auto jac = lie_bracket(u, lie_bracket(v, w)) + lie_bracket(v, lie_bracket(w, u)) + lie_bracket(w, lie_bracket(u, v));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("property: pointwise flag ranks never exceed generic ranks") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> coord(-4, 4);
  auto hc = hilbert_cartan();
  auto oddity = make(chart({"x", "y", "z", "w"}), {"d/dx + y^2*d/dz", "d/dy + x*z*d/dw"});
  for (const auto* d : {&hc, &oddity})
    for (auto mode : {FlagMode::Strong, FlagMode::Weak}) {
      int done = 0;
      while (done < 10) {
        PointQ p(d->chart.size());
        for (auto& x : p) x = coord(rng);
        auto flag = derived_flag(*d, mode, 0, p);
        for (const auto& s : flag.steps) CHECK(s.probe_rank <= s.generic_rank);
        ++done;
      }
    }
}
