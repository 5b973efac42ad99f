#include "doctest.h"
#include "unbendable/jets.hpp"

using namespace unbendable;

namespace {

std::vector<std::size_t> iota_growth(std::size_t from, std::size_t to) {
  std::vector<std::size_t> g;
  for (std::size_t i = from; i <= to; ++i) g.push_back(i);
  return g;
}

PointQ zeros(std::size_t n) { return PointQ(n, Rational(0)); }

}  // namespace

TEST_CASE("jet chart naming") {
  CHECK(jet_chart(3).names() == std::vector<std::string>{"t", "u", "u1", "u2", "u3"});
  CHECK(build_jet_distribution(2).generators[1].to_string() == "d/dt + u1*d/du + u2*d/du1");
  CHECK_THROWS_AS(build_jet_distribution(0), PreconditionError);
}

TEST_CASE("build_jet_distribution examples") {
  auto j1 = build_jet_distribution(1);
  CHECK(j1.chart.size() == 3);
  CHECK(derived_flag(j1, FlagMode::Strong, 0, zeros(3)).growth_vector == iota_growth(2, 3));
  CHECK(cauchy_characteristic(j1, zeros(3)).generic_rank == 0);
  CHECK(derived_flag(build_jet_distribution(3), FlagMode::Strong, 0, zeros(5)).growth_vector == iota_growth(2, 5));
  CHECK(derived_flag(build_jet_distribution(4), FlagMode::Strong, 0, zeros(6)).growth_vector == iota_growth(2, 6));
  CHECK(growth_vector_at(build_jet_distribution(2), zeros(4)) == iota_growth(2, 4));
  CHECK(regularity_check(build_jet_distribution(3), zeros(5)));
  CHECK(classify_rank2(build_jet_distribution(3), zeros(5)).kind == Rank2Class::Goursat);
}

TEST_CASE("ode_to_distribution examples") {
  auto d0 = ode_to_distribution(make_ode(4, "0"));
  CHECK(derived_flag(d0, FlagMode::Strong, 0, zeros(5)).growth_vector == iota_growth(2, 5));
  auto d1 = ode_to_distribution(make_ode(4, "u3^3"));
  CHECK(derived_flag(d1, FlagMode::Strong, 0, zeros(5)).growth_vector == iota_growth(2, 5));
  auto d2 = ode_to_distribution(make_ode(2, "u1"));
  CHECK(derived_flag(d2, FlagMode::Strong, 0, zeros(3)).growth_vector == iota_growth(2, 3));
  CHECK(d1.generators[1].to_string() == "d/dt + u1*d/du + u2*d/du1 + u3*d/du2 + u3^3*d/du3");
}

TEST_CASE("check_goursat_ode_form examples") {
  auto z = check_goursat_ode_form(make_ode(4, "0"));
  CHECK(z.admissible);
  for (const auto& a : z.a) CHECK(a.is_zero());

  auto f = check_goursat_ode_form(make_ode(4, "t*u3^3 + u"));
  CHECK(f.admissible);
  CHECK(f.a[3].to_string() == "t");
  CHECK(f.a[0].to_string() == "u");
  CHECK(f.a[1].is_zero());
  CHECK(f.a[2].is_zero());

  auto bad = check_goursat_ode_form(make_ode(4, "u3^4"));
  CHECK_FALSE(bad.admissible);
  CHECK(bad.witness == "u3^4");

  auto rat = check_goursat_ode_form(make_ode(3, "(u2^2 + t)/(1 + u^2)"));
  CHECK(rat.admissible);
  CHECK(rat.a[2].to_string() == "1/(u^2 + 1)");
  CHECK_THROWS_AS(check_goursat_ode_form(make_ode(3, "1/u2")), PreconditionError);
}

TEST_CASE("property: strong and weak jet flags agree for k = 1..6") {
  for (int k = 1; k <= 6; ++k) {
    auto d = build_jet_distribution(k);
    auto s = derived_flag(d, FlagMode::Strong, 0, zeros(d.chart.size()));
    auto w = derived_flag(d, FlagMode::Weak, 0, zeros(d.chart.size()));
    CHECK(s.growth_vector == iota_growth(2, std::size_t(k + 2)));
    REQUIRE(s.steps.size() == w.steps.size());
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
      CHECK(s.steps[i].generic_rank == w.steps[i].generic_rank);
      CHECK(in_span(s.steps[i].generators, w.steps[i].generators));
    }
  }
}

TEST_CASE("property: ODE distributions match the jet system after adding the top fiber") {
  const char* rhs[] = {"0", "u3^3", "t*u3^3 + u", "u1*u2 - t^2", "(u3 + 1)/(1 + t^2)"};
  auto j = build_jet_distribution(3);
  for (const char* f : rhs) {
    auto d = ode_to_distribution(make_ode(4, f));
    CHECK(generic_rank(d.generators) == 2);
    CHECK(in_span(j.generators, d.generators));
    auto top = VectorField::coordinate(d.chart, 4);
    std::vector<VectorField> a = d.generators, b = j.generators;
    a.push_back(top);
    b.push_back(top);
    CHECK(in_span(a, b));
    CHECK(in_span(b, a));
    CHECK(classify_rank2(d, zeros(5)).kind == Rank2Class::Goursat);
  }
}
