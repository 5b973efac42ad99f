#include <random>

#include "doctest.h"
#include "unbendable/fundforms.hpp"
#include "unbendable/parser.hpp"

using namespace unbendable;

namespace {

using VecQ = std::vector<Rational>;

VecQ vec(std::initializer_list<long> xs) {
  VecQ v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

Ring z_chart() { return Ring({"z2", "z3", "z4", "z5", "z6"}); }

std::vector<Poly> parse_all(const Ring& r, const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, r));
  return out;
}

std::vector<Poly> p_side() {
  return parse_all(z_chart(), {"z2 + z3 + z4 + z5", "3*z3 + z4 + 2*z5 + z2^2 + z3^2 + 3*z6^2",
                               "3*z3 + z5 + 2*z3^2 + 3*z6^2 + z4^3 + z5^3 + 2*z6^3",
                               "z2^4 + z3^4 + z4^4 + z5^4 + z6^4 + z3 + z3^2 + z6^2 + z5^3 + z6^3"});
}

std::vector<Poly> q_side() {
  return parse_all(z_chart(), {"-z2 + z3 + z4 - z5", "3*z3 + z4 - 2*z5 + z2^2 + z3^2 + z6^2",
                               "3*z3 - z5 + 2*z3^2 + z6^2 - z4^3 + z5^3",
                               "z2^4 + z3^4 + z4^4 + z5^4 + z6^4 + z3 + z3^2 + z6^2 + z5^3 + z6^3"});
}

CurveGerm<Rational> reparametrized(const CurveGerm<Rational>& g, const Rational& lambda) {
  int n = g.series.order;
  PowerSeries<Rational> s(n);
  s.c[1] = 1;
  if (n >= 2) s.c[2] = lambda;
  CurveGerm<Rational> out = g;
  out.series.exact = false;
  std::vector<PowerSeries<Rational>> powers{PowerSeries<Rational>::constant(Rational(1), n)};
  for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * s);
  for (std::size_t i = 0; i < g.base.size(); ++i)
    for (int j = 1; j <= n; ++j) {
      Rational acc;
      for (int k = 1; k <= n; ++k) acc += g.series.coeffs[std::size_t(k - 1)][i] * powers[std::size_t(k)].c[std::size_t(j)];
      out.series.coeffs[std::size_t(j - 1)][i] = acc;
    }
  return out;
}

}  // namespace

TEST_CASE("zariski_tangent examples") {
  auto p = zariski_tangent(p_side(), VecQ(5));
  CHECK(p.dimension == 1);
  CHECK(p.kernel[0] == vec({0, 0, 0, 0, 1}));
  auto q = zariski_tangent(q_side(), VecQ(5));
  CHECK(q.dimension == 1);
  CHECK(q.kernel[0] == vec({0, 0, 0, 0, 1}));
  Ring r({"z2", "z3"});
  auto t = zariski_tangent(parse_all(r, {"z2 - z3^2"}), VecQ(2));
  CHECK(t.dimension == 1);
  CHECK(t.kernel[0] == vec({0, 1}));
  CHECK_THROWS_AS(zariski_tangent(parse_all(r, {"z2 - z3^2 + 1"}), VecQ(2)), PreconditionError);
}

TEST_CASE("branch_expand on the first chart") {
  auto g = branch_expand(p_side(), VecQ(5), std::nullopt, 4);
  CHECK(g.transverse == 4);
  CHECK(g.series.coefficient(1) == vec({0, 0, 0, 0, 1}));
  CHECK(g.series.coefficient(2) == vec({1, -1, 0, 0, 0}));
  CHECK(g.series.coefficient(3) == vec({-1, -1, 1, 1, 0}));
  CHECK(g.series.coefficient(4) == vec({2, -2, -4, 4, 0}));
  CHECK(branch_residuals_vanish(p_side(), g));
  CHECK_FALSE(g.series.exact);
  auto f = osculating_flag(g);
  CHECK(f.ranks == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(f.ff_nonzero(2));
  CHECK(f.ff_nonzero(3));
  CHECK(f.ff_nonzero(4));
}

TEST_CASE("branch_expand on the second chart") {
  auto g = branch_expand(q_side(), VecQ(5), std::size_t(4), 4);
  CHECK(g.series.coefficient(1) == vec({0, 0, 0, 0, 1}));
  CHECK(g.series.coefficient(2) == vec({-1, -1, -2, -2, 0}));
  CHECK(g.series.coefficient(3) == vec({-1, -1, -3, -3, 0}));
  CHECK(g.series.coefficient(4) == vec({-2, -2, -4, -4, 0}));
  VecQ twice_b;
  for (const auto& x : g.series.coefficient(2)) twice_b.push_back(x * Rational(2));
  CHECK(g.series.coefficient(4) == twice_b);
  auto f = osculating_flag(g);
  CHECK(f.ranks == std::vector<std::size_t>{1, 2, 3, 3});
  CHECK(f.ff_nonzero(3));
  CHECK_FALSE(f.ff_nonzero(4));
}

TEST_CASE("branch_expand small cases and errors") {
  Ring r({"z2", "z3"});
  auto sys = parse_all(r, {"z2 - z3^2"});
  auto g = branch_expand(sys, VecQ(2), std::size_t(1), 3);
  CHECK(g.series.coefficient(1) == vec({0, 1}));
  CHECK(g.series.coefficient(2) == vec({1, 0}));
  CHECK(g.series.coefficient(3) == vec({0, 0}));
  CHECK(g.series.exact);
  CHECK_THROWS_AS(branch_expand(sys, VecQ(2), std::size_t(0), 3), PreconditionError);
  Ring r3({"x", "y", "z"});
  CHECK_THROWS_AS(branch_expand(parse_all(r3, {"x*y"}), VecQ(3), std::nullopt, 3), PreconditionError);
  CHECK_THROWS_AS(branch_expand(parse_all(r3, {"x - y^2", "z"}), VecQ(3), std::nullopt, 0), PreconditionError);
}

TEST_CASE("branch_expand over a parameter field") {
  Ring r({"s", "x", "y"});
  std::vector<PolyRF> sys{to_parametric(parse_polynomial("x - s*y^2 - y^3", r), {"s"})};
  std::vector<RationalFunction> base(2);
  auto g = branch_expand(sys, base, std::nullopt, 3);
  CHECK(g.transverse == 1);
  CHECK(g.series.coefficient(2)[0].to_string() == "s");
  CHECK(g.series.coefficient(3)[0].to_string() == "1");
  CHECK(g.series.exact);
  CHECK(osculating_flag(g).ranks == std::vector<std::size_t>{1, 2, 2});
  for (long s0 : {-2, 3, 7}) {
    auto gq = branch_expand(std::vector<Poly>{specialize(sys[0], {Rational(s0)})}, VecQ(2), std::size_t(1), 3);
    for (int k = 1; k <= 3; ++k)
      for (std::size_t i = 0; i < 2; ++i)
        CHECK(specialize(g.series.coefficient(k)[i], {Rational(s0)}) == gq.series.coefficient(k)[i]);
  }
}

TEST_CASE("osculating_flag and nondegeneracy examples") {
  Ring r4({"x1", "x2", "x3", "x4"});
  std::vector<VecQ> rnc{vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1})};
  auto g = germ_from_coefficients(r4, rnc);
  CHECK(osculating_flag(g).ranks == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(linear_nondegenerate(g, 4).status == Nondegeneracy::Nondegenerate);

  Ring r3({"x", "y", "z"});
  auto planar = germ_from_coefficients(r3, std::vector<VecQ>{vec({1, 0, 0}), vec({0, 1, 0})});
  CHECK(linear_nondegenerate(planar, 3).status == Nondegeneracy::Degenerate);

  auto res = linear_nondegenerate(p_side(), VecQ(5), 4);
  CHECK(res.status == Nondegeneracy::Nondegenerate);
  CHECK(res.ranks.back() == 4);
  auto q = linear_nondegenerate(q_side(), VecQ(5), 4);
  // every coefficient satisfies z2 = z3 and z4 = z5, so the rank stays 3
  CHECK(q.status == Nondegeneracy::Undecided);
  CHECK(q.ranks.back() == 3);
  CHECK(q.order == 6);

  auto truncated = branch_expand(p_side(), VecQ(5), std::nullopt, 2);
  CHECK(linear_nondegenerate(truncated, 4).status == Nondegeneracy::Undecided);
}

TEST_CASE("property: residuals vanish and rank increments are 0 or 1") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-3, 3);
  Ring r({"x", "y", "z"});
  for (int trial = 0; trial < 25; ++trial) {
    // z and y graphs over x with random nonlinear terms
    auto term = [&] { return std::to_string(coef(rng)); };
    std::vector<Poly> sys = parse_all(
        r, {"y - (" + term() + ")*x^2 - (" + term() + ")*x*y - (" + term() + ")*z^2 - (" + term() + ")*x^3",
            "z - (" + term() + ")*x^2 - (" + term() + ")*y^2 - (" + term() + ")*x*z + (" + term() + ")*x^4"});
    auto g = branch_expand(sys, VecQ(3), std::nullopt, 5);
    CHECK(g.transverse == 0);
    CHECK(branch_residuals_vanish(sys, g));
    auto ranks = osculating_flag(g).ranks;
    CHECK(ranks[0] == 1);
    for (std::size_t k = 1; k < ranks.size(); ++k) CHECK((ranks[k] - ranks[k - 1] <= 1));
  }
}

TEST_CASE("property: osculating ranks survive reparametrization and linear changes") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (auto sys : {p_side(), q_side()}) {
    auto g = branch_expand(sys, VecQ(5), std::nullopt, 4);
    auto ranks = osculating_flag(g).ranks;
    for (long lambda : {-2, -1, 1, 3}) CHECK(osculating_flag(reparametrized(g, Rational(lambda))).ranks == ranks);
    for (int trial = 0; trial < 10; ++trial) {
      Matrix<Rational> a(4, 4);
      do {
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) a(i, j) = coef(rng);
      } while (determinant(a).is_zero());
      auto changed = g;
      for (auto& c : changed.series.coeffs) {
        VecQ head(c.begin(), c.begin() + 4);
        auto img = a.apply(head);
        std::copy(img.begin(), img.end(), c.begin());
      }
      CHECK(osculating_flag(changed).ranks == ranks);
    }
  }
}
