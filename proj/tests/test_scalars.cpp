#include <random>

#include "doctest.h"
#include "unbendable/parser.hpp"
#include "unbendable/poly_gcd.hpp"
#include "unbendable/series.hpp"
#include "unbendable/univariate.hpp"

using namespace unbendable;

namespace {

Ring ring_of(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return Ring(v);
}

Ring x06() { return ring_of({"x0", "x1", "x2", "x3", "x4", "x5", "x6"}); }

Poly random_poly(std::mt19937_64& rng, const Ring& ring, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> coef(-3, 3), nterms(1, max_terms);
  std::vector<Poly::Term> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(ring.size());
    int budget = std::uniform_int_distribution<int>(0, max_deg)(rng);
    for (int k = 0; k < budget; ++k) e[std::uniform_int_distribution<std::size_t>(0, ring.size() - 1)(rng)]++;
    terms.push_back({Monomial::from_dense(e), Rational(coef(rng))});
  }
  return Poly::from_terms(ring, terms);
}

}  // namespace

TEST_CASE("rational normalization") {
  Rational r(mpz_class(6), mpz_class(-4));
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational::parse("0/5").to_string() == "0");
  CHECK(Rational::parse("-12/8") == Rational(mpz_class(-3), mpz_class(2)));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK(Rational(3).pow(4) == Rational(81));
}

TEST_CASE("grevlex order puts the first variable highest") {
  Ring r = ring_of({"y1", "y2", "y3"});
  Poly p = parse_polynomial("y1*y3 + y2^2 + y1^2 + y3", r);
  CHECK(p.to_string() == "y1^2 + y2^2 + y1*y3 + y3");
}

TEST_CASE("parse_expression examples") {
  Ring x = x06();
  Poly p = parse_polynomial("x2^4 + x0^3*x2", x);
  CHECK(p.term_count() == 2);

  Ring z = ring_of({"z2", "z3", "z4", "z5", "z6"});
  Poly g2 = parse_polynomial("3*z3 + z4 + 2*z5 + z2^2 + z3^2 + 3*z6^2", z);
  CHECK(g2.term_count() == 6);
  CHECK(g2.total_degree() == 2);
  CHECK(g2.coefficient(Monomial::variable(4, 2)) == Rational(3));

  Ring s = ring_of({"s"});
  RationalFunction r = parse_rational_function("(s^2-1)/(s+1)", s);
  CHECK(r.is_polynomial());
  CHECK(r.to_string() == "s - 1");
}

TEST_CASE("parse errors carry positions") {
  Ring x = ring_of({"x", "y"});
  try {
    parse_polynomial("x + 2w", x);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_polynomial("x + w", x), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x / y", x), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x + y", x), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x ^ -1", x), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", x), ParseError);
  CHECK(parse_polynomial("x/2", x).to_string() == "1/2*x");
}

TEST_CASE("vector field parsing") {
  Ring c = ring_of({"x", "y", "p", "q", "z"});
  auto v = parse_vector_field("d/dx + p*d/dy + q*d/dp + q^2*d/dz", c);
  REQUIRE(v.size() == 5);
  CHECK(v[0].is_one());
  CHECK(v[1].to_string() == "p");
  CHECK(v[3].is_zero());
  CHECK(v[4].to_string() == "q^2");
  CHECK_THROWS_AS(parse_vector_field("x + d/dx", c), ParseError);
  CHECK_THROWS_AS(parse_vector_field("x*y", c), ParseError);
}

TEST_CASE("partial derivatives") {
  Ring x = x06();
  Poly p = parse_polynomial("x0^3*x2", x);
  CHECK(p.derivative(0) == parse_polynomial("3*x0^2*x2", x));
  Poly f = parse_polynomial(
      "x2^4+x3^4+x4^4+x5^4+x6^4 + x0^3*x2 + x1^3*x3 + x0^2*x1*x4 + x0*x1^2*x5 + x0^2*x2^2 + x1^2*x3^2 + "
      "(x0^2+x0*x1+x1^2)*x6^2 + x0*x4^3 + x1*x5^3 + (x0+x1)*x6^3",
      x);
  std::vector<std::pair<std::size_t, Rational>> on_line;
  for (std::size_t i = 2; i <= 6; ++i) on_line.push_back({i, Rational(0)});
  CHECK(f.derivative(2).partial_evaluate(on_line) == parse_polynomial("x0^3", x));
  CHECK(f.derivative(6).partial_evaluate(on_line).is_zero());
}

TEST_CASE("substitution along a pencil") {
  Ring x = x06();
  Poly f = parse_polynomial(
      "x2^4+x3^4+x4^4+x5^4+x6^4 + x0^3*x2 + x1^3*x3 + x0^2*x1*x4 + x0*x1^2*x5 + x0^2*x2^2 + x1^2*x3^2 + "
      "(x0^2+x0*x1+x1^2)*x6^2 + x0*x4^3 + x1*x5^3 + (x0+x1)*x6^3",
      x);
  Ring target = ring_of({"lam", "y1", "y2", "y3", "y4", "y5", "y6"});
  auto lam = Poly::variable(target, 0);
  std::vector<Poly> images{Poly::constant(Rational(1), target), lam * Poly::variable(target, 1) + Poly(1)};
  for (std::size_t i = 2; i <= 6; ++i) images.push_back(lam * Poly::variable(target, i));
  auto coeffs = f.compose(images, target).coefficients_in(0);
  REQUIRE(coeffs.size() == 5);
  CHECK(coeffs[0].is_zero());
  CHECK(coeffs[1] == parse_polynomial("y2+y3+y4+y5", target));
  CHECK(coeffs[4] == parse_polynomial("y2^4+y3^4+y4^4+y5^4+y6^4+y1^3*y3+y1^2*y3^2+y1^2*y6^2+y1*y5^3+y1*y6^3", target));

  std::vector<Poly> identity;
  for (std::size_t i = 0; i < x.size(); ++i) identity.push_back(Poly::variable(x, i));
  CHECK(f.compose(identity, x) == f);
}

TEST_CASE("binary_form_common_zeros examples") {
  Ring t = ring_of({"t0", "t1"});
  auto r1 = binary_form_common_zeros({parse_polynomial("t0^3", t), parse_polynomial("t1^3", t)});
  CHECK_FALSE(r1.common_zero);
  auto r2 = binary_form_common_zeros({parse_polynomial("t0^3", t), parse_polynomial("t0^2*t1", t)});
  CHECK(r2.common_zero);
  CHECK(r2.gcd == parse_polynomial("t0^2", t));
  CHECK_THROWS_AS(binary_form_common_zeros({Poly(t), Poly(t)}), PreconditionError);
}

TEST_CASE("series_substitute examples") {
  Ring z = ring_of({"z2", "z3"});
  TruncatedSeries<Rational> germ;
  germ.order = 3;
  germ.coeffs = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}, {Rational(0), Rational(0)}};
  auto s = series_substitute(parse_polynomial("z2 - z3^2", z), germ, {Rational(0), Rational(0)});
  CHECK(s.is_zero());

  Ring one = ring_of({"z2"});
  TruncatedSeries<Rational> g2;
  g2.order = 3;
  g2.coeffs = {{Rational(1)}, {Rational(1)}, {Rational(0)}};
  auto s2 = series_substitute(parse_polynomial("z2", one), g2, {Rational(0)});
  CHECK(s2.c[1] == Rational(1));
  CHECK(s2.c[2] == Rational(1));
  CHECK(s2.c[3].is_zero());
  CHECK_FALSE(s2.truncated);
  auto s3 = series_substitute(parse_polynomial("z2^3", one), g2, {Rational(0)});
  CHECK(s3.truncated);
  CHECK(s3.c[3] == Rational(1));
}

TEST_CASE("rational functions normalize") {
  Ring r = ring_of({"x", "y"});
  auto a = parse_rational_function("(x^2 - y^2)/(2*x + 2*y)", r);
  CHECK(a.to_string() == "1/2*x - 1/2*y");
  auto b = parse_rational_function("1/(x*y) - 1/(x*y)", r);
  CHECK(b.is_zero());
  auto c = parse_rational_function("x/(-2*y)", r);
  CHECK(c.denominator() == parse_polynomial("y", r));
  CHECK(c.numerator() == parse_polynomial("-1/2*x", r));
  CHECK(c.derivative(1) == parse_rational_function("x/(2*y^2)", r));
  CHECK(c.evaluate({Rational(3), Rational(1)}) == Rational(mpz_class(-3), mpz_class(2)));
  CHECK_THROWS_AS(c.evaluate({Rational(3), Rational(0)}), DomainError);
}

TEST_CASE("univariate helpers") {
  Ring s = ring_of({"s"});
  Poly p = parse_polynomial("(s-1)^2*(2*s+3)*(s^2+1)", s);
  CHECK(squarefree_part(p, 0) == make_monic(parse_polynomial("(s-1)*(2*s+3)*(s^2+1)", s)));
  auto roots = rational_roots(p, 0);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(mpz_class(-3), mpz_class(2)));
  CHECK(roots[1] == Rational(1));
  CHECK(strip_roots(p, 0, roots) == parse_polynomial("2*s^2+2", s));
}

TEST_CASE("gcd of multivariate polynomials") {
  Ring r = ring_of({"x", "y", "z"});
  Poly g = parse_polynomial("x*y - z^2 + 3", r);
  Poly a = g * parse_polynomial("x + y*z", r);
  Poly b = g * parse_polynomial("x^2 - y + 1", r);
  CHECK(poly_gcd(a, b) == make_monic(g));
  CHECK(poly_gcd(a, Poly(r)) == make_monic(a));
  CHECK(poly_gcd(parse_polynomial("x^2*y", r), parse_polynomial("x*y^3", r)) == parse_polynomial("x*y", r));
}

TEST_CASE("property: ring laws on random inputs") {
  std::mt19937_64 rng(11);
  Ring r = ring_of({"a", "b", "c"});
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = random_poly(rng, r, 3, 4), q = random_poly(rng, r, 3, 4), s = random_poly(rng, r, 3, 4);
    CHECK((p + q) * s == p * s + q * s);
    CHECK(p * q == q * p);
    CHECK((p * q) * s == p * (q * s));
    CHECK(p - p == Poly(r));
    // Canonical form does not depend on construction order.
    auto terms = p.terms();
    std::reverse(terms.begin(), terms.end());
    CHECK(Poly::from_terms(r, terms) == p);
  }
}

TEST_CASE("property: Leibniz rule") {
  std::mt19937_64 rng(12);
  Ring r = ring_of({"a", "b", "c", "d"});
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = random_poly(rng, r, 4, 5), q = random_poly(rng, r, 4, 5);
    for (std::size_t v = 0; v < r.size(); ++v) CHECK((p * q).derivative(v) == p * q.derivative(v) + q * p.derivative(v));
  }
}

TEST_CASE("property: parse of print is the identity") {
  std::mt19937_64 rng(13);
  Ring r = ring_of({"a", "b", "c"});
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = random_poly(rng, r, 4, 6);
    CHECK(parse_polynomial(p.to_string(), r) == p);
    Poly q = random_poly(rng, r, 2, 3);
    if (q.is_zero()) continue;
    RationalFunction f(p, q);
    CHECK(parse_rational_function(f.to_string(), r) == f);
  }
}

TEST_CASE("property: binary gcd agrees with brute-force root search") {
  std::mt19937_64 rng(14);
  Ring t = ring_of({"t0", "t1"});
  std::uniform_int_distribution<int> small(-2, 2), nfac(1, 4);
  auto random_form = [&]() {
    Poly f = Poly::constant(Rational(1), t);
    int k = nfac(rng);
    for (int i = 0; i < k; ++i) {
      int a = small(rng), b = small(rng);
      if (a == 0 && b == 0) a = 1;
      f *= Poly::variable(t, 0).scaled(Rational(a)) + Poly::variable(t, 1).scaled(Rational(b));
    }
    return f;
  };
  for (int trial = 0; trial < 100; ++trial) {
    Poly f = random_form(), g = random_form();
    bool brute = false;
    for (int u = -4; u <= 4 && !brute; ++u)
      for (int v = -4; v <= 4 && !brute; ++v) {
        if (u == 0 && v == 0) continue;
        std::vector<Rational> pt{Rational(u), Rational(v)};
        brute = f.evaluate(pt).is_zero() && g.evaluate(pt).is_zero();
      }
    CHECK(binary_form_common_zeros({f, g}).common_zero == brute);
  }
}

TEST_CASE("property: gcd divides both and cofactors are coprime") {
  std::mt19937_64 rng(15);
  Ring r = ring_of({"a", "b", "c"});
  for (int trial = 0; trial < 40; ++trial) {
    Poly g = random_poly(rng, r, 2, 3);
    if (g.is_zero()) continue;
    Poly a = g * random_poly(rng, r, 2, 3), b = g * random_poly(rng, r, 2, 3);
    if (a.is_zero() || b.is_zero()) continue;
    Poly h = poly_gcd(a, b);
    REQUIRE(try_divide_exact(a, h).has_value());
    REQUIRE(try_divide_exact(b, h).has_value());
    CHECK(try_divide_exact(h, make_monic(g)).has_value());
    CHECK(poly_gcd(divide_exact(a, h), divide_exact(b, h)).is_constant());
  }
}

TEST_CASE("property: heuristic gcd agrees with remainder sequences") {
  std::mt19937_64 rng(16);
  Ring r = ring_of({"a", "b", "c"});
  for (int trial = 0; trial < 40; ++trial) {
    Poly g = random_poly(rng, r, 2, 3);
    Poly a = g * random_poly(rng, r, 2, 3), b = g * random_poly(rng, r, 3, 2);
    CHECK(poly_gcd(a, b) == poly_gcd_prs(a, b));
  }
  Poly y2 = parse_polynomial("1 + b^2", r);
  Poly f = y2.pow(2) * parse_polynomial("(a*b^2*c + 3*c^2*a - 2 + a^2*b*c^2)*(a + c)", r);
  Poly h = y2 * parse_polynomial("(1 + a^2)*(a^2*c*b^2 + b - 3*a*c^2)", r);
  CHECK(poly_gcd(f, h) == y2);
  CHECK(poly_gcd_prs(f, h) == y2);
}
