#include "unbendable/univariate.hpp"

#include <algorithm>

#include "unbendable/poly_gcd.hpp"

namespace unbendable {

std::vector<Rational> univariate_coefficients(const Poly& p, std::size_t index) {
  std::vector<Rational> out(p.degree_in(index) + 1);
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != m.exponent(std::uint32_t(index)))
      throw PreconditionError("polynomial is not univariate: " + p.to_string());
    out[m.degree()] = c;
  }
  return out;
}

Poly squarefree_part(const Poly& p, std::size_t index) {
  if (p.is_constant()) return make_monic(p);
  Poly g = poly_gcd(p, p.derivative(index));
  return make_monic(divide_exact(p, g));
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  // Trial division; the polynomials met here have small integer coefficients.
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

Rational horner(const std::vector<mpz_class>& c, const Rational& x) {
  Rational v;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + Rational(*it);
  return v;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p, std::size_t index) {
  if (p.is_zero()) throw PreconditionError("roots of the zero polynomial");
  auto q = univariate_coefficients(p.scaled(integer_normalizer(p)), index);
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (low < q.size() && q[low].is_zero()) ++low;
  if (low > 0) roots.push_back(Rational(0));
  std::vector<mpz_class> c;
  for (std::size_t i = low; i < q.size(); ++i) c.push_back(q[i].numerator());
  if (c.size() > 1) {
    for (const auto& a : divisors(c.front()))
      for (const auto& b : divisors(c.back()))
        for (int sign : {1, -1}) {
          Rational r(a * sign, b);
          if (horner(c, r).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end())
            roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Poly strip_roots(const Poly& p, std::size_t index, const std::vector<Rational>& roots) {
  Poly out = p;
  for (const auto& r : roots) {
    Poly lin = Poly::variable(p.ring(), index) - Poly::constant(r, p.ring());
    while (!out.is_zero()) {
      auto q = try_divide_exact(out, lin);
      if (!q) break;
      out = *q;
    }
  }
  return out;
}

BinaryGcdResult binary_form_common_zeros(const std::vector<Poly>& forms) {
  Poly g;
  bool any = false;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw PreconditionError("binary form is not homogeneous: " + f.to_string());
    g = any ? poly_gcd(g, f) : make_monic(f);
    any = true;
  }
  if (!any) throw PreconditionError("identically singular: all forms vanish");
  BinaryGcdResult r;
  r.gcd = g;
  r.common_zero = !g.is_constant();
  return r;
}

}  // namespace unbendable
