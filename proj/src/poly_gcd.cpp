#include "unbendable/poly_gcd.hpp"

namespace unbendable {

std::optional<Poly> try_divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  Ring ring = Ring::unify(a.ring(), b.ring());
  if (a.is_zero()) return Poly(ring);
  if (b.is_constant()) return a.scaled(b.constant_term().inverse());
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  const Monomial& lm = b.leading_monomial();
  Rational lc_inv = b.leading_coefficient().inverse();
  std::vector<Poly::Term> quotient;
  Poly r = a;
  while (!r.is_zero()) {
    const Monomial& rm = r.leading_monomial();
    if (!lm.divides(rm)) return std::nullopt;
    Monomial qm = lm.quotient_of(rm);
    Rational qc = r.leading_coefficient() * lc_inv;
    r -= b.times_monomial(qm, qc);
    quotient.push_back({qm, qc});
  }
  return Poly::from_terms(ring, std::move(quotient));
}

Poly divide_exact(const Poly& a, const Poly& b) {
  auto q = try_divide_exact(a, b);
  if (!q) throw InternalError("polynomial division expected to be exact: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return *q;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading_coefficient().inverse());
}

Rational integer_normalizer(const Poly& p) {
  if (p.is_zero()) return Rational(1);
  mpz_class den = 1, num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.denominator().get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.second.numerator().get_mpz_t());
  }
  Rational r(den, num);
  if (p.leading_coefficient().sign() < 0) r = -r;
  return r;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t index) {
  std::uint32_t n = b.degree_in(index);
  auto bc = b.coefficients_in(index);
  Poly lc_b = bc.back();
  Poly b_rest = b - lc_b * Poly::monomial(b.ring(), Monomial::variable(std::uint32_t(index), n), Rational(1));
  Poly r = a;
  while (!r.is_zero()) {
    std::uint32_t m = r.degree_in(index);
    if (m < n) break;
    auto rc = r.coefficients_in(index);
    Poly lc_r = rc.back();
    Poly r_rest = r - lc_r * Poly::monomial(r.ring(), Monomial::variable(std::uint32_t(index), m), Rational(1));
    // lc_b * r - lc_r * x^(m-n) * b; the degree-m parts cancel by construction.
    r = lc_b * r_rest - (lc_r * b_rest).times_monomial(Monomial::variable(std::uint32_t(index), m - n), Rational(1));
    r = r.scaled(integer_normalizer(r));
  }
  return r;
}

namespace {

Poly gcd_impl(const Poly& a, const Poly& b, bool heuristic);

mpz_class integer_content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.numerator().get_mpz_t());
  return g;
}

mpz_class max_norm(const Poly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) m = std::max(m, mpz_class(::abs(t.second.numerator())));
  return m;
}

// Symmetric residue of every coefficient modulo xi.
Poly symmetric_residue(const Poly& p, const mpz_class& xi) {
  std::vector<Poly::Term> terms;
  mpz_class half = xi / 2;
  for (const auto& t : p.terms()) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), t.second.numerator().get_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    if (r != 0) terms.push_back({t.first, Rational(r)});
  }
  return Poly::from_terms(p.ring(), std::move(terms));
}

constexpr std::size_t kHeuristicBitLimit = 6000;

// Heuristic gcd of integer polynomials: evaluate one variable at a large
// integer, recurse, lift the image back xi-adically and accept it only if it
// divides both inputs.
std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b) {
  mpz_class ca = integer_content(a), cb = integer_content(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return Poly::constant(Rational(c), a.ring());
  Poly pa = a.scaled(Rational(mpz_class(1), ca)), pb = b.scaled(Rational(mpz_class(1), cb));
  long va = pa.min_variable(), vb = pb.min_variable();
  std::size_t v = std::size_t(std::min(va, vb));
  mpz_class xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  std::uint32_t max_deg = std::max(pa.degree_in(v), pb.degree_in(v));
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) > kHeuristicBitLimit) return std::nullopt;
    Rational at(xi);
    Poly ea = pa.partial_evaluate({{v, at}}), eb = pb.partial_evaluate({{v, at}});
    if (!ea.is_zero() && !eb.is_zero()) {
      auto image = heuristic_gcd(ea, eb);
      if (!image) return std::nullopt;
      Poly g(pa.ring()), rest = *image;
      for (std::uint32_t e = 0; !rest.is_zero() && e <= max_deg + 1; ++e) {
        Poly digit = symmetric_residue(rest, xi);
        g += digit.times_monomial(Monomial::variable(std::uint32_t(v), e), Rational(1));
        rest = (rest - digit).scaled(Rational(mpz_class(1), xi));
      }
      if (rest.is_zero() && !g.is_zero()) {
        g = g.scaled(Rational(mpz_class(1), integer_content(g)));
        if (try_divide_exact(pa, g) && try_divide_exact(pb, g)) return g.scaled(Rational(c));
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

Poly content_impl(const Poly& p, std::size_t index, bool heuristic) {
  Poly g(p.ring());
  for (const auto& c : p.coefficients_in(index)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? make_monic(c) : gcd_impl(g, c, heuristic);
    if (g.is_constant()) return Poly::constant(Rational(1), p.ring());
  }
  return g;
}

Poly gcd_impl(const Poly& a, const Poly& b, bool heuristic) {
  Ring ring = Ring::unify(a.ring(), b.ring());
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(Rational(1), ring);
  if (a.term_count() == 1 && b.term_count() == 1) {
    // Gcd of two monomials: minimum exponents.
    const Monomial& ma = a.leading_monomial();
    Monomial g;
    for (const auto& [v, e] : ma.entries()) {
      std::uint32_t f = b.leading_monomial().exponent(v);
      if (f) g = g * Monomial::variable(v, std::min(e, f));
    }
    return Poly::monomial(ring, g, Rational(1));
  }
  if (a.total_degree() <= b.total_degree()) {
    if (try_divide_exact(b, a)) return make_monic(a);
  } else {
    if (try_divide_exact(a, b)) return make_monic(b);
  }

  if (heuristic) {
    auto h = heuristic_gcd(a.scaled(integer_normalizer(a)), b.scaled(integer_normalizer(b)));
    if (h) return make_monic(*h);
  }

  long va = a.min_variable(), vb = b.min_variable();
  std::size_t v = std::size_t(std::min(va, vb));
  if (!a.uses_variable(v)) return gcd_impl(a, content_impl(b, v, heuristic), heuristic);
  if (!b.uses_variable(v)) return gcd_impl(content_impl(a, v, heuristic), b, heuristic);

  Poly ca = content_impl(a, v, heuristic), cb = content_impl(b, v, heuristic);
  Poly cont = gcd_impl(ca, cb, heuristic);
  Poly r0 = divide_exact(a, ca), r1 = divide_exact(b, cb);
  if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
  Poly g;
  for (;;) {
    Poly r = pseudo_remainder(r0, r1, v);
    if (r.is_zero()) {
      g = divide_exact(r1, content_impl(r1, v, heuristic));
      break;
    }
    if (r.degree_in(v) == 0) {
      g = Poly::constant(Rational(1), ring);
      break;
    }
    r0 = std::move(r1);
    r1 = divide_exact(r, content_impl(r, v, heuristic));
  }
  return make_monic(g * cont);
}

}  // namespace

Poly content_in(const Poly& p, std::size_t index) {
  if (p.is_zero()) return p;
  return content_impl(p, index, true);
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly g = gcd_impl(a, b, true);
  if (g.ring().is_null()) return g.with_ring(Ring::unify(a.ring(), b.ring()));
  return g;
}

Poly poly_gcd_prs(const Poly& a, const Poly& b) {
  Poly g = gcd_impl(a, b, false);
  if (g.ring().is_null()) return g.with_ring(Ring::unify(a.ring(), b.ring()));
  return g;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(Ring::unify(a.ring(), b.ring()));
  return make_monic(divide_exact(a * b, poly_gcd(a, b)));
}

}  // namespace unbendable
