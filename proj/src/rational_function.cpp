#include "unbendable/rational_function.hpp"

#include "unbendable/poly_gcd.hpp"

namespace unbendable {

RationalFunction::RationalFunction(const Poly& p) : num_(p), den_(Poly::constant(Rational(1), p.ring())) {}

RationalFunction::RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::variable(const Ring& ring, std::size_t index) {
  return RationalFunction(Poly::variable(ring, index));
}

RationalFunction RationalFunction::variable(const Ring& ring, const std::string& name) {
  return RationalFunction(Poly::variable(ring, name));
}

void RationalFunction::normalize() {
  Ring r = ring();
  if (num_.is_zero()) {
    num_ = Poly(r);
    den_ = Poly::constant(Rational(1), r);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  Rational lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    Rational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  num_ = num_.with_ring(r);
  den_ = den_.with_ring(r);
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw PreconditionError("rational function is not constant: " + to_string());
  return num_.constant_term() / den_.constant_term();
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    den_ = Poly::constant(Rational(1), num_.ring());
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): only g can share factors with the new numerator.
  Poly g = poly_gcd(den_, o.den_);
  Poly b1 = divide_exact(den_, g), d1 = divide_exact(o.den_, g);
  Poly t = num_ * d1 + o.num_ * b1;
  Ring r = Ring::unify(ring(), o.ring());
  if (t.is_zero()) {
    num_ = Poly(r);
    den_ = Poly::constant(Rational(1), r);
    return *this;
  }
  Poly h = g.is_constant() ? g : poly_gcd(t, g);
  num_ = divide_exact(t, h);
  den_ = b1 * divide_exact(o.den_, h);
  Rational lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    num_ = num_.scaled(lc.inverse());
    den_ = den_.scaled(lc.inverse());
  }
  num_ = num_.with_ring(r);
  den_ = den_.with_ring(r);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    Ring r = Ring::unify(ring(), o.ring());
    num_ = Poly(r);
    den_ = Poly::constant(Rational(1), r);
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    // Both normalized polynomials: denominators are 1.
    num_ = num_ * o.num_;
    den_ = Poly::constant(Rational(1), num_.ring());
    return *this;
  }
  // Cross-cancel before multiplying to keep the gcd small.
  Poly g1 = poly_gcd(num_, o.den_), g2 = poly_gcd(o.num_, den_);
  num_ = divide_exact(num_, g1) * divide_exact(o.num_, g2);
  den_ = divide_exact(den_, g2) * divide_exact(o.den_, g1);
  Rational lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    num_ = num_.scaled(lc.inverse());
    den_ = den_.scaled(lc.inverse());
  }
  Ring r = Ring::unify(num_.ring(), den_.ring());
  num_ = num_.with_ring(r);
  den_ = den_.with_ring(r);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this *= o.inverse();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational function");
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  Rational lc = r.den_.leading_coefficient();
  if (!lc.is_one()) {
    r.num_ = r.num_.scaled(lc.inverse());
    r.den_ = r.den_.scaled(lc.inverse());
  }
  return r;
}

RationalFunction RationalFunction::pow(unsigned exponent) const {
  RationalFunction r;
  r.num_ = num_.pow(exponent);
  r.den_ = den_.pow(exponent);
  return r;
}

RationalFunction RationalFunction::derivative(std::size_t index) const {
  if (den_.is_constant()) return RationalFunction(num_.derivative(index).scaled(den_.constant_term().inverse()));
  Poly dd = den_.derivative(index);
  if (dd.is_zero()) return RationalFunction(num_.derivative(index), den_);
  Poly g = poly_gcd(den_, dd);
  Poly q = divide_exact(den_, g);
  Poly n = num_.derivative(index) * q - num_ * divide_exact(dd, g);
  return RationalFunction(n, den_ * q);
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
  Rational d = den_.evaluate(point);
  if (d.is_zero()) throw DomainError("denominator " + den_.to_string() + " vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::compose(const std::vector<RationalFunction>& images, const Ring& target) const {
  auto apply = [&](const Poly& p) {
    RationalFunction sum = RationalFunction(Poly(target));
    for (const auto& [m, c] : p.terms()) {
      RationalFunction v(Poly::constant(c, target));
      for (const auto& [var, e] : m.entries()) v *= images.at(var).pow(e);
      sum += v;
    }
    return sum;
  };
  return apply(num_) / apply(den_);
}

RationalFunction RationalFunction::with_ring(const Ring& ring) const {
  RationalFunction r = *this;
  r.num_ = num_.with_ring(ring);
  r.den_ = den_.with_ring(ring);
  return r;
}

std::string RationalFunction::to_string() const {
  std::string n = num_.to_string();
  if (den_.is_one()) return n;
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.term_count() > 1 || !den_.leading_monomial().is_one()) d = "(" + d + ")";
  return n + "/" + d;
}

bool coeff_is_atomic(const RationalFunction& c) {
  return c.denominator().is_one() && c.numerator().term_count() <= 1;
}

bool coeff_is_negative(const RationalFunction& c) {
  return !c.is_zero() && c.numerator().leading_coefficient().sign() < 0;
}

PolyRF to_parametric(const Poly& p, const std::vector<std::string>& params) {
  const Ring& ring = p.ring();
  std::vector<long> map(ring.size(), -1), pmap(ring.size(), -1);
  std::vector<std::string> main_names, param_names;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    bool is_param = false;
    for (const auto& s : params) is_param = is_param || s == ring.name(i);
    if (is_param) {
      pmap[i] = long(param_names.size());
      param_names.push_back(ring.name(i));
    } else {
      map[i] = long(main_names.size());
      main_names.push_back(ring.name(i));
    }
  }
  Ring main_ring(main_names), param_ring(param_names);
  std::vector<PolyRF::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    Monomial mm, pm;
    for (const auto& [v, e] : m.entries()) {
      if (map[v] >= 0)
        mm = mm * Monomial::variable(std::uint32_t(map[v]), e);
      else
        pm = pm * Monomial::variable(std::uint32_t(pmap[v]), e);
    }
    terms.push_back({mm, RationalFunction(Poly::monomial(param_ring, pm, c))});
  }
  return PolyRF::from_terms(main_ring, std::move(terms));
}

PolyRF lift_to_rf(const Poly& p) {
  std::vector<PolyRF::Term> terms;
  for (const auto& [m, c] : p.terms()) terms.push_back({m, RationalFunction(c)});
  return PolyRF::from_terms(p.ring(), std::move(terms));
}

Rational specialize(const RationalFunction& c, const std::vector<Rational>& param_values) {
  if (c.is_constant()) return c.constant_value();
  return c.evaluate(param_values);
}

Poly specialize(const PolyRF& p, const std::vector<Rational>& param_values) {
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : p.terms()) terms.push_back({m, specialize(c, param_values)});
  return Poly::from_terms(p.ring(), std::move(terms));
}

}  // namespace unbendable
