#pragma once

#include <string>
#include <vector>

#include "unbendable/multipoly.hpp"

namespace unbendable {

/// Quotient of two polynomials over Q, kept in lowest terms with a
/// denominator whose grevlex-leading coefficient is 1.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c) : num_(Poly::constant(Rational(c))), den_(Poly::constant(Rational(1))) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(Rational(1))) {}  // NOLINT
  explicit RationalFunction(const Poly& p);
  RationalFunction(const Poly& num, const Poly& den);

  static RationalFunction variable(const Ring& ring, std::size_t index);
  static RationalFunction variable(const Ring& ring, const std::string& name);

  Ring ring() const { return Ring::unify(num_.ring(), den_.ring()); }
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// The value as a Rational; requires is_constant().
  Rational constant_value() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction pow(unsigned exponent) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction derivative(std::size_t index) const;
  /// Throws DomainError when the denominator vanishes at the point.
  Rational evaluate(const std::vector<Rational>& point) const;
  /// Composition with rational-function images of each variable.
  RationalFunction compose(const std::vector<RationalFunction>& images, const Ring& target) const;
  RationalFunction with_ring(const Ring& ring) const;

  /// "num" or "(num)/(den)" with parentheses only around sums.
  std::string to_string() const;
  /// Length of to_string(), used to rank pivots.
  std::size_t print_size() const { return to_string().size(); }

 private:
  void normalize();

  Poly num_;
  Poly den_ = Poly::constant(Rational(1));
};

using RF = RationalFunction;

bool coeff_is_atomic(const RationalFunction& c);
bool coeff_is_negative(const RationalFunction& c);

extern template class MultiPoly<RationalFunction>;
using PolyRF = MultiPoly<RationalFunction>;

/// Rewrites p (over Q, in ring R) as a polynomial in the variables of R not
/// listed in `params`, with coefficients that are rational functions of the
/// params. `params` names are looked up in p's ring.
PolyRF to_parametric(const Poly& p, const std::vector<std::string>& params);
/// Polynomial with ring-matched constant coefficients.
PolyRF lift_to_rf(const Poly& p);
/// Specializes every coefficient at the given values of its own variables.
Poly specialize(const PolyRF& p, const std::vector<Rational>& param_values);
Rational specialize(const RationalFunction& c, const std::vector<Rational>& param_values);

}  // namespace unbendable
