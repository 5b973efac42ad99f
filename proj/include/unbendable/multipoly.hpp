#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "unbendable/errors.hpp"
#include "unbendable/monomial.hpp"
#include "unbendable/rational.hpp"
#include "unbendable/ring.hpp"

namespace unbendable {

/// Sparse multivariate polynomial with coefficients in C (Rational or
/// RationalFunction). Terms are kept sorted by descending grevlex with no
/// zero coefficients, so equal polynomials have equal term vectors.
template <class C>
class MultiPoly {
 public:
  using Coeff = C;
  using Term = std::pair<Monomial, C>;

  MultiPoly() = default;
  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}
  MultiPoly(const C& c) : MultiPoly(constant(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(constant(C(c))) {}   // NOLINT(google-explicit-constructor)

  static MultiPoly constant(const C& c, Ring ring = {});
  static MultiPoly variable(const Ring& ring, std::size_t index);
  static MultiPoly variable(const Ring& ring, const std::string& name);
  static MultiPoly monomial(const Ring& ring, const Monomial& m, const C& c);
  /// Sums duplicate monomials, drops zeros and sorts.
  static MultiPoly from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].second.is_one(); }
  C constant_term() const;
  C coefficient(const Monomial& m) const;
  const Monomial& leading_monomial() const;
  const C& leading_coefficient() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t index) const;
  /// Smallest variable index occurring in the polynomial, or -1 if constant.
  long min_variable() const;
  bool uses_variable(std::size_t index) const;
  bool is_homogeneous() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return a.times(b); }
  MultiPoly operator-() const;
  MultiPoly scaled(const C& c) const;
  MultiPoly times_monomial(const Monomial& m, const C& c) const;
  MultiPoly pow(unsigned exponent) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!a.ring_.is_null() && !b.ring_.is_null() && !a.is_constant() && !(a.ring_ == b.ring_))
      throw RingMismatch("comparing polynomials over different rings");
    return a.terms_ == b.terms_;
  }

  MultiPoly derivative(std::size_t index) const;
  /// Evaluates with every variable replaced by point[i].
  C evaluate(const std::vector<C>& point) const;
  /// Composition: variable i becomes images[i]; result lives over `target`.
  MultiPoly compose(const std::vector<MultiPoly>& images, const Ring& target) const;
  /// Replaces only the listed variables by constants; the ring is unchanged.
  MultiPoly partial_evaluate(const std::vector<std::pair<std::size_t, C>>& values) const;
  /// Coefficients of powers of variable `index`; entry k multiplies var^k.
  std::vector<MultiPoly> coefficients_in(std::size_t index) const;
  /// Same polynomial read over another ring of equal length (renaming).
  MultiPoly with_ring(const Ring& ring) const;
  /// Moves variables into a new ring: old index i goes to map[i].
  MultiPoly remapped(const Ring& ring, const std::vector<long>& map) const;
  /// Homogeneous part of total degree k.
  MultiPoly homogeneous_part(std::uint32_t k) const;

  /// Canonical text form, descending grevlex, e.g. "x0^3*x2 + 3*x1 - 1/2".
  std::string to_string() const;

 private:
  MultiPoly times(const MultiPoly& o) const;
  static void sort_terms(std::vector<Term>& terms);

  Ring ring_;
  std::vector<Term> terms_;
};

using Poly = MultiPoly<Rational>;

// Coefficient printing hooks shared by MultiPoly and RationalFunction.
inline bool coeff_is_atomic(const Rational&) { return true; }
inline bool coeff_is_negative(const Rational& c) { return c.sign() < 0; }

// ---------------------------------------------------------------------------

template <class C>
MultiPoly<C> MultiPoly<C>::constant(const C& c, Ring ring) {
  MultiPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

template <class C>
MultiPoly<C> MultiPoly<C>::variable(const Ring& ring, std::size_t index) {
  if (index >= ring.size()) throw PreconditionError("variable index out of range");
  MultiPoly p(ring);
  p.terms_.push_back({Monomial::variable(std::uint32_t(index)), C(1)});
  return p;
}

template <class C>
MultiPoly<C> MultiPoly<C>::variable(const Ring& ring, const std::string& name) {
  return variable(ring, ring.require(name));
}

template <class C>
MultiPoly<C> MultiPoly<C>::monomial(const Ring& ring, const Monomial& m, const C& c) {
  MultiPoly p(ring);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

template <class C>
void MultiPoly<C>::sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_compare(a.first, b.first) > 0; });
}

template <class C>
MultiPoly<C> MultiPoly<C>::from_terms(Ring ring, std::vector<Term> terms) {
  sort_terms(terms);
  MultiPoly p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
  return p;
}

template <class C>
C MultiPoly<C>::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return C();
}

template <class C>
C MultiPoly<C>::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return C();
}

template <class C>
const Monomial& MultiPoly<C>::leading_monomial() const {
  if (terms_.empty()) throw InternalError("leading monomial of zero polynomial");
  return terms_.front().first;
}

template <class C>
const C& MultiPoly<C>::leading_coefficient() const {
  if (terms_.empty()) throw InternalError("leading coefficient of zero polynomial");
  return terms_.front().second;
}

template <class C>
std::uint32_t MultiPoly<C>::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

template <class C>
std::uint32_t MultiPoly<C>::degree_in(std::size_t index) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(std::uint32_t(index)));
  return d;
}

template <class C>
long MultiPoly<C>::min_variable() const {
  long best = -1;
  for (const auto& t : terms_)
    if (!t.first.is_one()) {
      long v = long(t.first.entries().front().first);
      if (best < 0 || v < best) best = v;
    }
  return best;
}

template <class C>
bool MultiPoly<C>::uses_variable(std::size_t index) const {
  for (const auto& t : terms_)
    if (t.first.exponent(std::uint32_t(index)) > 0) return true;
  return false;
}

template <class C>
bool MultiPoly<C>::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.first.degree() != terms_.front().first.degree()) return false;
  return true;
}

template <class C>
MultiPoly<C>& MultiPoly<C>::operator+=(const MultiPoly& o) {
  ring_ = Ring::unify(ring_, o.ring_);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size()     ? -1
            : j == o.terms_.size() ? 1
                                   : grevlex_compare(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      C s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) out.push_back({terms_[i].first, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

template <class C>
MultiPoly<C>& MultiPoly<C>::operator-=(const MultiPoly& o) {
  return *this += -o;
}

template <class C>
MultiPoly<C>& MultiPoly<C>::operator*=(const MultiPoly& o) {
  *this = times(o);
  return *this;
}

template <class C>
MultiPoly<C> MultiPoly<C>::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

template <class C>
MultiPoly<C> MultiPoly<C>::scaled(const C& c) const {
  if (c.is_zero()) return MultiPoly(ring_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  // Products of nonzero field elements are nonzero; order is unchanged.
  return r;
}

template <class C>
MultiPoly<C> MultiPoly<C>::times_monomial(const Monomial& m, const C& c) const {
  if (c.is_zero()) return MultiPoly(ring_);
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.first * m, t.second * c});
  return r;
}

template <class C>
MultiPoly<C> MultiPoly<C>::times(const MultiPoly& o) const {
  Ring ring = Ring::unify(ring_, o.ring_);
  if (terms_.empty() || o.terms_.empty()) return MultiPoly(ring);
  if (o.is_constant()) {
    MultiPoly r = scaled(o.terms_[0].second);
    r.ring_ = ring;
    return r;
  }
  if (is_constant()) {
    MultiPoly r = o.scaled(terms_[0].second);
    r.ring_ = ring;
    return r;
  }
  std::map<Monomial, C, GrevlexGreater> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      auto [it, fresh] = acc.try_emplace(a.first * b.first, a.second * b.second);
      if (!fresh) it->second += a.second * b.second;
    }
  MultiPoly r(ring);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
  return r;
}

template <class C>
MultiPoly<C> MultiPoly<C>::pow(unsigned exponent) const {
  MultiPoly result = constant(C(1), ring_);
  MultiPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

template <class C>
MultiPoly<C> MultiPoly<C>::derivative(std::size_t index) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = 0;
    Monomial rest = t.first.without(std::uint32_t(index), &e);
    if (e == 0) continue;
    Monomial m = rest * Monomial::variable(std::uint32_t(index), e - 1);
    out.push_back({m, t.second * C(long(e))});
  }
  return from_terms(ring_, std::move(out));
}

template <class C>
C MultiPoly<C>::evaluate(const std::vector<C>& point) const {
  if (!ring_.is_null() && point.size() != ring_.size())
    throw PreconditionError("evaluation point has wrong dimension");
  C sum;
  for (const auto& t : terms_) {
    C v = t.second;
    for (const auto& [var, e] : t.first.entries()) {
      if (var >= point.size()) throw PreconditionError("evaluation point has wrong dimension");
      for (std::uint32_t k = 0; k < e; ++k) v *= point[var];
    }
    sum += v;
  }
  return sum;
}

template <class C>
MultiPoly<C> MultiPoly<C>::compose(const std::vector<MultiPoly>& images, const Ring& target) const {
  if (!ring_.is_null() && images.size() != ring_.size())
    throw PreconditionError("substitution does not cover the ring");
  // powers[var][k] = images[var]^k, built lazily.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::uint32_t var, std::uint32_t e) -> const MultiPoly& {
    auto& pw = powers[var];
    if (pw.empty()) pw.push_back(constant(C(1), target));
    while (pw.size() <= e) pw.push_back(pw.back() * images[var]);
    return pw[e];
  };
  MultiPoly sum(target);
  for (const auto& t : terms_) {
    MultiPoly v = constant(t.second, target);
    for (const auto& [var, e] : t.first.entries()) {
      if (var >= images.size()) throw PreconditionError("substitution does not cover the ring");
      v *= power(var, e);
    }
    sum += v;
  }
  sum.ring_ = target;
  return sum;
}

template <class C>
MultiPoly<C> MultiPoly<C>::partial_evaluate(const std::vector<std::pair<std::size_t, C>>& values) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial m = t.first;
    C c = t.second;
    for (const auto& [var, val] : values) {
      std::uint32_t e = 0;
      m = m.without(std::uint32_t(var), &e);
      for (std::uint32_t k = 0; k < e; ++k) c *= val;
    }
    if (!c.is_zero()) out.push_back({m, c});
  }
  return from_terms(ring_, std::move(out));
}

template <class C>
std::vector<MultiPoly<C>> MultiPoly<C>::coefficients_in(std::size_t index) const {
  std::vector<std::vector<Term>> buckets(degree_in(index) + 1);
  for (const auto& t : terms_) {
    std::uint32_t e = 0;
    Monomial rest = t.first.without(std::uint32_t(index), &e);
    buckets[e].push_back({rest, t.second});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(ring_, std::move(b)));
  return out;
}

template <class C>
MultiPoly<C> MultiPoly<C>::with_ring(const Ring& ring) const {
  if (!ring_.is_null() && ring.size() != ring_.size())
    throw PreconditionError("renaming ring has a different number of variables");
  MultiPoly r = *this;
  r.ring_ = ring;
  return r;
}

template <class C>
MultiPoly<C> MultiPoly<C>::remapped(const Ring& ring, const std::vector<long>& map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.first.remapped(map), t.second});
  return from_terms(ring, std::move(out));
}

template <class C>
MultiPoly<C> MultiPoly<C>::homogeneous_part(std::uint32_t k) const {
  MultiPoly r(ring_);
  for (const auto& t : terms_)
    if (t.first.degree() == k) r.terms_.push_back(t);
  return r;
}

template <class C>
std::string MultiPoly<C>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = coeff_is_negative(c);
    C mag = neg ? -c : c;
    std::string body;
    if (m.is_one()) {
      body = coeff_is_atomic(mag) ? mag.to_string() : "(" + mag.to_string() + ")";
    } else if (mag.is_one()) {
      body = m.to_string(ring_);
    } else {
      std::string cs = mag.to_string();
      if (!coeff_is_atomic(mag)) cs = "(" + cs + ")";
      body = cs + "*" + m.to_string(ring_);
    }
    if (first)
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

extern template class MultiPoly<Rational>;

}  // namespace unbendable
