#pragma once

#include <string>
#include <vector>

#include "unbendable/multipoly.hpp"

namespace unbendable {

/// Scalar power series in one parameter, truncated after t^order.
template <class F>
struct PowerSeries {
  std::vector<F> c;  // c[k] multiplies t^k, k = 0..order
  /// Set when nonzero contributions beyond t^order were discarded.
  bool truncated = false;

  PowerSeries() = default;
  explicit PowerSeries(int order) : c(std::size_t(order + 1)) {}
  static PowerSeries constant(const F& v, int order) {
    PowerSeries s(order);
    s.c[0] = v;
    return s;
  }

  int order() const { return int(c.size()) - 1; }
  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  /// Index of the first nonzero coefficient, or -1.
  int valuation() const {
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) return int(k);
    return -1;
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    if (o.order() < order()) c.resize(o.c.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
    truncated = truncated || o.truncated;
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    if (o.order() < order()) c.resize(o.c.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] -= o.c[k];
    truncated = truncated || o.truncated;
    return *this;
  }
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    r.truncated = a.truncated || b.truncated;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) {
        if (b.c[j].is_zero()) continue;
        if (int(i + j) > n) {
          r.truncated = true;
          break;
        }
        r.c[i + j] += a.c[i] * b.c[j];
      }
    }
    return r;
  }
  PowerSeries scaled(const F& k) const {
    PowerSeries r = *this;
    for (auto& x : r.c) x *= k;
    return r;
  }
  /// 1/s; requires a nonzero constant term.
  PowerSeries inverse() const {
    if (c[0].is_zero()) throw DomainError("inverse of a series with zero constant term");
    PowerSeries r(order());
    F inv = F(1) / c[0];
    r.c[0] = inv;
    for (int k = 1; k <= order(); ++k) {
      F acc;
      for (int j = 1; j <= k; ++j) acc += c[std::size_t(j)] * r.c[std::size_t(k - j)];
      r.c[std::size_t(k)] = -(acc * inv);
    }
    r.truncated = true;
    return r;
  }
};

/// Vector-valued germ t -> base + c_1 t + ... + c_N t^N.
template <class F>
struct TruncatedSeries {
  std::string variable = "t";
  int order = 0;
  std::vector<std::vector<F>> coeffs;  // coeffs[k - 1] is c_k
  /// True when the polynomial germ solves its system exactly (no higher terms).
  bool exact = false;

  std::size_t dimension() const { return coeffs.empty() ? 0 : coeffs.front().size(); }
  const std::vector<F>& coefficient(int k) const { return coeffs.at(std::size_t(k - 1)); }
  PowerSeries<F> component(std::size_t i, const F& base) const {
    PowerSeries<F> s(order);
    s.c[0] = base;
    for (int k = 1; k <= order; ++k) s.c[std::size_t(k)] = coeffs[std::size_t(k - 1)][i];
    return s;
  }
};

/// p evaluated on base + germ(t), truncated at the germ's order.
template <class F>
PowerSeries<F> series_substitute(const MultiPoly<F>& p, const TruncatedSeries<F>& germ, const std::vector<F>& base,
                                 int order = -1) {
  if (order < 0) order = germ.order;
  std::size_t n = base.size();
  if (germ.dimension() != 0 && germ.dimension() != n)
    throw PreconditionError("germ dimension does not match the ring");
  if (!p.ring().is_null() && p.ring().size() != n) throw PreconditionError("germ dimension does not match the ring");
  std::vector<PowerSeries<F>> vars(n);
  for (std::size_t i = 0; i < n; ++i) {
    vars[i] = PowerSeries<F>(order);
    vars[i].c[0] = base[i];
    for (int k = 1; k <= std::min(order, germ.order); ++k)
      vars[i].c[std::size_t(k)] = germ.coeffs[std::size_t(k - 1)][i];
  }
  std::vector<std::vector<PowerSeries<F>>> powers(n);
  auto power = [&](std::uint32_t v, std::uint32_t e) -> const PowerSeries<F>& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(PowerSeries<F>::constant(F(1), order));
    while (pw.size() <= e) pw.push_back(pw.back() * vars[v]);
    return pw[e];
  };
  PowerSeries<F> sum(order);
  for (const auto& [m, coef] : p.terms()) {
    PowerSeries<F> term = PowerSeries<F>::constant(coef, order);
    for (const auto& [v, e] : m.entries()) term = term * power(v, e);
    sum += term;
  }
  return sum;
}

}  // namespace unbendable
