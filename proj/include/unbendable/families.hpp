#pragma once

#include <string>
#include <vector>

#include "unbendable/distributions.hpp"
#include "unbendable/fundforms.hpp"

namespace unbendable {

/// Local model of a family of curves: V spans the fibers of the map to the
/// manifold, F the fibers of the map to the family.
struct FamilyChart {
  Ring chart;
  std::vector<VectorField> V, F;
  std::string name;
  PointQ probe;  // default evaluation point
};

/// Chart (s, x1..xn) with V = d/ds and F = sum zeta_i(s) d/dx_i. The zeta_i
/// are polynomials in one variable.
FamilyChart blowup_family_chart(const std::vector<Poly>& zeta);

/// Parses "1, s, s^2" into polynomials in s.
std::vector<Poly> parse_zeta(const std::string& text);

/// T^0 = V + F, T^(k+1) = [V, T^k] + T^k for k < max_k. Every step is kept,
/// including repeats after stabilization.
FlagReport family_flag(const FamilyChart& fc, std::size_t max_k, const PointQ& probe);

/// [f, g] lies in T^k for every f in F and g in T^k.
bool check_F_invariance(const FamilyChart& fc, std::size_t k, const PointQ& probe);

/// Weak and strong second derived systems of T^0 agree with T^2.
bool check_T2_identity(const FamilyChart& fc, const PointQ& probe);

/// Taylor germ of t -> zeta(s0 + t), exact.
CurveGerm<Rational> zeta_germ(const std::vector<Poly>& zeta, const Rational& s0, int order);

/// Family chart on the projectivized annihilator of the first derived system
/// of a (2,3,5) distribution: chart (x..., w), V the projected null field,
/// F = d/dw. `fiber_probe` completes pt to a probe of the new chart.
FamilyChart cartan_family_chart(const DistributionSpec& d, const PointQ& pt, const Rational& fiber_probe = Rational(1));

}  // namespace unbendable
