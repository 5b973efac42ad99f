#pragma once

#include <vector>

#include "unbendable/multipoly.hpp"

namespace unbendable {

/// Dense coefficients (index = power) of a polynomial that uses at most the
/// variable `index`.
std::vector<Rational> univariate_coefficients(const Poly& p, std::size_t index);

/// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p, std::size_t index);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Poly& p, std::size_t index);

/// p with all factors (x - r) for the given roots removed (any multiplicity).
Poly strip_roots(const Poly& p, std::size_t index, const std::vector<Rational>& roots);

/// Restriction of a homogeneous binary form to the two named variables.
struct BinaryGcdResult {
  bool common_zero = false;
  Poly gcd;  // constant when no common zero
};

/// Common projective zeros of homogeneous forms in two variables. Throws
/// PreconditionError when every form is zero ("identically singular").
BinaryGcdResult binary_form_common_zeros(const std::vector<Poly>& forms);

}  // namespace unbendable
