#pragma once

#include <optional>

#include "unbendable/multipoly.hpp"

namespace unbendable {

/// Multivariate division by leading terms. Returns the quotient when b divides
/// a exactly, nothing otherwise.
std::optional<Poly> try_divide_exact(const Poly& a, const Poly& b);
/// As try_divide_exact but raises InternalError when the division is not exact.
Poly divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor over Q, normalized to leading coefficient 1 in
/// grevlex (gcd(0, 0) = 0).
Poly poly_gcd(const Poly& a, const Poly& b);
/// Same result through primitive remainder sequences only, without the
/// evaluation heuristic tried first by poly_gcd.
Poly poly_gcd_prs(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

/// Gcd of the coefficients of p viewed as a polynomial in variable `index`.
Poly content_in(const Poly& p, std::size_t index);

/// lc(b)^k * a reduced modulo b in variable `index` (pseudo-remainder).
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t index);

/// p divided by its leading coefficient.
Poly make_monic(const Poly& p);

/// Multiplier that clears rational coefficients: p * result has coprime
/// integer coefficients with positive leading coefficient.
Rational integer_normalizer(const Poly& p);

}  // namespace unbendable
