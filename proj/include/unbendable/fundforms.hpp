#pragma once

#include <optional>
#include <vector>

#include "unbendable/linalg.hpp"
#include "unbendable/series.hpp"

namespace unbendable {

/// Curve germ t -> base + c_1 t + ... + c_N t^N whose `transverse`
/// coordinate is exactly base + t.
template <class F>
struct CurveGerm {
  Ring chart;
  std::vector<F> base;
  std::size_t transverse = 0;
  TruncatedSeries<F> series;
};

/// Germ given directly by a polynomial parametrization (coefficient lists
/// c_1..c_N); marked exact.
template <class F>
CurveGerm<F> germ_from_coefficients(const Ring& chart, const std::vector<std::vector<F>>& coeffs);

template <class F>
struct TangentSpace {
  std::size_t dimension = 0;
  std::vector<std::vector<F>> kernel;
};

template <class F>
Matrix<F> jacobian_at(const std::vector<MultiPoly<F>>& system, const std::vector<F>& pt);

/// PreconditionError ("point not on scheme") if some equation is nonzero at pt.
template <class F>
TangentSpace<F> zariski_tangent(const std::vector<MultiPoly<F>>& system, const std::vector<F>& pt);

/// Default transverse coordinate for a 1-dimensional tangent direction:
/// largest |entry| for Q, first constant entry for Q(s); ties by order.
template <class F>
std::size_t choose_transverse(const std::vector<F>& direction);

/// Order-by-order Taylor expansion of the smooth curve branch through pt.
template <class F>
CurveGerm<F> branch_expand(const std::vector<MultiPoly<F>>& system, const std::vector<F>& pt,
                           std::optional<std::size_t> transverse, int order);

/// True iff every equation vanishes on the germ through its order.
template <class F>
bool branch_residuals_vanish(const std::vector<MultiPoly<F>>& system, const CurveGerm<F>& germ);

template <class F>
struct OsculatingFlag {
  std::vector<std::vector<F>> vectors;  // c_1, c_2, ...
  std::vector<std::size_t> ranks;       // ranks[k-1] = dim span(c_1..c_k)
  /// FF^k is nonzero iff ranks[k-1] = ranks[k-2] + 1 (k >= 2).
  bool ff_nonzero(int k) const { return ranks.at(std::size_t(k - 1)) == ranks.at(std::size_t(k - 2)) + 1; }
};

template <class F>
OsculatingFlag<F> osculating_flag(const CurveGerm<F>& germ);

enum class Nondegeneracy { Nondegenerate, Degenerate, Undecided };
const char* to_string(Nondegeneracy n);

struct NondegeneracyResult {
  Nondegeneracy status = Nondegeneracy::Undecided;
  int order = 0;
  std::vector<std::size_t> ranks;
};

/// Decides from the germ as given.
template <class F>
NondegeneracyResult linear_nondegenerate(const CurveGerm<F>& germ, std::size_t ambient_dim);

/// Expands the branch further on demand, up to order ambient_dim + 2.
template <class F>
NondegeneracyResult linear_nondegenerate(const std::vector<MultiPoly<F>>& system, const std::vector<F>& pt,
                                         std::size_t ambient_dim, std::optional<std::size_t> transverse = {});

}  // namespace unbendable
