#pragma once

#include <array>
#include <string>

#include "unbendable/distributions.hpp"

namespace unbendable {

/// Chart (t, u, u1, ..., uk) of k-jets of functions u(t).
Ring jet_chart(int k);

/// Canonical rank-2 system on J^k: d/du_k and d/dt + sum u_{i+1} d/du_i.
DistributionSpec build_jet_distribution(int k);

/// u^(n) = F(t, u, ..., u_{n-1}).
struct OdeSpec {
  int order = 2;
  RationalFunction rhs;  // over jet_chart(order - 1)
};

/// Parses the right-hand side over the chart of J^{order-1}.
OdeSpec make_ode(int order, const std::string& rhs);

DistributionSpec ode_to_distribution(const OdeSpec& o);

struct GoursatOdeForm {
  bool admissible = false;
  /// F = a3 u_{n-1}^3 + a2 u_{n-1}^2 + a1 u_{n-1} + a0 when admissible.
  std::array<RationalFunction, 4> a;
  std::string witness;  // highest term of degree > 3 otherwise
};

/// PreconditionError when F is not polynomial in u_{n-1}.
GoursatOdeForm check_goursat_ode_form(const OdeSpec& o);

}  // namespace unbendable
