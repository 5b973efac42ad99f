#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unbendable/distributions.hpp"
#include "unbendable/jets.hpp"
#include "unbendable/vmrt.hpp"

namespace unbendable {

/// Whole file as a string; FileFormatError (line 0) when unreadable.
std::string read_text_file(const std::string& path);

/// chart: x y p q z
/// field: QQ
/// gen: d/dq
/// gen: d/dx + p*d/dy + q*d/dp + q^2*d/dz
/// probe: 0 0 0 0 0
DistributionSpec parse_distribution_file(const std::string& text, const std::string& source = "<input>");

struct HypersurfaceFile {
  Hypersurface surface;
  LineSpec line;
  std::optional<VecQ> point;
};
/// ambient: P6 / vars: ... / poly: ... / line: [..] [..] / optional point: [..]
HypersurfaceFile parse_hypersurface_file(const std::string& text, const std::string& source = "<input>");

/// ode: order=4  F = t*u3^3 + u
OdeSpec parse_ode_file(const std::string& text, const std::string& source = "<input>");
/// The pieces "order=4" and "F = ..." given separately.
OdeSpec parse_ode_args(const std::vector<std::string>& args);

struct FamilyFile {
  std::vector<Poly> zeta;
  std::optional<PointQ> probe;
};
/// family: blowup  n=5  zeta = 1, s, s^2, s^3, s^4 / optional probe: ...
FamilyFile parse_family_file(const std::string& text, const std::string& source = "<input>");

/// "[1,0,-1/2]" or "1 0 -1/2".
VecQ parse_rational_list(const std::string& text);

}  // namespace unbendable
