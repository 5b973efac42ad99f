#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unbendable/fundforms.hpp"
#include "unbendable/rational_function.hpp"

namespace unbendable {

using VecQ = std::vector<Rational>;

/// Hypersurface {f = 0} in P^n; f homogeneous in x0..xn.
struct Hypersurface {
  Ring ring;
  Poly f;
  std::size_t ambient_dim = 0;  // n
  std::uint32_t degree = 0;     // d

  Hypersurface() = default;
  explicit Hypersurface(Poly poly);
};

struct LineSpec {
  VecQ p, q;
};

/// Coordinates x = A X in which the line becomes {X2 = ... = Xn = 0},
/// with X = (1, 0, ...) <-> p and X = (0, 1, 0, ...) <-> q.
struct NormalizedLine {
  Matrix<Rational> change;  // A
  Matrix<Rational> inverse;
  Hypersurface surface;     // f(A X), same variable names
  VecQ to_normalized(const VecQ& x) const { return inverse.apply(x); }
  VecQ to_original(const VecQ& x) const { return change.apply(x); }
};
NormalizedLine normalize_line(const Hypersurface& h, const LineSpec& l);

bool contains_line(const Hypersurface& h, const LineSpec& l);
/// Partials of f restricted to the line, as binary forms in (t0, t1), in
/// normalized coordinates.
std::vector<Poly> restricted_gradient(const Hypersurface& h, const LineSpec& l);
bool smooth_along_line(const Hypersurface& h, const LineSpec& l);

/// VMRT forms h_1..h_d with f(x + lambda y) = sum h_k(y) lambda^k, where y
/// ranges over the coordinates other than the first nonzero one of x. The
/// variables are named y<i> after the coordinate index.
template <class F>
std::vector<MultiPoly<F>> vmrt_equations(const Hypersurface& h, const std::vector<F>& x);

/// Dehomogenized forms g_k in variables z<i>. By default the chart is
/// y1 = 1 (or y0 = 1 when x0 = 0), which puts the line's direction at the
/// origin.
template <class F>
std::vector<MultiPoly<F>> affine_vmrt(const Hypersurface& h, const std::vector<F>& x,
                                      std::optional<std::size_t> dehomogenize = {});

struct NormalBundleType {
  std::vector<int> splitting;          // descending
  std::vector<std::size_t> h0_twists;  // h0(N(k)) for k = -1, 0, 1, ...
  bool unbendable() const;
  std::string to_string() const;  // "{1,0,0,0}"
};
/// PreconditionError if the hypersurface is singular somewhere on the line.
NormalBundleType normal_bundle_type(const Hypersurface& h, const LineSpec& l);

struct FfProfile {
  VecQ point;  // in original coordinates
  std::size_t tangent_dim = 0;
  std::vector<Poly> equations;  // h_k
  std::vector<Poly> affine;     // g_k
  std::optional<CurveGerm<Rational>> germ;
  std::vector<std::size_t> ranks;  // empty when the VMRT is singular at the point
  std::string note;                // "VMRT singular at the point" etc.
  bool ff_nonzero(int k) const {
    return ranks.size() >= std::size_t(k) && ranks[std::size_t(k - 1)] == ranks[std::size_t(k - 2)] + 1;
  }
};
/// Chains affine_vmrt, branch_expand and osculating_flag at a point of the
/// line (original coordinates).
FfProfile ff_profile_at_point(const Hypersurface& h, const LineSpec& l, const VecQ& x, int order = 4);

enum class LocusKind { Empty, Points, Everywhere };
const char* to_string(LocusKind k);

struct ExceptionalValue {
  Rational s;
  std::vector<std::size_t> ranks;  // pointwise profile at x(s)
  bool ff3_zero = false;
};

struct Ff3Locus {
  LocusKind kind = LocusKind::Empty;
  Poly locus;  // monic squarefree gcd in s; 1 when empty
  std::vector<Rational> rational_zeros;
  bool infinity_ff3_nonzero = false;
  std::vector<std::size_t> infinity_ranks;
  Poly exceptional;  // product of the degeneracy factors (monic), 1 when none
  std::vector<ExceptionalValue> resolved;
  Poly unresolved;  // factor without rational roots, 1 when none
  bool degree_bound_ok = true;  // zeros on the line, counted with infinity, <= 1
  std::string reason;
};
/// FF^3 along x(s) = [1:s:0:...:0] over Q(s), plus the point at infinity.
Ff3Locus ff3_vanishing_locus(const Hypersurface& h, const LineSpec& l);

enum class Verdict { Goursat, Cartan, NotApplicable, Inconclusive };
const char* to_string(Verdict v);

struct VmrtReport {
  bool contains_line = false;
  bool smooth_along_line = false;
  std::optional<NormalBundleType> normal_bundle;
  Matrix<Rational> change;
  std::vector<FfProfile> profiles;  // at the probe points
  std::optional<Ff3Locus> ff3;
  std::optional<VecQ> certificate;  // probe with a linearly nondegenerate VMRT germ
  Verdict verdict = Verdict::NotApplicable;
  std::string reason;
};
/// Probes are values s with x(s) = [1:s:0:...:0] in normalized coordinates.
VmrtReport classify_line_family(const Hypersurface& h, const LineSpec& l, const std::vector<Rational>& probes,
                                int order = 4);

/// Signed permutation (gamma x)_i = scale_i * x_{perm(i)}.
struct CoordinateMap {
  std::vector<std::size_t> perm;
  VecQ scale;
  VecQ apply(const VecQ& x) const;
};

struct SymmetryResult {
  bool symmetric = false;
  Rational factor;  // f o gamma = factor * f
  bool preserves_line = false;
  bool fixes_line_pointwise = false;
  std::vector<VecQ> fixed_points;  // last nonzero coordinate 1
};
SymmetryResult check_symmetry(const Hypersurface& h, const CoordinateMap& gamma,
                              const std::optional<LineSpec>& l = {});

}  // namespace unbendable
