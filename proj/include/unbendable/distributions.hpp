#pragma once

#include <string>
#include <vector>

#include "unbendable/linalg.hpp"

namespace unbendable {

using PointQ = std::vector<Rational>;

/// Vector field with rational-function components on a chart (the ring's
/// variables are the chart coordinates).
struct VectorField {
  Ring chart;
  std::vector<RationalFunction> components;

  VectorField() = default;
  VectorField(Ring c, std::vector<RationalFunction> comps);
  static VectorField zero(const Ring& chart);
  /// The coordinate field d/d(chart variable i).
  static VectorField coordinate(const Ring& chart, std::size_t i);
  static VectorField parse(const std::string& text, const Ring& chart);

  std::size_t dim() const { return components.size(); }
  bool is_zero() const;
  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  VectorField scaled(const RationalFunction& f) const;
  /// Derivative of f along the field.
  RationalFunction apply(const RationalFunction& f) const;
  /// Component values at a point; DomainError on a vanishing denominator.
  std::vector<Rational> evaluate(const PointQ& pt) const;
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.components == b.components; }

  /// e.g. "d/dx + p*d/dy + q^2*d/dz".
  std::string to_string() const;
};

struct DistributionSpec {
  Ring chart;
  std::vector<VectorField> generators;
  std::string name;
  PointQ probe;  // default evaluation point, may be empty
};

VectorField lie_bracket(const VectorField& v, const VectorField& w);

enum class FlagMode { Strong, Weak };
const char* to_string(FlagMode m);

struct FlagStep {
  std::vector<VectorField> generators;  // fraction-field basis of the step
  std::size_t generic_rank = 0;
  std::size_t probe_rank = 0;
};

struct FlagReport {
  FlagMode mode = FlagMode::Strong;
  std::vector<FlagStep> steps;  // steps[0] is D itself
  std::vector<std::size_t> growth_vector;
  bool bracket_generating = false;
  std::size_t stabilized_at = 0;
  /// Ranks are over the fraction field; saturation is not computed.
  static constexpr const char* rank_convention = "fraction-field ranks, no saturation";
};

/// Matrix whose rows are the field components.
Matrix<RationalFunction> generator_matrix(const std::vector<VectorField>& fields);
std::size_t generic_rank(const std::vector<VectorField>& fields);
/// Rank of the evaluated fields; PreconditionError ("probe invalid") on a pole.
std::size_t rank_at(const std::vector<VectorField>& fields, const PointQ& pt);
/// First fraction-field basis among the fields, in order.
std::vector<VectorField> prune_to_basis(const std::vector<VectorField>& fields);
/// True iff every field lies in the fraction-field span of `span`.
bool in_span(const std::vector<VectorField>& span, const std::vector<VectorField>& fields);

/// max_steps = 0 selects dim + 1.
FlagReport derived_flag(const DistributionSpec& d, FlagMode mode, std::size_t max_steps, const PointQ& probe);
std::vector<std::size_t> growth_vector_at(const DistributionSpec& d, const PointQ& pt);

struct CauchyCharacteristic {
  std::size_t generic_rank = 0;
  std::size_t rank_at_point = 0;
  std::vector<VectorField> generic_basis;
  std::vector<std::vector<Rational>> basis_at_point;
};
CauchyCharacteristic cauchy_characteristic(const DistributionSpec& d, const PointQ& pt);

bool regularity_check(const DistributionSpec& d, const PointQ& pt);

struct LeviTensor {
  std::vector<std::size_t> complement;  // coordinate directions spanning T/D at the point
  /// entries[i][j] = class of [g_i, g_j](pt) in the complement basis.
  std::vector<std::vector<std::vector<Rational>>> entries;
  std::size_t image_rank = 0;
  bool is_zero() const { return image_rank == 0; }
};
LeviTensor levi_tensor_at(const DistributionSpec& d, const PointQ& pt);

/// Prolongation on the chart (base, p2..pr), generators d/dp_i and
/// g_1 + sum p_i g_i.
DistributionSpec prolong(const DistributionSpec& d);
/// The same generators lifted to the prolongation chart (pullback pi^{-1}D
/// adds the fiber directions).
DistributionSpec pullback_to(const DistributionSpec& d, const Ring& bigger_chart, bool add_fiber_directions);

enum class Rank2Class { Goursat, Cartan, NotBracketGenerating, Irregular, OtherBracketGenerating };
const char* to_string(Rank2Class c);

struct Rank2Classification {
  Rank2Class kind = Rank2Class::Irregular;
  FlagReport strong;
  std::string reason;
};
Rank2Classification classify_rank2(const DistributionSpec& d, const PointQ& pt);

/// Forms (component vectors) annihilating every field, over the fraction field.
std::vector<std::vector<RationalFunction>> annihilator_coframe(const std::vector<VectorField>& fields);

struct ZelenkoNullField {
  Ring chart;                                        // x..., w1, w2
  std::vector<std::vector<RationalFunction>> forms;  // alpha, beta on the base
  std::vector<RationalFunction> theta;               // coefficients of dx_i on W
  Matrix<RationalFunction> sigma;                    // d(theta) as an antisymmetric matrix
  std::size_t sigma_rank = 0;
  VectorField null_field;
  bool theta_vanishes = false;       // theta(V) = 0
  bool transverse_to_fiber = false;  // base part of V is nonzero
  bool projects_into_d = false;      // base part of V lies in D
  std::vector<std::size_t> null_dims_at_probes;
  bool passed() const { return theta_vanishes && transverse_to_fiber && projects_into_d; }
};
ZelenkoNullField zelenko_null_field(const DistributionSpec& d, const PointQ& pt);

}  // namespace unbendable
