#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace unbendable {

/// Ordered list of variable names shared by polynomials. An empty Ring (no
/// name list at all) marks ring-less constants, which adopt the ring of
/// whatever they are combined with.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names);

  bool is_null() const { return !names_; }
  std::size_t size() const { return names_ ? names_->size() : 0; }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const;
  std::optional<std::size_t> index_of(const std::string& name) const;
  /// Like index_of but throws PreconditionError on unknown names.
  std::size_t require(const std::string& name) const;

  /// A new ring with `extra` appended after the current names.
  Ring extended(const std::vector<std::string>& extra) const;

  friend bool operator==(const Ring& a, const Ring& b);

  /// Common ring of two operands: a null ring yields to the other one,
  /// otherwise the two must be equal (RingMismatch).
  static Ring unify(const Ring& a, const Ring& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace unbendable
