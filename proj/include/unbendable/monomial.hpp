#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "unbendable/ring.hpp"

namespace unbendable {

/// Sparse power product. Entries are (variable index, exponent) sorted by
/// index, exponents always positive.
class Monomial {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(std::uint32_t index, std::uint32_t exponent = 1);
  static Monomial from_dense(const std::vector<std::uint32_t>& exponents);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(std::uint32_t index) const;
  /// Largest variable index present, or -1 for the unit monomial.
  long max_index() const { return entries_.empty() ? -1 : long(entries_.back().first); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;
  /// Drops variable `index` entirely, returning the removed exponent.
  Monomial without(std::uint32_t index, std::uint32_t* removed = nullptr) const;
  /// Re-indexes variables: new index = map[old]; map[old] < 0 is not allowed.
  Monomial remapped(const std::vector<long>& map) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.entries_ == b.entries_;
  }

  std::string to_string(const Ring& ring) const;
  std::size_t hash() const;

 private:
  std::vector<Entry> entries_;
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic comparison with variable 0 largest.
/// Returns <0, 0, >0.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) > 0;
  }
};

}  // namespace unbendable
