#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unbendable/rational.hpp"

namespace unbendable {

/// Ordered key/value entries under a dotted section name.
struct Section {
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;

  Section& set(const std::string& key, const std::string& value);
  const std::string* find(const std::string& key) const;
  friend bool operator==(const Section&, const Section&) = default;
};

/// Report tree rendered either for people or as line-oriented
///   [section.sub]
///   key = value
/// blocks. Keys match [A-Za-z0-9_.-]+ and values are single lines.
struct Report {
  std::vector<Section> sections;

  Section& section(const std::string& name);
  const Section* find(const std::string& name) const;
  std::string to_text() const;
  std::string to_structured() const;
  /// Inverse of to_structured; ParseError carries the 1-based line number.
  static Report parse_structured(const std::string& text);
  friend bool operator==(const Report&, const Report&) = default;
};

std::string format_sizes(const std::vector<std::size_t>& v);  // "(2,3,5)"
std::string format_ints(const std::vector<int>& v);           // "{1,0,0,0}"
std::string format_vector(const std::vector<Rational>& v);     // "(1,-1/2,0)"
std::string format_bool(bool b);                               // "true" / "false"

}  // namespace unbendable
