#include "unbendable/report.hpp"

#include <sstream>

#include "unbendable/errors.hpp"

namespace unbendable {

namespace {

bool valid_key(const std::string& k) {
  if (k.empty()) return false;
  for (char c : k)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-')) return false;
  return true;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Section& Section::set(const std::string& key, const std::string& value) {
  if (!valid_key(key)) throw PreconditionError("invalid report key '" + key + "'");
  if (value.find('\n') != std::string::npos) throw PreconditionError("report values must be single lines");
  for (auto& [k, v] : entries)
    if (k == key) {
      v = value;
      return *this;
    }
  entries.emplace_back(key, value);
  return *this;
}

const std::string* Section::find(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return &v;
  return nullptr;
}

Section& Report::section(const std::string& name) {
  if (!valid_key(name)) throw PreconditionError("invalid section name '" + name + "'");
  for (auto& s : sections)
    if (s.name == name) return s;
  sections.push_back(Section{name, {}});
  return sections.back();
}

const Section* Report::find(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& s : sections) {
    out << s.name << ":\n";
    std::size_t width = 0;
    for (const auto& e : s.entries) width = std::max(width, e.first.size());
    for (const auto& [k, v] : s.entries) out << "  " << k << std::string(width - k.size(), ' ') << "  " << v << "\n";
  }
  return out.str();
}

std::string Report::to_structured() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < sections.size(); ++i) {
    if (i) out << "\n";
    out << "[" << sections[i].name << "]\n";
    for (const auto& [k, v] : sections[i].entries) out << k << " = " << v << "\n";
  }
  return out.str();
}

Report Report::parse_structured(const std::string& text) {
  Report r;
  Section* cur = nullptr;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ParseError("line " + std::to_string(lineno) + ": unterminated section header", lineno);
      std::string name = t.substr(1, t.size() - 2);
      if (!valid_key(name)) throw ParseError("line " + std::to_string(lineno) + ": invalid section name", lineno);
      r.sections.push_back(Section{name, {}});
      cur = &r.sections.back();
      continue;
    }
    auto eq = line.find(" = ");
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'", lineno);
    if (!cur) throw ParseError("line " + std::to_string(lineno) + ": entry outside a section", lineno);
    std::string key = trim(line.substr(0, eq));
    if (!valid_key(key)) throw ParseError("line " + std::to_string(lineno) + ": invalid key", lineno);
    std::string value = line.substr(eq + 3);
    if (!value.empty() && value.back() == '\r') value.pop_back();
    cur->entries.emplace_back(key, value);
  }
  return r;
}

std::string format_sizes(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string format_ints(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string format_vector(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

std::string format_bool(bool b) { return b ? "true" : "false"; }

}  // namespace unbendable
