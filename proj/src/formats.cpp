#include "unbendable/formats.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "unbendable/families.hpp"
#include "unbendable/parser.hpp"

namespace unbendable {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Line {
  std::size_t number;
  std::string key, value;
};

// "key: value" lines; blank lines and '#' comments skipped.
std::vector<Line> split_lines(const std::string& text, const std::string& source) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    auto hash = raw.find('#');
    std::string t = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (t.empty()) continue;
    auto colon = t.find(':');
    if (colon == std::string::npos) throw FileFormatError(source, n, "expected 'key: value'");
    out.push_back({n, trim(t.substr(0, colon)), trim(t.substr(colon + 1))});
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Runs f, turning library errors into errors pointing at the line.
template <class Fn>
auto at_line(const std::string& source, std::size_t line, Fn&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FileFormatError&) {
    throw;
  } catch (const Error& e) {
    throw FileFormatError(source, line, e.what());
  }
}

std::vector<VecQ> bracketed_lists(const std::string& s) {
  std::vector<VecQ> out;
  std::size_t pos = 0;
  while ((pos = s.find('[', pos)) != std::string::npos) {
    auto end = s.find(']', pos);
    if (end == std::string::npos) throw ParseError("unterminated '['", pos);
    out.push_back(parse_rational_list(s.substr(pos, end - pos + 1)));
    pos = end + 1;
  }
  return out;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError(path, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

VecQ parse_rational_list(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw ParseError("unterminated '['", 0);
    t = t.substr(1, t.size() - 2);
  }
  for (auto& c : t)
    if (c == ',') c = ' ';
  VecQ out;
  for (const auto& w : words(t)) out.push_back(Rational::parse(w));
  return out;
}

DistributionSpec parse_distribution_file(const std::string& text, const std::string& source) {
  DistributionSpec d;
  std::vector<std::pair<std::size_t, std::string>> gens;
  std::optional<std::pair<std::size_t, std::string>> probe;
  bool have_chart = false;
  for (const auto& l : split_lines(text, source)) {
    if (l.key == "chart") {
      d.chart = at_line(source, l.number, [&] { return Ring(words(l.value)); });
      have_chart = true;
    } else if (l.key == "field") {
      if (l.value != "QQ") throw FileFormatError(source, l.number, "only the field QQ is supported");
    } else if (l.key == "gen") {
      gens.emplace_back(l.number, l.value);
    } else if (l.key == "probe") {
      probe = std::make_pair(l.number, l.value);
    } else if (l.key == "name") {
      d.name = l.value;
    } else {
      throw FileFormatError(source, l.number, "unknown key '" + l.key + "'");
    }
  }
  if (!have_chart) throw FileFormatError(source, 0, "missing 'chart:' line");
  if (gens.empty()) throw FileFormatError(source, 0, "no 'gen:' lines");
  for (const auto& [n, g] : gens)
    d.generators.push_back(at_line(source, n, [&] { return VectorField::parse(g, d.chart); }));
  if (probe) {
    d.probe = at_line(source, probe->first, [&] { return parse_rational_list(probe->second); });
    if (d.probe.size() != d.chart.size()) throw FileFormatError(source, probe->first, "probe has the wrong length");
  }
  return d;
}

HypersurfaceFile parse_hypersurface_file(const std::string& text, const std::string& source) {
  std::map<std::string, Line> seen;
  for (const auto& l : split_lines(text, source)) {
    if (l.key != "ambient" && l.key != "vars" && l.key != "poly" && l.key != "line" && l.key != "point")
      throw FileFormatError(source, l.number, "unknown key '" + l.key + "'");
    if (seen.count(l.key)) throw FileFormatError(source, l.number, "duplicate key '" + l.key + "'");
    seen.emplace(l.key, l);
  }
  for (const char* k : {"ambient", "vars", "poly", "line"})
    if (!seen.count(k)) throw FileFormatError(source, 0, std::string("missing '") + k + ":' line");
  const auto& amb = seen.at("ambient");
  const auto& vars = seen.at("vars");
  Ring ring = at_line(source, vars.number, [&] { return Ring(words(vars.value)); });
  if (amb.value.size() < 2 || amb.value[0] != 'P' || amb.value.substr(1) != std::to_string(ring.size() - 1))
    throw FileFormatError(source, amb.number, "ambient must be P" + std::to_string(ring.size() - 1));
  const auto& poly = seen.at("poly");
  HypersurfaceFile out;
  out.surface = at_line(source, poly.number, [&] { return Hypersurface(parse_polynomial(poly.value, ring)); });
  const auto& line = seen.at("line");
  auto lists = at_line(source, line.number, [&] { return bracketed_lists(line.value); });
  if (lists.size() != 2) throw FileFormatError(source, line.number, "line needs two bracketed vectors");
  for (const auto& v : lists)
    if (v.size() != ring.size()) throw FileFormatError(source, line.number, "line vector has the wrong length");
  out.line = {lists[0], lists[1]};
  if (seen.count("point")) {
    const auto& pt = seen.at("point");
    out.point = at_line(source, pt.number, [&] { return parse_rational_list(pt.value); });
    if (out.point->size() != ring.size()) throw FileFormatError(source, pt.number, "point has the wrong length");
  }
  return out;
}

OdeSpec parse_ode_args(const std::vector<std::string>& args) {
  std::optional<int> order;
  std::optional<std::string> rhs;
  for (const auto& a : args) {
    auto eq = a.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'order=N' or 'F = ...'", 0);
    std::string key = trim(a.substr(0, eq)), value = trim(a.substr(eq + 1));
    if (key == "order") {
      try {
        std::size_t used = 0;
        order = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
      } catch (const std::logic_error&) {
        throw ParseError("order must be an integer", eq + 1);
      }
    } else if (key == "F") {
      rhs = value;
    } else {
      throw ParseError("unknown ODE field '" + key + "'", 0);
    }
  }
  if (!order) throw ParseError("missing order=N", 0);
  if (*order < 2) throw PreconditionError("ODE order must be at least 2");
  return make_ode(*order, rhs ? *rhs : "0");
}

OdeSpec parse_ode_file(const std::string& text, const std::string& source) {
  auto lines = split_lines(text, source);
  if (lines.size() != 1 || lines[0].key != "ode") throw FileFormatError(source, lines.empty() ? 0 : lines[0].number, "expected one 'ode:' line");
  const auto& l = lines[0];
  auto fpos = l.value.find("F");
  std::vector<std::string> parts;
  if (fpos == std::string::npos) {
    parts = words(l.value);
  } else {
    parts = words(l.value.substr(0, fpos));
    parts.push_back(l.value.substr(fpos));
  }
  return at_line(source, l.number, [&] { return parse_ode_args(parts); });
}

FamilyFile parse_family_file(const std::string& text, const std::string& source) {
  FamilyFile out;
  bool have = false;
  for (const auto& l : split_lines(text, source)) {
    if (l.key == "family") {
      auto zpos = l.value.find("zeta");
      if (zpos == std::string::npos) throw FileFormatError(source, l.number, "missing 'zeta = ...'");
      auto head = words(l.value.substr(0, zpos));
      if (head.empty() || head[0] != "blowup") throw FileFormatError(source, l.number, "only 'blowup' families are supported");
      std::optional<std::size_t> n;
      for (std::size_t i = 1; i < head.size(); ++i) {
        if (head[i].rfind("n=", 0) != 0) throw FileFormatError(source, l.number, "unexpected '" + head[i] + "'");
        try {
          n = std::stoul(head[i].substr(2));
        } catch (const std::logic_error&) {
          throw FileFormatError(source, l.number, "n must be an integer");
        }
      }
      auto eq = l.value.find('=', zpos);
      if (eq == std::string::npos) throw FileFormatError(source, l.number, "missing 'zeta = ...'");
      out.zeta = at_line(source, l.number, [&] { return parse_zeta(l.value.substr(eq + 1)); });
      if (n && *n != out.zeta.size())
        throw FileFormatError(source, l.number, "n=" + std::to_string(*n) + " but zeta has " + std::to_string(out.zeta.size()) + " components");
      have = true;
    } else if (l.key == "probe") {
      out.probe = at_line(source, l.number, [&] { return parse_rational_list(l.value); });
    } else {
      throw FileFormatError(source, l.number, "unknown key '" + l.key + "'");
    }
  }
  if (!have) throw FileFormatError(source, 0, "missing 'family:' line");
  if (out.probe && out.probe->size() != out.zeta.size() + 1) throw FileFormatError(source, 0, "probe has the wrong length");
  return out;
}

}  // namespace unbendable
