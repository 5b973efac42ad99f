#include "unbendable/monomial.hpp"

#include <algorithm>
#include <functional>

#include "unbendable/errors.hpp"

namespace unbendable {

Ring::Ring(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  for (std::size_t i = 0; i < names_->size(); ++i)
    for (std::size_t j = i + 1; j < names_->size(); ++j)
      if ((*names_)[i] == (*names_)[j])
        throw PreconditionError("duplicate variable name '" + (*names_)[i] + "'");
}

const std::vector<std::string>& Ring::names() const {
  static const std::vector<std::string> empty;
  return names_ ? *names_ : empty;
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  if (!names_) return std::nullopt;
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

std::size_t Ring::require(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw PreconditionError("unknown variable '" + name + "'");
  return *i;
}

Ring Ring::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = names();
  all.insert(all.end(), extra.begin(), extra.end());
  return Ring(std::move(all));
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.names_ == b.names_) return true;
  if (!a.names_ || !b.names_) return false;
  return *a.names_ == *b.names_;
}

Ring Ring::unify(const Ring& a, const Ring& b) {
  if (a.is_null()) return b;
  if (b.is_null()) return a;
  if (a.names_ == b.names_ || *a.names_ == *b.names_) return a;
  throw RingMismatch("operands live over different rings");
}

Monomial Monomial::variable(std::uint32_t index, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.entries_.push_back({index, exponent});
    m.degree_ = exponent;
  }
  return m;
}

Monomial Monomial::from_dense(const std::vector<std::uint32_t>& exponents) {
  Monomial m;
  for (std::uint32_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > 0) {
      m.entries_.push_back({i, exponents[i]});
      m.degree_ += exponents[i];
    }
  return m;
}

std::uint32_t Monomial::exponent(std::uint32_t index) const {
  for (const auto& [v, e] : entries_)
    if (v == index) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.entries_.reserve(entries_.size() + o.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < entries_.size() || j < o.entries_.size()) {
    if (j == o.entries_.size() || (i < entries_.size() && entries_[i].first < o.entries_[j].first)) {
      r.entries_.push_back(entries_[i++]);
    } else if (i == entries_.size() || o.entries_[j].first < entries_[i].first) {
      r.entries_.push_back(o.entries_[j++]);
    } else {
      r.entries_.push_back({entries_[i].first, entries_[i].second + o.entries_[j].second});
      ++i;
      ++j;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  std::size_t j = 0;
  for (const auto& [v, e] : entries_) {
    while (j < o.entries_.size() && o.entries_[j].first < v) ++j;
    if (j == o.entries_.size() || o.entries_[j].first != v || o.entries_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0;
  for (const auto& [v, e] : o.entries_) {
    std::uint32_t sub = 0;
    if (i < entries_.size() && entries_[i].first == v) sub = entries_[i++].second;
    if (sub > e) throw InternalError("monomial quotient is not exact");
    if (e > sub) r.entries_.push_back({v, e - sub});
  }
  if (i != entries_.size()) throw InternalError("monomial quotient is not exact");
  r.degree_ = o.degree_ - degree_;
  return r;
}

Monomial Monomial::without(std::uint32_t index, std::uint32_t* removed) const {
  Monomial r;
  if (removed) *removed = 0;
  for (const auto& en : entries_) {
    if (en.first == index) {
      if (removed) *removed = en.second;
      continue;
    }
    r.entries_.push_back(en);
    r.degree_ += en.second;
  }
  return r;
}

Monomial Monomial::remapped(const std::vector<long>& map) const {
  std::vector<Entry> out;
  for (const auto& [v, e] : entries_) {
    if (v >= map.size() || map[v] < 0) throw InternalError("variable dropped by remap");
    out.push_back({std::uint32_t(map[v]), e});
  }
  std::sort(out.begin(), out.end());
  Monomial r;
  for (const auto& en : out) {
    if (!r.entries_.empty() && r.entries_.back().first == en.first)
      r.entries_.back().second += en.second;
    else
      r.entries_.push_back(en);
    r.degree_ += en.second;
  }
  return r;
}

std::string Monomial::to_string(const Ring& ring) const {
  std::string out;
  for (const auto& [v, e] : entries_) {
    if (!out.empty()) out += '*';
    out += v < ring.size() ? ring.name(v) : "?" + std::to_string(v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& [v, e] : entries_) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  // Equal degree: the monomial with the smaller exponent in the last
  // differing variable is larger.
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  long i = long(ea.size()) - 1, j = long(eb.size()) - 1;
  while (i >= 0 || j >= 0) {
    std::uint32_t va = i >= 0 ? ea[i].first : 0, vb = j >= 0 ? eb[j].first : 0;
    if (i >= 0 && j >= 0 && va == vb) {
      if (ea[i].second != eb[j].second) return ea[i].second < eb[j].second ? 1 : -1;
      --i;
      --j;
    } else if (j < 0 || (i >= 0 && va > vb)) {
      return -1;  // a has a positive exponent in a later variable
    } else {
      return 1;
    }
  }
  return 0;
}

}  // namespace unbendable
