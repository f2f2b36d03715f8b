#include "gmqh/exactpoly/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gmqh {

PolyRing::PolyRing(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw std::invalid_argument("variable with empty name");
    if (!seen.insert(v.name).second) throw std::invalid_argument("duplicate variable " + v.name);
  }
}

std::optional<std::size_t> PolyRing::find(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t PolyRing::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown variable " + name);
}

int PolyRing::weighted_degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * vars_[i].degree;
  return d;
}

bool PolyRing::all_degrees_positive() const {
  return std::all_of(vars_.begin(), vars_.end(), [](const Variable& v) { return v.degree > 0; });
}

bool PolyRing::degrevlex_less(const Exponents& a, const Exponents& b) const {
  const int da = weighted_degree(a);
  const int db = weighted_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

RingPtr PolyRing::extended(const std::vector<Variable>& extra) const {
  std::vector<Variable> vars = vars_;
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make_ring(std::move(vars));
}

}  // namespace gmqh
