#include "gmqh/bundletower/splitting.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "gmqh/errors.hpp"

namespace gmqh::tower {

RingPtr roots_ring(int r) {
  std::vector<Variable> v;
  for (int i = 1; i <= r; ++i) v.push_back({"x" + std::to_string(i), 1});
  return make_ring(std::move(v));
}

RingPtr elementary_ring(int r) {
  std::vector<Variable> v;
  for (int i = 1; i <= r; ++i) v.push_back({"c" + std::to_string(i), i});
  return make_ring(std::move(v));
}

MultiPoly elementary(int r, int k) {
  const RingPtr ring = roots_ring(r);
  MultiPoly out(ring);
  if (k < 0 || k > r) return out;
  // Subsets of size k via bitmasks; r <= 3 in practice.
  for (unsigned mask = 0; mask < (1U << r); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Exponents e(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i)
      if (mask & (1U << i)) e[static_cast<std::size_t>(i)] = 1;
    out.add_term(std::move(e), Rational(1));
  }
  return out;
}

MultiPoly symmetric_to_elementary(const MultiPoly& f) {
  const int r = static_cast<int>(f.ring()->size());
  const RingPtr er = elementary_ring(r);
  std::vector<MultiPoly> e;
  for (int k = 1; k <= r; ++k) e.push_back(elementary(r, k).map_to(f.ring(), [&] {
    std::vector<MultiPoly> id;
    for (int i = 0; i < r; ++i) id.push_back(MultiPoly::variable(f.ring(), static_cast<std::size_t>(i)));
    return id;
  }()));
  MultiPoly rest = f;
  MultiPoly out(er);
  while (!rest.is_zero()) {
    const auto& [lead, c] = rest.lex_leading_term();
    for (int i = 0; i + 1 < r; ++i)
      if (lead[static_cast<std::size_t>(i)] < lead[static_cast<std::size_t>(i + 1)])
        throw std::invalid_argument("polynomial is not symmetric in the Chern roots");
    Exponents powers(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      const int next = i + 1 < r ? lead[static_cast<std::size_t>(i + 1)] : 0;
      powers[static_cast<std::size_t>(i)] = lead[static_cast<std::size_t>(i)] - next;
    }
    const Rational coeff = c;
    MultiPoly term(f.ring(), coeff);
    for (int i = 0; i < r; ++i) term *= e[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(powers[static_cast<std::size_t>(i)]));
    out.add_term(powers, coeff);
    rest -= term;
  }
  return out;
}

namespace {

std::vector<MultiPoly> compute_closed_form(Construction kind, int r) {
  const RingPtr ring = roots_ring(r);
  MultiPoly total(ring, Rational(1));
  int out_rank = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      if (kind == Construction::Wedge2 && i == j) continue;
      total *= MultiPoly(ring, Rational(1)) + MultiPoly::variable(ring, static_cast<std::size_t>(i)) +
               MultiPoly::variable(ring, static_cast<std::size_t>(j));
      ++out_rank;
    }
  std::vector<MultiPoly> out;
  for (int k = 0; k <= out_rank; ++k) out.push_back(symmetric_to_elementary(total.homogeneous_component(k)));
  return out;
}

}  // namespace

const std::vector<MultiPoly>& splitting_closed_form(Construction kind, int r) {
  if (r < 1 || r > 3)
    throw UnsupportedConstruction("splitting principle implemented for rank 1..3, got rank " + std::to_string(r));
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<MultiPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(static_cast<int>(kind), r);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_closed_form(kind, r)).first;
  return it->second;
}

}  // namespace gmqh::tower
