#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gmqh/exactpoly/poly.hpp"

namespace gmqh {

namespace detail {

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

inline Exponents difference(const Exponents& a, const Exponents& b) {
  Exponents d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace detail

// Polynomial ideal with its reduced Groebner basis for the ring's weighted
// degrevlex order. The basis is computed once at construction.
template <class K>
class PolyIdeal {
 public:
  PolyIdeal(RingPtr ring, std::vector<Poly<K>> generators)
      : ring_(std::move(ring)), generators_(std::move(generators)) {
    if (!ring_->all_degrees_positive())
      throw std::invalid_argument("Groebner bases need positively graded variables");
    for (const auto& g : generators_)
      if (!(*g.ring() == *ring_)) throw ContextMismatch("ideal generator");
    basis_ = buchberger(generators_);
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly<K>>& generators() const { return generators_; }
  const std::vector<Poly<K>>& groebner_basis() const { return basis_; }

  Poly<K> normal_form(const Poly<K>& p) const { return reduce(p, basis_); }
  bool contains(const Poly<K>& p) const { return normal_form(p).is_zero(); }
  bool is_unit_ideal() const { return basis_.size() == 1 && basis_[0].is_constant(); }

  std::vector<Exponents> leading_monomials() const {
    std::vector<Exponents> out;
    for (const auto& g : basis_) out.push_back(g.leading_term().first);
    return out;
  }

  // Monomials outside the initial ideal, ascending in the monomial order, or
  // nullopt when the quotient is infinite dimensional.
  std::optional<std::vector<Exponents>> standard_monomials() const {
    const std::size_t n = ring_->size();
    const auto lms = leading_monomials();
    std::vector<int> bound(n, -1);
    for (const auto& m : lms) {
      int support = -1, count = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] > 0) {
          support = static_cast<int>(i);
          ++count;
        }
      if (count == 0) return std::vector<Exponents>{};
      if (count == 1) {
        auto& b = bound[static_cast<std::size_t>(support)];
        b = b < 0 ? m[static_cast<std::size_t>(support)] : std::min(b, m[static_cast<std::size_t>(support)]);
      }
    }
    for (int b : bound)
      if (b < 0) return std::nullopt;
    std::vector<Exponents> out;
    Exponents e(n, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
      if (i == n) {
        for (const auto& m : lms)
          if (detail::divides(m, e)) return;
        out.push_back(e);
        return;
      }
      for (int k = 0; k < bound[i]; ++k) {
        e[i] = k;
        walk(i + 1);
      }
      e[i] = 0;
    };
    walk(0);
    std::sort(out.begin(), out.end(),
              [&](const Exponents& a, const Exponents& b) { return ring_->degrevlex_less(a, b); });
    return out;
  }

  std::optional<std::size_t> quotient_rank() const {
    auto sm = standard_monomials();
    if (!sm) return std::nullopt;
    return sm->size();
  }

  // Full reduction of f modulo G: no term of the result is divisible by any
  // leading monomial of G.
  static Poly<K> reduce(const Poly<K>& f, const std::vector<Poly<K>>& G) {
    Poly<K> p = f;
    Poly<K> r(f.ring());
    while (!p.is_zero()) {
      const auto& lt = p.leading_term();
      const Exponents e = lt.first;
      const K c = lt.second;
      bool reduced = false;
      for (const auto& g : G) {
        const auto& lg = g.leading_term();
        if (!detail::divides(lg.first, e)) continue;
        K factor = c / lg.second;
        p -= Poly<K>::monomial(f.ring(), detail::difference(e, lg.first), factor) * g;
        reduced = true;
        break;
      }
      if (!reduced) {
        r.add_term(e, c);
        p.add_term(e, -c);
      }
    }
    return r;
  }

  static Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g) {
    const auto& [ef, cf] = f.leading_term();
    const auto& [eg, cg] = g.leading_term();
    const Exponents m = detail::lcm(ef, eg);
    K inv_f = K(1) / cf;
    K inv_g = K(1) / cg;
    return Poly<K>::monomial(f.ring(), detail::difference(m, ef), inv_f) * f -
           Poly<K>::monomial(f.ring(), detail::difference(m, eg), inv_g) * g;
  }

 private:
  static Poly<K> make_monic(const Poly<K>& p) {
    K inv = K(1) / p.leading_term().second;
    return inv * p;
  }

  std::vector<Poly<K>> buchberger(const std::vector<Poly<K>>& input) const {
    std::vector<Poly<K>> G;
    for (const auto& g : input)
      if (!g.is_zero()) G.push_back(make_monic(g));
    if (G.empty()) return G;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 1; j < G.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
      auto [i, j] = pairs.back();
      pairs.pop_back();
      if (detail::coprime(G[i].leading_term().first, G[j].leading_term().first)) continue;
      Poly<K> h = reduce(s_polynomial(G[i], G[j]), G);
      if (h.is_zero()) continue;
      G.push_back(make_monic(h));
      const std::size_t k = G.size() - 1;
      for (std::size_t a = 0; a < k; ++a) pairs.emplace_back(a, k);
    }
    // Minimalize, then interreduce.
    std::vector<Poly<K>> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
      const Exponents& ei = G[i].leading_term().first;
      bool redundant = false;
      for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
        if (i == j) continue;
        const Exponents& ej = G[j].leading_term().first;
        if (detail::divides(ej, ei) && (ej != ei || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(G[i]);
    }
    std::vector<Poly<K>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Poly<K>> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      const Poly<K>& g = minimal[i];
      const auto lt = g.leading_term();
      Poly<K> tail = g;
      tail.add_term(lt.first, -lt.second);
      Poly<K> r = reduce(tail, others);
      r.add_term(lt.first, lt.second);
      reduced.push_back(make_monic(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly<K>& a, const Poly<K>& b) {
      return ring_->degrevlex_less(a.leading_term().first, b.leading_term().first);
    });
    return reduced;
  }

  RingPtr ring_;
  std::vector<Poly<K>> generators_;
  std::vector<Poly<K>> basis_;
};

}  // namespace gmqh
