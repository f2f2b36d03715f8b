#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <string>
#include <utility>
#include <vector>

#include "gmqh/errors.hpp"
#include "gmqh/exactpoly/rational.hpp"
#include "gmqh/exactpoly/ratfunc.hpp"
#include "gmqh/exactpoly/ring.hpp"

namespace gmqh {

// Sparse multivariate polynomial over a field K in a shared variable context.
// No zero coefficient is ever stored; every exponent vector has the length of
// the context.
template <class K>
class Poly {
 public:
  using Terms = std::map<Exponents, K>;

  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("null polynomial ring");
  }
  Poly(RingPtr ring, const K& constant) : Poly(std::move(ring)) {
    if (!is_zero_coeff(constant)) terms_.emplace(Exponents(ring_->size(), 0), constant);
  }

  static Poly variable(RingPtr ring, std::size_t index) {
    Poly p(ring);
    Exponents e(ring->size(), 0);
    e.at(index) = 1;
    p.terms_.emplace(std::move(e), K(1));
    return p;
  }
  static Poly variable(RingPtr ring, const std::string& name) {
    const std::size_t i = ring->index_of(name);
    return variable(std::move(ring), i);
  }
  static Poly monomial(RingPtr ring, Exponents e, const K& coeff) {
    Poly p(std::move(ring));
    if (e.size() != p.ring_->size()) throw std::invalid_argument("exponent vector length mismatch");
    for (int x : e)
      if (x < 0) throw std::invalid_argument("negative exponent");
    p.add_term(std::move(e), coeff);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  K coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }
  K constant_term() const { return coefficient(Exponents(ring_->size(), 0)); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(ring_->size(), 0));
  }

  void add_term(Exponents e, const K& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_same(b);
    Poly r(a.ring_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e = ea;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        K c = ca * cb;
        r.add_term(std::move(e), c);
      }
    return r;
  }
  friend Poly operator*(const K& s, const Poly& p) {
    Poly r(p.ring_);
    if (is_zero_coeff(s)) return r;
    for (const auto& [e, c] : p.terms_) {
      K v = s * c;
      r.terms_.emplace(e, v);
    }
    return r;
  }
  friend Poly operator*(const Poly& p, const K& s) { return s * p; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return *a.ring_ == *b.ring_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned k) const {
    Poly result(ring_, K(1));
    Poly base = *this;
    while (k > 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return result;
  }

  // Weighted degree of every term, or nullopt for the zero polynomial or a
  // non-homogeneous one.
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = ring_->weighted_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (ring_->weighted_degree(e) != d) return std::nullopt;
    return d;
  }
  bool is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

  Poly homogeneous_component(int degree) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_)
      if (ring_->weighted_degree(e) == degree) r.terms_.emplace(e, c);
    return r;
  }
  Poly truncated_above(int max_degree) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_)
      if (ring_->weighted_degree(e) <= max_degree) r.terms_.emplace(e, c);
    return r;
  }

  // Exponent of variable i is bounded by (max_exp) - drop terms beyond it.
  Poly truncated_in(std::size_t var, int max_exp) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_)
      if (e[var] <= max_exp) r.terms_.emplace(e, c);
    return r;
  }

  int max_exponent(std::size_t var) const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
    return m;
  }

  // Leading term in the ring's weighted degrevlex order.
  const std::pair<const Exponents, K>& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (ring_->degrevlex_less(best->first, it->first)) best = it;
    return *best;
  }
  // Leading term in lex order (index 0 most significant).
  const std::pair<const Exponents, K>& lex_leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  // Coefficients with respect to variable `var`: exponent -> polynomial in
  // the remaining variables (same ring, var exponent zeroed).
  std::map<int, Poly> collect(std::size_t var) const {
    std::map<int, Poly> out;
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      const int k = rest[var];
      rest[var] = 0;
      out.try_emplace(k, ring_).first->second.add_term(std::move(rest), c);
    }
    return out;
  }

  // Ring homomorphism into `target`, sending variable i to images[i].
  Poly<K> map_to(const RingPtr& target, const std::vector<Poly<K>>& images) const {
    if (images.size() != ring_->size()) throw std::invalid_argument("map_to: image count mismatch");
    Poly<K> r(target);
    for (const auto& [e, c] : terms_) {
      Poly<K> term(target, c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) term *= images[i].pow(static_cast<unsigned>(e[i]));
      r += term;
    }
    return r;
  }

  // Substitute a polynomial (same ring) for one variable.
  Poly substitute(std::size_t var, const Poly& value) const {
    check_same(value);
    std::vector<Poly> images;
    for (std::size_t i = 0; i < ring_->size(); ++i)
      images.push_back(i == var ? value : variable(ring_, i));
    return map_to(ring_, images);
  }

  // Evaluate all variables; missing variables throw.
  K evaluate(const std::vector<K>& values) const {
    if (values.size() != ring_->size()) throw std::invalid_argument("evaluate: value count mismatch");
    K acc(0);
    for (const auto& [e, c] : terms_) {
      K term = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) term *= values[i];
      acc += term;
    }
    return acc;
  }

  // Re-express in a ring whose variable list starts with this ring's
  // variables (prefix embedding), or drop trailing variables that do not
  // occur (prefix projection).
  Poly embed(const RingPtr& target) const {
    Poly r(target);
    const std::size_t n = target->size();
    for (std::size_t i = 0; i < std::min(n, ring_->size()); ++i)
      if (!(target->variable(i) == ring_->variable(i)))
        throw ContextMismatch("embed: rings do not share a prefix");
    for (const auto& [e, c] : terms_) {
      Exponents f(n, 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i < n) f[i] = e[i];
        else if (e[i] != 0) throw ContextMismatch("embed: variable " + ring_->variable(i).name + " occurs");
      }
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  std::string to_string() const;

 private:
  static bool is_zero_coeff(const K& c) {
    using gmqh::is_zero;
    return is_zero(c);
  }
  void check_same(const Poly& o) const {
    if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw ContextMismatch("polynomial arithmetic");
  }

  RingPtr ring_;
  Terms terms_;
};

using MultiPoly = Poly<Rational>;

template <class K>
inline bool is_zero(const Poly<K>& p) {
  return p.is_zero();
}

// Exact division a / b. Throws std::domain_error if b does not divide a.
// Uses lex order, so it is valid for any grading.
template <class K>
Poly<K> exact_divide(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide by zero");
  Poly<K> quotient(a.ring());
  Poly<K> rem = a;
  const auto& [lb, cb] = b.lex_leading_term();
  while (!rem.is_zero()) {
    const auto& [lr, cr] = rem.lex_leading_term();
    Exponents e = lr;
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] -= lb[i];
      if (e[i] < 0) throw std::domain_error("exact_divide: not divisible");
    }
    K c = cr / cb;
    Poly<K> term = Poly<K>::monomial(a.ring(), e, c);
    quotient += term;
    rem -= term * b;
  }
  return quotient;
}

template <class K>
std::string to_string(const Poly<K>& p) {
  return p.to_string();
}

template <class K>
std::string Poly<K>::to_string() const {
  if (terms_.empty()) return "0";
  // Print in decreasing degrevlex order for readability and determinism.
  std::vector<const std::pair<const Exponents, K>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [&](auto* x, auto* y) { return ring_->degrevlex_less(y->first, x->first); });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    using gmqh::to_string;
    std::string c = to_string(t->second);
    const bool compound = c.find_first_of("+-", 1) != std::string::npos;
    if (compound) c = "(" + c + ")";
    bool negative = !compound && c[0] == '-';
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    if (negative) c.erase(0, 1);
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      if (t->first[i] == 0) continue;
      if (any) mono << "*";
      mono << ring_->variable(i).name;
      if (t->first[i] > 1) mono << "^" << t->first[i];
      any = true;
    }
    if (!any) out << c;
    else if (c == "1") out << mono.str();
    else out << c << "*" << mono.str();
  }
  return out.str();
}

}  // namespace gmqh

namespace gmqh {

// Parses sums of monomials such as "2*c1^2 + 4*c2 - 1/2*h*H" (no
// parentheses). Throws std::invalid_argument on malformed input or unknown
// variables.
MultiPoly parse_poly(const RingPtr& ring, std::string_view text);

}  // namespace gmqh
