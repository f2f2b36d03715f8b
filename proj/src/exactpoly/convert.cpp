#include "gmqh/exactpoly/convert.hpp"

#include <stdexcept>

namespace gmqh {

const RingPtr& q_ring() {
  static const RingPtr ring = make_ring({Variable{"q", 2}});
  return ring;
}

MultiPoly q_poly(const Rational& c, int power) {
  return MultiPoly::monomial(q_ring(), Exponents{power}, c);
}

UPoly<Rational> to_upoly(const MultiPoly& p, std::size_t var) {
  std::vector<Rational> c;
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0)
        throw ContextMismatch("univariate view: variable " + p.ring()->variable(i).name + " occurs");
    const auto k = static_cast<std::size_t>(e[var]);
    if (c.size() <= k) c.resize(k + 1, Rational(0));
    c[k] = v;
  }
  return UPoly<Rational>(std::move(c));
}

MultiPoly from_upoly(const UPoly<Rational>& u, const RingPtr& ring, std::size_t var) {
  MultiPoly p(ring);
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    Exponents e(ring->size(), 0);
    e.at(var) = static_cast<int>(k);
    p.add_term(std::move(e), u.coeffs()[k]);
  }
  return p;
}

RatFunc to_ratfunc(const MultiPoly& p) {
  if (p.ring()->size() == 0) return RatFunc(p.constant_term());
  return RatFunc(to_upoly(p, 0));
}

MultiPoly from_ratfunc(const RatFunc& r, const RingPtr& ring) {
  if (!r.is_polynomial()) throw std::domain_error("not a polynomial in q: " + r.to_string());
  return from_upoly(r.numerator(), ring, 0);
}

}  // namespace gmqh
