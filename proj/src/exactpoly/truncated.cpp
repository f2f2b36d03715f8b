#include "gmqh/exactpoly/truncated.hpp"

#include <stdexcept>

namespace gmqh {

Trunc::Trunc(MultiPoly c0, MultiPoly c1) : c0_(std::move(c0)), c1_(std::move(c1)) {
  if (!(*c0_.ring() == *q_ring()) || !(*c1_.ring() == *q_ring()))
    throw ContextMismatch("truncated coefficients must live in Q[q]");
}

Trunc Trunc::t() { return Trunc(MultiPoly(q_ring()), MultiPoly(q_ring(), Rational(1))); }

std::optional<int> Trunc::homogeneous_degree() const {
  auto d0 = c0_.homogeneous_degree();
  auto d1 = c1_.homogeneous_degree();
  if (!c0_.is_zero() && !d0) return std::nullopt;
  if (!c1_.is_zero() && !d1) return std::nullopt;
  if (d1) *d1 -= 1;
  if (d0 && d1 && *d0 != *d1) return std::nullopt;
  return d0 ? d0 : d1;
}

const RingPtr& qt_ring() {
  static const RingPtr ring = make_ring({Variable{"q", 2}, Variable{"t", -1}});
  return ring;
}

MultiPoly Trunc::lift(const RingPtr& ring) const {
  if (ring->size() < 2 || ring->variable(0).name != "q" || ring->variable(1).name != "t")
    throw ContextMismatch("lift target must start with q, t");
  MultiPoly out(ring);
  for (int k = 0; k < 2; ++k)
    for (const auto& [e, c] : (k == 0 ? c0_ : c1_).terms()) {
      Exponents f(ring->size(), 0);
      f[0] = e[0];
      f[1] = k;
      out.add_term(std::move(f), c);
    }
  return out;
}

Trunc Trunc::from_poly(const MultiPoly& p) {
  const RingPtr& r = p.ring();
  if (r->size() < 2 || r->variable(0).name != "q" || r->variable(1).name != "t")
    throw ContextMismatch("truncation source must start with q, t");
  MultiPoly c0(q_ring()), c1(q_ring());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 2; i < e.size(); ++i)
      if (e[i] != 0) throw ContextMismatch("truncation: variable " + r->variable(i).name + " occurs");
    if (e[1] == 0) c0.add_term(Exponents{e[0]}, c);
    else if (e[1] == 1) c1.add_term(Exponents{e[0]}, c);
  }
  return Trunc(std::move(c0), std::move(c1));
}

Rational Trunc::evaluate(const Rational& q0, const Rational& t0) const {
  Rational v = c0_.evaluate({q0}) + t0 * c1_.evaluate({q0});
  return v;
}

std::string Trunc::to_string() const {
  if (c1_.is_zero()) return c0_.to_string();
  std::string s1 = c1_.to_string();
  const bool compound = s1.find_first_of("+-", 1) != std::string::npos;
  std::string t_part;
  if (s1 == "1") t_part = "t";
  else if (s1 == "-1") t_part = "-t";
  else if (compound) t_part = "(" + s1 + ")*t";
  else t_part = s1 + "*t";
  if (c0_.is_zero()) return t_part;
  if (t_part[0] == '-') return c0_.to_string() + " - " + t_part.substr(1);
  return c0_.to_string() + " + " + t_part;
}

}  // namespace gmqh
