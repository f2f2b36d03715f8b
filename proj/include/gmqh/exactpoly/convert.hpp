#pragma once

#include "gmqh/exactpoly/poly.hpp"
#include "gmqh/exactpoly/ratfunc.hpp"
#include "gmqh/exactpoly/upoly.hpp"

namespace gmqh {

// The graded ring Q[q] with deg q = 2, shared by all quantum computations.
const RingPtr& q_ring();
MultiPoly q_poly(const Rational& c, int power);

// Univariate view of p with respect to variable `var`; other variables must
// not occur.
UPoly<Rational> to_upoly(const MultiPoly& p, std::size_t var = 0);
MultiPoly from_upoly(const UPoly<Rational>& u, const RingPtr& ring, std::size_t var = 0);

RatFunc to_ratfunc(const MultiPoly& p);
// Throws std::domain_error if r is not a polynomial.
MultiPoly from_ratfunc(const RatFunc& r, const RingPtr& ring = q_ring());

}  // namespace gmqh
