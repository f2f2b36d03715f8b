#pragma once

#include <vector>

#include "gmqh/exactpoly/poly.hpp"

namespace gmqh::tower {

enum class Construction { Sym2, Wedge2 };

// Q[x1..xr], deg xi = 1 (formal Chern roots), and Q[c1..cr], deg ci = i.
RingPtr roots_ring(int r);
RingPtr elementary_ring(int r);

// Elementary symmetric polynomial e_k in the roots ring.
MultiPoly elementary(int r, int k);

// Rewrites a symmetric polynomial in the roots as a polynomial in c1..cr by
// repeated lex leading-term subtraction. Throws std::invalid_argument if f is
// not symmetric.
MultiPoly symmetric_to_elementary(const MultiPoly& f);

// Chern classes c_0..c_R of Sym2 or Wedge2 of a rank-r bundle (r in 1..3) as
// polynomials in its Chern classes c1..cr.
const std::vector<MultiPoly>& splitting_closed_form(Construction kind, int r);

}  // namespace gmqh::tower
