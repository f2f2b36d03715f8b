#pragma once

#include <vector>

#include "gmqh/exactpoly/matrix.hpp"
#include "gmqh/gmring/ambient.hpp"
#include "gmqh/schubert/schubert.hpp"

namespace gmqh::gm {

// The G(2,5) Schubert class restricting to a basis slot.
schubert::SchubertClass to_grassmannian(std::size_t slot);
schubert::SchubertClass to_grassmannian(const ClassicalClass& a);

// X = G(2,5) cut by a hyperplane and a quadric, so
// int_X ab = 2 int_{G(2,5)} a b s1^2.
Rational x_integral(const schubert::SchubertClass& a);
Rational x_integral(const ClassicalClass& a, const ClassicalClass& b);
Rational x_integral(const ClassicalClass& a, const ClassicalClass& b, const ClassicalClass& c);
Rational x_integral(const schubert::SchubertClass& a, const schubert::SchubertClass& b);

// Gram matrix of x_integral on the ambient basis.
Matrix<Rational> pairing_matrix();

// The classes s_b^dual with x_integral(s_a, s_b^dual) = delta_ab, recomputed
// from the pairing. Throws Error if the pairing is singular.
std::vector<ClassicalClass> dual_basis();

// Classical cup product in the ambient subring; degree overflow gives 0.
ClassicalClass cup(const ClassicalClass& a, const ClassicalClass& b);

// Ambient class of the point: pt = s31 / 2.
ClassicalClass point_class();

}  // namespace gmqh::gm
