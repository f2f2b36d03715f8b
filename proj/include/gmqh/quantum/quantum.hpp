#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmqh/exactpoly/convert.hpp"
#include "gmqh/exactpoly/matrix.hpp"
#include "gmqh/gmring/ambient.hpp"
#include "gmqh/gwgeom/gwgeom.hpp"

namespace gmqh::qh {

using gm::Slot;

// Ambient class with coefficients in a polynomial ring whose first variable
// is q (deg 2). Usually q_ring(); the associativity solve adds unknowns.
using QClass = gm::AmbientClass<MultiPoly>;
using QMatrix = Matrix<MultiPoly>;

// Q[q, X] and Q[q, T].
const RingPtr& qx_ring();
const RingPtr& qT_ring();

QClass zero_class(const RingPtr& ring = q_ring());
QClass basis_class(std::size_t slot, const RingPtr& ring = q_ring());
QClass from_classical(const gm::ClassicalClass& c, const RingPtr& ring = q_ring());
// Coefficient list c0..c5 given as q-polynomial strings, e.g. {"80*q^2", "0", ...}.
QClass parse_class(const std::vector<std::string>& coords, const RingPtr& ring = q_ring());

// Sorted triple of ambient slots.
using Triple = std::array<std::size_t, 3>;
int triple_degree(const Triple& t);
std::string triple_name(const Triple& t);

// The three-point invariants <a,b,c>_d with no entry of degree 0 or 1, in
// fixed order; they are not reducible by the fundamental class and divisor
// axioms. d = (deg a + deg b + deg c - 4) / 2.
const std::vector<Triple>& free_triples();
int curve_degree(const Triple& t);
extern const Triple kJ11Triple;  // <s2, s11, s11>_1
extern const Triple kJ12Triple;  // <s11, s11, s11>_1
extern const Triple kJ2Triple;   // <s11, s11, s31>_2 = 2 <s11, s11, pt>_2

// Two-point invariant <a,b>_d as fixed by I11, I12, I13, I2.
Rational two_point(const gw::GWInvariants& inv, std::size_t a, std::size_t b, int d);

// Small quantum product on the ambient classes, stored as the 36 products of
// basis classes.
class QAlgebra {
 public:
  // Builds the products from the two-point invariants in `inv` and the free
  // three-point invariants `three_point` (constants in `ring`).
  QAlgebra(const RingPtr& ring, const gw::GWInvariants& inv, const std::map<Triple, MultiPoly>& three_point);

  const RingPtr& ring() const { return ring_; }
  const gw::GWInvariants& invariants() const { return inv_; }
  const std::map<Triple, MultiPoly>& three_point() const { return three_point_; }

  const QClass& product(std::size_t a, std::size_t b) const { return table_.at(a * gm::kAmbientDim + b); }
  QClass multiply(const QClass& x, const QClass& y) const;
  QClass basis(std::size_t slot) const { return basis_class(slot, ring_); }
  QClass power(const QClass& x, unsigned k) const;
  QMatrix multiplication_matrix(const QClass& x) const;
  // Coefficient of q^0 in every structure constant.
  bool classical_limit_is_cup() const;

 private:
  RingPtr ring_;
  gw::GWInvariants inv_;
  std::map<Triple, MultiPoly> three_point_;
  std::vector<QClass> table_;
};

// Matrix of h * (.) in the ambient basis, column j = h * s_j, assembled from
// the divisor axiom and the two-point invariants.
QMatrix build_h_matrix(const gw::GWInvariants& inv);

struct AssociativitySolution {
  std::map<Triple, Rational> values;  // all free three-point invariants
  Rational J11, J2;                    // J2 = <s11, s11, pt>_2
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
};

// Solves h * (a * b) = (h * a) * b for all basis pairs, linear in the free
// three-point invariants, with the values in `fixed` imposed. Throws
// InconsistentSystem if there is no solution or it is not unique.
AssociativitySolution solve_three_point(const gw::GWInvariants& inv, const std::map<Triple, Rational>& fixed);
// Fixes only J12; returns (J11, J2) with the full solution.
AssociativitySolution solve_by_associativity(const gw::GWInvariants& inv);

// All products, with every three-point invariant determined by associativity
// from J11, J12, J2 of `inv`. Throws InconsistentSystem if those disagree.
QAlgebra full_table(const gw::GWInvariants& inv);
// The algebra for arbitrary free three-point values (for perturbation tests).
QAlgebra table_from_values(const gw::GWInvariants& inv, const std::map<Triple, Rational>& values);

struct AssociativityFailure {
  Triple triple;
  std::string bracketing;
  QClass difference;
};
struct AssociativityReport {
  std::size_t triples_checked = 0;
  std::vector<AssociativityFailure> failures;
  bool ok() const { return failures.empty(); }
};
// (ab)c = a(bc) = (ac)b for all 56 sorted basis triples.
AssociativityReport check_associativity(const QAlgebra& A);
// <a*b, c> = <a, b*c> for all ordered triples; returns failing triples.
std::vector<Triple> check_frobenius(const QAlgebra& A);
bool check_commutative(const QAlgebra& A);
// Every product homogeneous with deg q = 2.
bool check_grading(const QAlgebra& A);
// Entry (i,j) of M is zero or homogeneous of degree deg s_j - deg s_i + shift.
bool check_matrix_grading(const QMatrix& m, int shift = 1);

// a + b sqrt(d), with d a squarefree integer > 1 (or b = 0).
struct QuadraticSurd {
  Rational a, b;
  long d = 1;
  std::string to_string() const;
};

struct SpectralReport {
  MultiPoly char_poly{qx_ring()};
  bool even_with_double_zero = false;  // char_poly = X^2 P(X^2)
  MultiPoly P{qT_ring()};
  MultiPoly discriminant{q_ring()};  // of P
  MultiPoly P_at_zero{q_ring()};
  bool P_squarefree = false;
  bool roots_nonzero = false;
  std::size_t kernel_rank = 0;
  std::size_t symbolic_rank = 0;
  bool rank_specialization_consistent = false;
  // At a chosen q0: the roots of P, verified exactly as quadratic surds.
  std::optional<Rational> q0;
  std::vector<QuadraticSurd> roots_at_q0;
  bool roots_verified = false;
};

SpectralReport spectral_report(const QMatrix& M, std::optional<Rational> q0 = std::nullopt);

struct KernelReport {
  std::vector<QClass> basis;
  // 2 s2 - 3 s11 - 2q and 2pt - 2q s2 - 4q^2
  QClass alpha{zero_class()}, beta{zero_class()};
  bool same_span = false;
  bool alpha_in_kernel = false;
  bool beta_in_kernel = false;
};
// Throws Error if the kernel over Q(q) is not of rank 2.
KernelReport kernel_basis(const QMatrix& M);

struct PresentationReport {
  std::vector<MultiPoly> relations;          // R1, R2, R3 in Q[q, h, s11]
  std::vector<QClass> relation_values;       // each evaluated in the algebra
  bool relations_vanish = false;
  std::vector<std::string> standard_basis;   // monomials of the quotient over Q(q)
  std::size_t quotient_rank = 0;
  bool basis_matches = false;                // {1, h, h^2, h^3, h^4, s11}
  bool isomorphism = false;                  // structure constants agree
  bool cayley_hamilton = false;              // M^5 - 44q M^3 - 16q^2 M = 0
  std::vector<std::optional<std::size_t>> rank_without;  // rank with R_i dropped; nullopt = infinite
  bool each_relation_needed = false;
  // R3 = (5 s11 + 2h^2 + 6q) R1 - 5h R2 holds identically.
  bool r3_in_ideal_of_r1_r2 = false;
  bool ok() const { return relations_vanish && basis_matches && isomorphism && cayley_hamilton; }
};

PresentationReport verify_presentation(const QAlgebra& A);

// Frozen expected values.
QMatrix reference_h_matrix();
MultiPoly reference_char_poly();  // in q, X
struct ReferenceProduct {
  std::size_t a, b;
  QClass value;
};
// The ten displayed products of classes of degree >= 2. The constant term
// of s3*s3 is 120q^3 (homogeneity forces the q^3).
std::vector<ReferenceProduct> reference_products();

}  // namespace gmqh::qh
