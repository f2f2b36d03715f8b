#include "doctest.h"
#include "support/generators.hpp"

#include "gmqh/errors.hpp"
#include "gmqh/gmring/gmring.hpp"
#include "gmqh/quantum/quantum.hpp"

using namespace gmqh;
using namespace gmqh::qh;
using gm::S0;
using gm::S1;
using gm::S11;
using gm::S2;
using gm::S3;
using gm::S31;

namespace {

const gw::GWInvariants& invariants() {
  static const gw::GWInvariants g = gw::GWInvariants::computed();
  return g;
}

const QAlgebra& table() {
  static const QAlgebra A = full_table(invariants());
  return A;
}

gw::GWInvariants displayed_inputs() {
  auto g = gw::GWInvariants::two_point(6, 10, 6, 12);
  g.J12 = 12;
  g.J11 = 24;
  g.J2 = 32;
  return g;
}

}  // namespace

TEST_CASE("h-matrix") {
  const QMatrix M = build_h_matrix(invariants());
  CHECK(M == reference_h_matrix());
  CHECK(M.column(S2) == parse_class({"0", "10*q", "0", "0", "3", "0"}).coords());
  CHECK(M.column(S0) == parse_class({"0", "1", "0", "0", "0", "0"}).coords());
  CHECK(M.column(S3) == parse_class({"24*q^2", "0", "4*q", "2*q", "0", "1"}).coords());
  CHECK(M.column(S31) == parse_class({"0", "24*q^2", "0", "0", "6*q", "0"}).coords());
  CHECK(check_matrix_grading(M));
  CHECK(table().multiplication_matrix(table().basis(S1)) == M);
}

TEST_CASE("free three-point invariants") {
  CHECK(free_triples().size() == 13);
  for (const auto& t : free_triples()) CHECK(triple_degree(t) == 4 + 2 * curve_degree(t));
}

TEST_CASE("associativity solve") {
  auto sol = solve_by_associativity(displayed_inputs());
  CHECK(sol.J11 == 24);
  CHECK(sol.J2 == 32);
  CHECK(sol.rank == sol.unknowns);
  CHECK(sol.J11 == gw::derive_J11(displayed_inputs()));
  CHECK(gw::closed_form_J2(displayed_inputs()) == 32);
  // The geometric route gives the same inputs.
  auto geo = solve_by_associativity(invariants());
  CHECK(geo.J11 == invariants().J11);
  CHECK(geo.J2 == invariants().J2);
}

TEST_CASE("associativity solve rejects inconsistent input") {
  auto g = displayed_inputs();
  g.J2 = 33;
  CHECK_THROWS_AS(full_table(g), InconsistentSystem);
  g = displayed_inputs();
  g.J11 = 25;
  CHECK_THROWS_AS(full_table(g), InconsistentSystem);
}

TEST_CASE("derive_J11 and the closed formula agree with associativity, randomized") {
  testing::Gen gen(2024);
  for (int round = 0; round < 8; ++round) {
    auto g = gw::GWInvariants::two_point(gen.integer(0, 20), gen.integer(0, 20), gen.integer(0, 20), gen.integer(0, 20));
    g.J12 = gen.integer(0, 20);
    auto sol = solve_by_associativity(g);
    g.J11 = sol.J11;
    CHECK(sol.J11 == gw::derive_J11(g));
    CHECK(sol.J2 == gw::closed_form_J2(g));
  }
}

TEST_CASE("full table matches the displayed products") {
  const auto& A = table();
  for (const auto& ref : reference_products()) {
    INFO(gm::kSlotName[ref.a] << " * " << gm::kSlotName[ref.b]);
    CHECK(A.product(ref.a, ref.b) == ref.value);
    CHECK(A.product(ref.b, ref.a) == ref.value);
  }
  CHECK(A.product(S1, S1) == parse_class({"6*q", "0", "1", "1", "0", "0"}));
  for (std::size_t a = 0; a < gm::kAmbientDim; ++a) CHECK(A.product(S0, a) == A.basis(a));
  // pt * s2 and pt * s11 in terms of J2.
  const Rational half(1, 2);
  CHECK(half * A.product(S31, S2)[S0] == q_poly(120 - 32, 3));
  CHECK(half * A.product(S31, S11)[S0] == q_poly(24 + 32, 3));
}

TEST_CASE("structure checks") {
  const auto& A = table();
  auto rep = check_associativity(A);
  CHECK(rep.triples_checked == 56);
  CHECK(rep.ok());
  CHECK(check_frobenius(A).empty());
  CHECK(check_commutative(A));
  CHECK(check_grading(A));
  CHECK(A.classical_limit_is_cup());
}

TEST_CASE("classical table is associative") {
  std::map<Triple, Rational> zeros;
  for (const auto& t : free_triples()) zeros[t] = 0;
  auto A = table_from_values(gw::GWInvariants{}, zeros);
  CHECK(check_associativity(A).ok());
  CHECK(A.classical_limit_is_cup());
}

TEST_CASE("perturbed J2 breaks associativity") {
  auto values = table().three_point();
  std::map<Triple, Rational> v;
  for (const auto& [t, p] : values) v[t] = p.constant_term();
  v[kJ2Triple] = 66;
  auto A = table_from_values(invariants(), v);
  auto rep = check_associativity(A);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& f : rep.failures)
    if (f.triple == Triple{S1, S11, S11}) found = true;
  CHECK(found);
}

TEST_CASE("spectral report") {
  auto rep = spectral_report(reference_h_matrix(), Rational(1));
  CHECK(rep.char_poly == reference_char_poly());
  CHECK(rep.even_with_double_zero);
  CHECK(rep.P == parse_poly(qT_ring(), "T^2 - 44*q*T - 16*q^2"));
  CHECK(rep.discriminant == parse_poly(q_ring(), "2000*q^2"));
  CHECK(rep.P_squarefree);
  CHECK(rep.roots_nonzero);
  CHECK(rep.kernel_rank == 2);
  CHECK(rep.rank_specialization_consistent);
  REQUIRE(rep.roots_at_q0.size() == 2);
  CHECK(rep.roots_verified);
  CHECK(rep.roots_at_q0[0].to_string() == "22 + 10*sqrt(5)");
  CHECK(rep.roots_at_q0[1].to_string() == "22 - 10*sqrt(5)");
  auto r3 = spectral_report(reference_h_matrix(), Rational(3, 2));
  CHECK(r3.roots_verified);
  CHECK(r3.roots_at_q0[0].to_string() == "33 + 15*sqrt(5)");
}

TEST_CASE("spectral report on a control matrix") {
  QMatrix I = QMatrix::identity(6, MultiPoly(q_ring()), MultiPoly(q_ring(), Rational(1)));
  auto rep = spectral_report(I);
  CHECK_FALSE(rep.even_with_double_zero);
  CHECK(rep.kernel_rank == 0);
}

TEST_CASE("kernel of h") {
  auto rep = kernel_basis(reference_h_matrix());
  CHECK(rep.same_span);
  CHECK(rep.alpha_in_kernel);
  CHECK(rep.beta_in_kernel);
  QMatrix I = QMatrix::identity(6, MultiPoly(q_ring()), MultiPoly(q_ring(), Rational(1)));
  CHECK_THROWS_AS(kernel_basis(I), Error);
}

TEST_CASE("presentation") {
  auto rep = verify_presentation(table());
  CHECK(rep.relations_vanish);
  CHECK(rep.quotient_rank == 6);
  CHECK(rep.basis_matches);
  CHECK(rep.isomorphism);
  CHECK(rep.cayley_hamilton);
  CHECK(rep.ok());
  // R1 and R2 are needed; R3 already lies in (R1, R2).
  REQUIRE(rep.rank_without.size() == 3);
  CHECK(rep.rank_without[0] == std::optional<std::size_t>(10));
  CHECK_FALSE(rep.rank_without[1].has_value());
  CHECK(rep.rank_without[2] == std::optional<std::size_t>(6));
  CHECK(rep.r3_in_ideal_of_r1_r2);
  CHECK_FALSE(rep.each_relation_needed);
  CHECK(rep.standard_basis == std::vector<std::string>{"1", "h", "h^2", "s11", "h^3", "h^4"});
}

TEST_CASE("presentation fails for a wrong table") {
  auto values = table().three_point();
  std::map<Triple, Rational> v;
  for (const auto& [t, p] : values) v[t] = p.constant_term();
  v[kJ12Triple] += 1;
  auto rep = verify_presentation(table_from_values(invariants(), v));
  CHECK_FALSE(rep.relations_vanish);
}
