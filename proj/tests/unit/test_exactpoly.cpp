#include "doctest.h"
#include "support/generators.hpp"

#include "gmqh/exactpoly/convert.hpp"
#include "gmqh/exactpoly/ideal.hpp"
#include "gmqh/exactpoly/matrix.hpp"
#include "gmqh/exactpoly/ratfunc.hpp"
#include "gmqh/exactpoly/truncated.hpp"

using namespace gmqh;

namespace {

MultiPoly var(const RingPtr& r, const std::string& n) { return MultiPoly::variable(r, n); }
MultiPoly cst(const RingPtr& r, long c) { return MultiPoly(r, Rational(c)); }

}  // namespace

TEST_CASE("rationals parse and canonicalize") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-12") == Rational(-12));
  CHECK(parse_rational("+5/10") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  Rational r = parse_rational("-14/21");
  CHECK(r.get_num() == -2);
  CHECK(r.get_den() == 3);
}

TEST_CASE("poly_arith examples") {
  auto ring = make_ring({{"h", 1}, {"H", 1}});
  MultiPoly h = var(ring, "h"), H = var(ring, "H");
  MultiPoly s = h + H;
  CHECK(s * s == h * h + cst(ring, 2) * h * H + H * H);
  CHECK((s * MultiPoly(ring)).is_zero());

  PolyIdeal<Rational> I(ring, {h * h, H.pow(3)});
  CHECK(I.normal_form(s.pow(3)) == cst(ring, 3) * h * H * H);
}

TEST_CASE("mismatched contexts are rejected") {
  auto r1 = make_ring({{"x", 1}});
  auto r2 = make_ring({{"y", 1}});
  CHECK_THROWS_AS(var(r1, "x") + var(r2, "y"), ContextMismatch);
  CHECK_THROWS_AS(var(r1, "x") * var(r2, "y"), ContextMismatch);
  // Structurally equal contexts combine.
  auto r3 = make_ring({{"x", 1}});
  CHECK_NOTHROW(var(r1, "x") + var(r3, "x"));
}

TEST_CASE("grading of terms") {
  auto ring = make_ring({{"q", 2}, {"t", -1}, {"h", 1}});
  MultiPoly p = var(ring, "q") * var(ring, "t") * var(ring, "h");
  CHECK(p.homogeneous_degree() == 2);
  CHECK((p + var(ring, "q")).is_homogeneous());
  CHECK_FALSE((p + var(ring, "h")).is_homogeneous());
}

TEST_CASE("buchberger examples") {
  auto rx = make_ring({{"x", 1}});
  PolyIdeal<Rational> I1(rx, {var(rx, "x")});
  REQUIRE(I1.groebner_basis().size() == 1);
  CHECK(I1.groebner_basis()[0] == var(rx, "x"));

  auto rxy = make_ring({{"x", 1}, {"y", 1}});
  MultiPoly x = var(rxy, "x"), y = var(rxy, "y");
  PolyIdeal<Rational> I2(rxy, {x - y, y * y});
  CHECK(I2.normal_form(x * x).is_zero());
  CHECK(I2.quotient_rank() == 2u);

  // Zero-dimensionality is detected.
  PolyIdeal<Rational> I3(rxy, {x * y});
  CHECK_FALSE(I3.standard_monomials().has_value());

  PolyIdeal<Rational> unit(rxy, {x, x + cst(rxy, 1)});
  CHECK(unit.is_unit_ideal());
  CHECK(unit.quotient_rank() == 0u);
}

TEST_CASE("buchberger over Q(q)") {
  auto ring = make_ring({{"x", 1}});
  Poly<RatFunc> x = Poly<RatFunc>::variable(ring, 0);
  RatFunc q = RatFunc::q();
  Poly<RatFunc> f = x * x - q * Poly<RatFunc>(ring, RatFunc(1));
  Poly<RatFunc> g = q * x;
  PolyIdeal<RatFunc> I(ring, {f, g});
  CHECK(I.is_unit_ideal());
  PolyIdeal<RatFunc> J(ring, {f});
  CHECK(J.quotient_rank() == 2u);
}

TEST_CASE("reduced groebner properties, randomized") {
  testing::Gen gen(20240611);
  auto ring = make_ring({{"x", 1}, {"y", 1}, {"z", 2}});
  for (int round = 0; round < 15; ++round) {
    std::vector<MultiPoly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(gen.poly(ring, 3, 2));
    PolyIdeal<Rational> I(ring, gens);
    const auto& G = I.groebner_basis();
    for (const auto& g : gens) CHECK(I.normal_form(g).is_zero());
    for (std::size_t i = 0; i < G.size(); ++i) {
      CHECK(G[i].leading_term().second == 1);
      for (std::size_t j = i + 1; j < G.size(); ++j)
        CHECK(PolyIdeal<Rational>::reduce(PolyIdeal<Rational>::s_polynomial(G[i], G[j]), G).is_zero());
    }
    for (int k = 0; k < 3; ++k) {
      MultiPoly p = gen.poly(ring, 4, 3), r = gen.poly(ring, 4, 3);
      MultiPoly np = I.normal_form(p);
      CHECK(I.normal_form(np) == np);
      CHECK(I.normal_form(p + r) == I.normal_form(np + I.normal_form(r)));
    }
  }
}

TEST_CASE("ring axioms, randomized") {
  testing::Gen gen(7);
  auto ring = make_ring({{"a", 1}, {"b", 2}, {"c", 1}});
  for (int k = 0; k < 40; ++k) {
    MultiPoly a = gen.poly(ring), b = gen.poly(ring), c = gen.poly(ring);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == MultiPoly(ring));
    if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
  }
}

TEST_CASE("univariate gcd and squarefree decomposition") {
  using U = UPoly<Rational>;
  U x = U::x();
  U one(Rational(1));
  U f = (x - one) * (x - one) * (x + one);
  auto sf = squarefree_decomposition(f);
  REQUIRE(sf.size() == 2);
  CHECK(sf[0] == x + one);
  CHECK(sf[1] == x - one);
  CHECK_FALSE(is_squarefree(f));
  CHECK(is_squarefree(x * x - U(Rational(2))));
  CHECK(gcd(f, x * x - one) == x * x - one);
}

TEST_CASE("rational functions normalize") {
  RatFunc q = RatFunc::q();
  RatFunc r = (q * q - RatFunc(1)) / (q - RatFunc(1));
  CHECK(r.is_polynomial());
  CHECK(r == q + RatFunc(1));
  RatFunc s = RatFunc(1) / (RatFunc(2) * q);
  CHECK(s.denominator() == UPoly<Rational>::x());
  CHECK(s.evaluate(Rational(1, 3)) == Rational(3, 2));
  CHECK_THROWS_AS(s.evaluate(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), std::domain_error);
}

TEST_CASE("char_poly examples") {
  auto& R = q_ring();
  MultiPoly q = var(R, "q");
  Matrix<MultiPoly> z(6, 6, MultiPoly(R));
  MultiPoly cz = char_poly(z);
  auto RX = cz.ring();
  MultiPoly X = var(RX, "X");
  CHECK(cz == X.pow(6));

  Matrix<MultiPoly> m2(2, 2, MultiPoly(R));
  m2(0, 1) = cst(R, 6) * q;
  m2(1, 0) = cst(R, 1);
  CHECK(char_poly(m2) == X * X - cst(RX, 6) * var(RX, "q"));
  CHECK_THROWS_AS(char_poly(Matrix<MultiPoly>(2, 3, MultiPoly(R))), std::invalid_argument);
}

TEST_CASE("char_poly at zero is (-1)^n det, randomized") {
  testing::Gen gen(99);
  auto ring = make_ring({{"q", 2}});
  for (int round = 0; round < 10; ++round) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    Matrix<MultiPoly> m(n, n, MultiPoly(ring));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = gen.poly(ring, 2, 2);
    MultiPoly cp = char_poly(m);
    MultiPoly at0 = cp.substitute(1, MultiPoly(cp.ring())).embed(ring);
    MultiPoly det = determinant(m);
    CHECK(at0 == (n % 2 == 0 ? det : -det));
    // Cross-check Bareiss against the field determinant at a random point.
    Rational q0 = gen.rational();
    Matrix<Rational> mv = m.map([&](const MultiPoly& p) { return p.evaluate({q0}); });
    auto inv = inverse(mv);
    CHECK(inv.has_value() == !is_zero(det.evaluate({q0})));
  }
}

TEST_CASE("rank over function field") {
  auto& R = q_ring();
  auto id = Matrix<MultiPoly>::identity(6, MultiPoly(R), cst(R, 1));
  CHECK(rank_over_function_field(id).symbolic_rank == 6);
  CHECK(rank_over_function_field(Matrix<MultiPoly>(6, 6, MultiPoly(R))).symbolic_rank == 0);
  Matrix<MultiPoly> m(2, 2, MultiPoly(R));
  MultiPoly q = var(R, "q");
  m(0, 0) = q;
  m(0, 1) = q * q;
  m(1, 0) = cst(R, 1);
  m(1, 1) = q;
  auto rep = rank_over_function_field(m, 3);
  CHECK(rep.symbolic_rank == 1);
  CHECK(rep.consistent);
}

TEST_CASE("field linear algebra, randomized") {
  testing::Gen gen(5);
  for (int round = 0; round < 20; ++round) {
    const std::size_t r = static_cast<std::size_t>(gen.integer(1, 5));
    const std::size_t c = static_cast<std::size_t>(gen.integer(1, 5));
    Matrix<Rational> m = gen.rational_matrix(r, c);
    auto ker = kernel(m);
    CHECK(ker.size() + rank(m) == c);
    for (const auto& v : ker)
      for (const auto& x : m.apply(v)) CHECK(is_zero(x));
    std::vector<Rational> x0(c);
    for (auto& x : x0) x = gen.rational();
    auto b = m.apply(x0);
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == b);
  }
  Matrix<Rational> sing(2, 2, Rational(0));
  sing(0, 0) = 1;
  sing(0, 1) = 2;
  sing(1, 0) = 2;
  sing(1, 1) = 4;
  CHECK_FALSE(inverse(sing).has_value());
  CHECK_FALSE(solve(sing, {Rational(1), Rational(0)}).has_value());
}

TEST_CASE("truncated ring arithmetic") {
  Trunc t = Trunc::t();
  Trunc q(q_poly(1, 1));
  CHECK((t * t).is_zero());
  Trunc a = q + Trunc(3) * t;
  Trunc b = Trunc(2) - q * t;
  Trunc ab = a * b;
  CHECK(ab.c0() == q_poly(2, 1));
  CHECK(ab.c1() == q_poly(6, 0) - q_poly(1, 2));
  CHECK((q * t).homogeneous_degree() == 1);
  CHECK_FALSE((q + t).homogeneous_degree().has_value());
  auto lifted = ab.lift(make_ring({{"q", 2}, {"t", -1}, {"X", 1}}));
  CHECK(Trunc::from_poly(lifted) == ab);
  CHECK(ab.evaluate(Rational(1), Rational(1, 2)) == Rational(2) + Rational(5, 2));
}
