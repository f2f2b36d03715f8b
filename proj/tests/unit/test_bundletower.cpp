#include "doctest.h"
#include "support/generators.hpp"

#include "gmqh/bundletower/splitting.hpp"
#include "gmqh/bundletower/tower.hpp"
#include "gmqh/errors.hpp"
#include "gmqh/schubert/schubert.hpp"

using namespace gmqh;
using namespace gmqh::tower;

namespace {

MultiPoly P(const TowerSpace& X, const char* s) { return parse_poly(X.ring(), s); }

// P^3-bundle P(O^5 / O(-h)) over P^1 = P(V2): pairs U1 in U2.
TowerSpace gamma_space() {
  auto base = TowerSpace::projective_space(1, "h");
  return build_projective_bundle(base, difference(trivial(5), line("h", -1)), "H");
}

// P^2-bundle over P^1 with fibre P((wedge^2 V4 cap hyperplane) / L2).
TowerSpace theta_space() {
  auto base = TowerSpace::projective_space(1, "h");
  Sheaf v4 = sum(trivial(3), line("h", -1));
  Sheaf l2 = sum(trivial(1), line("h", -1));
  return build_projective_bundle(base, difference(difference(wedge2(v4), trivial(1)), l2), "l");
}

TowerSpace sigma_space() {
  auto base = TowerSpace::projective_space(1, "h");
  return build_grassmann2_bundle(base, difference(trivial(5), line("h", -1)));
}

}  // namespace

TEST_CASE("segre examples") {
  auto p1 = TowerSpace::projective_space(1, "h");
  CHECK(total(p1.segre(line("h", -1))) == P(p1, "1 + h"));
  auto g = gamma_space();
  Sheaf u2 = sum(line("h", -1), taut_sub(0));
  CHECK(g.segre_class(u2, 2) == g.reduce(P(g, "H^2 + h*H")));
  CHECK(g.chern_class(u2, 1) == P(g, "-h - H"));
  CHECK(g.chern_class(wedge2(u2), 1) == P(g, "-h - H"));
  // s(E) c(E) = 1
  auto c = g.chern(u2), s = g.segre(u2);
  CHECK(g.reduce(total(c) * total(s)) == g.constant(1));
}

TEST_CASE("projective bundle examples") {
  auto g = gamma_space();
  CHECK(g.dim() == 4);
  CHECK(g.integrate(P(g, "h*H^3")) == 1);
  CHECK(g.integrate(P(g, "H^4")) == -1);
  CHECK(g.integrate(P(g, "2*H^4 + 7*H^3*h")) == 5);

  auto t = theta_space();
  CHECK(t.dim() == 3);
  CHECK(total(t.chern(t.stages()[0].bundle)) == P(t, "1 - 2*h"));
  CHECK(t.integrate(P(t, "h*l^2")) == 1);
  CHECK(t.integrate(P(t, "l^3")) == 2);

  auto p1 = build_projective_bundle(TowerSpace::point(), sum(trivial(1), trivial(1)), "z");
  CHECK(p1.integrate(P(p1, "z")) == 1);
  CHECK(p1.integrate(P(p1, "z^2")) == 0);
}

TEST_CASE("grassmann bundle examples") {
  auto g24 = TowerSpace::grassmannian_24();
  CHECK(g24.dim() == 4);
  CHECK(g24.integrate(P(g24, "a^2")) == 1);
  CHECK(g24.integrate(P(g24, "H^2*a")) == 1);
  CHECK(g24.integrate(P(g24, "H^4")) == 2);

  auto s = sigma_space();
  CHECK(s.dim() == 5);
  CHECK(s.integrate(P(s, "a^2*H")) == -1);
  CHECK(s.integrate(P(s, "a^2*h")) == 1);
  CHECK(s.integrate(P(s, "h*H^2*a")) == 1);
  CHECK_THROWS_AS(build_grassmann2_bundle(TowerSpace::point(), trivial(3)), UnsupportedConstruction);
}

TEST_CASE("integrate examples") {
  auto pp = TowerSpace::product_projective(1, 2, "h", "H");
  CHECK(pp.integrate(P(pp, "2*h^3 + 6*h^2*H + 6*h*H^2 + 2*H^3")) == 6);
  CHECK(pp.integrate(P(pp, "h^3 + 3*h^2*H + 3*h*H^2 + H^3")) == 3);
  CHECK(pp.integrate(P(pp, "h*H")) == 0);
  auto g = gamma_space();
  MultiPoly hH = P(g, "h + H");
  CHECK(g.integrate(MultiPoly(g.ring(), Rational(2)) * hH.pow(3) * P(g, "2*H + h")) == 10);
}

TEST_CASE("grassmann bundle integration agrees with Schubert calculus on G(2,4)") {
  auto g24 = TowerSpace::grassmannian_24();
  using schubert::SchubertClass;
  const auto s1 = SchubertClass::sigma(4, 1), s11 = SchubertClass::sigma(4, 1, 1);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; 2 * j + i <= 4; ++j) {
      MultiPoly mono = g24.generator("H").pow(static_cast<unsigned>(i)) * g24.generator("a").pow(static_cast<unsigned>(j));
      SchubertClass sc = SchubertClass::sigma(4, 0);
      for (int k = 0; k < i; ++k) sc = schubert::product(sc, s1);
      for (int k = 0; k < j; ++k) sc = schubert::product(sc, s11);
      const Rational expected = i + 2 * j == 4 ? schubert::integrate_grassmannian(sc) : Rational(0);
      CHECK(g24.integrate(mono) == expected);
      CHECK(g24.integrate_by_normal_form(mono) == expected);
    }
}

TEST_CASE("splitting-principle closed forms") {
  auto c2 = elementary_ring(2), c3 = elementary_ring(3);
  const auto& s2 = splitting_closed_form(Construction::Sym2, 2);
  REQUIRE(s2.size() == 4);
  CHECK(s2[1] == parse_poly(c2, "3*c1"));
  CHECK(s2[2] == parse_poly(c2, "2*c1^2 + 4*c2"));
  CHECK(s2[3] == parse_poly(c2, "4*c1*c2"));
  const auto& w2 = splitting_closed_form(Construction::Wedge2, 2);
  REQUIRE(w2.size() == 2);
  CHECK(w2[1] == parse_poly(c2, "c1"));
  const auto& s3 = splitting_closed_form(Construction::Sym2, 3);
  REQUIRE(s3.size() == 7);
  CHECK(s3[1] == parse_poly(c3, "4*c1"));
  CHECK(s3[2] == parse_poly(c3, "5*c1^2 + 5*c2"));
  CHECK(s3[3] == parse_poly(c3, "2*c1^3 + 11*c1*c2 + 7*c3"));
  CHECK(s3[4] == parse_poly(c3, "6*c1^2*c2 + 14*c1*c3 + 4*c2^2"));
  CHECK(s3[5] == parse_poly(c3, "8*c1^2*c3 + 4*c1*c2^2 + 4*c2*c3"));
  CHECK(s3[6] == parse_poly(c3, "8*c1*c2*c3 - 8*c3^2"));
  const auto& w3 = splitting_closed_form(Construction::Wedge2, 3);
  REQUIRE(w3.size() == 4);
  CHECK(w3[1] == parse_poly(c3, "2*c1"));
  CHECK(w3[2] == parse_poly(c3, "c1^2 + c2"));
  CHECK(w3[3] == parse_poly(c3, "c1*c2 - c3"));
  CHECK_THROWS_AS(splitting_closed_form(Construction::Sym2, 4), UnsupportedConstruction);
}

TEST_CASE("closed forms agree with numeric Chern roots, randomized") {
  testing::Gen gen(31337);
  for (int round = 0; round < 25; ++round) {
    const int r = static_cast<int>(gen.integer(1, 3));
    std::vector<Rational> x(static_cast<std::size_t>(r));
    for (auto& v : x) v = gen.rational();
    std::vector<Rational> e;
    for (int k = 1; k <= r; ++k) e.push_back(elementary(r, k).evaluate(x));
    for (auto kind : {Construction::Sym2, Construction::Wedge2}) {
      // Product of (1 + t(xi + xj)) evaluated degree by degree.
      std::vector<Rational> poly{Rational(1)};
      for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
          if (kind == Construction::Wedge2 && i == j) continue;
          const Rational root = x[static_cast<std::size_t>(i)] + x[static_cast<std::size_t>(j)];
          std::vector<Rational> next(poly.size() + 1, Rational(0));
          for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + 1] += poly[k] * root;
          }
          poly = next;
        }
      const auto& closed = splitting_closed_form(kind, r);
      REQUIRE(closed.size() == poly.size());
      for (std::size_t k = 0; k < poly.size(); ++k) CHECK(closed[k].evaluate(e) == poly[k]);
    }
  }
}

TEST_CASE("symmetric reduction rejects non-symmetric input") {
  auto x = roots_ring(2);
  CHECK_THROWS_AS(symmetric_to_elementary(parse_poly(x, "x1^2")), std::invalid_argument);
  CHECK(symmetric_to_elementary(parse_poly(x, "x1^2 + x2^2")) == parse_poly(elementary_ring(2), "c1^2 - 2*c2"));
}

TEST_CASE("chern examples on the J12 parameter space") {
  auto s = sigma_space();
  Sheaf l1 = line("h", -1);
  Sheaf w = tensor(l1, taut_sub(0));
  CHECK(s.chern_class(dual(w), 2) == s.reduce(P(s, "a + h*H")));
  CHECK(s.chern_class(sym2(dual(w)), 3) == s.reduce(P(s, "4*h*H^2 + 8*a*h + 4*a*H")));
  CHECK(s.chern_class(sym2(dual(w)), 3) != s.reduce(P(s, "8*h*H^2 + 16*a*h + 4*a*H")));
}

TEST_CASE("chern examples on the I2 parameter space") {
  auto t = theta_space();
  Sheaf l2 = sum(trivial(1), line("h", -1));
  CHECK(t.chern_class(dual(l2), 1) == P(t, "h"));
  CHECK(t.chern_class(sym2(dual(l2)), 1) == P(t, "3*h"));
  Sheaf l3 = sum(l2, taut_sub(0));
  CHECK(t.chern_class(dual(taut_sub(0)), 1) == P(t, "l"));
  CHECK(t.rank(sym2(dual(l3))) == 6);
}

TEST_CASE("Whitney formula, randomized") {
  testing::Gen gen(404);
  auto g = gamma_space();
  std::vector<Sheaf> atoms = {trivial(2), line("h", 1), line("H", -2), taut_sub(0), taut_quotient(0),
                              dual(taut_quotient(0)), tensor(line("h", 1), taut_sub(0))};
  for (int round = 0; round < 30; ++round) {
    Sheaf a = atoms[static_cast<std::size_t>(gen.integer(0, 6))];
    Sheaf b = atoms[static_cast<std::size_t>(gen.integer(0, 6))];
    CHECK(total(g.chern(sum(a, b))) == g.reduce(total(g.chern(a)) * total(g.chern(b))));
    CHECK(g.reduce(total(g.chern(a)) * total(g.segre(a))) == g.constant(1));
    CHECK(g.chern_class(dual(dual(a)), 1) == g.chern_class(a, 1));
  }
  // The tautological sequence 0 -> O(-1) -> E -> Q -> 0.
  CHECK(total(g.chern(sum(taut_sub(0), taut_quotient(0)))) == total(g.chern(g.stages()[0].bundle)));
}

TEST_CASE("unsupported constructions") {
  auto g = gamma_space();
  CHECK_THROWS_AS(g.chern(tensor(trivial(4), line("h", 1))), UnsupportedConstruction);
  CHECK_THROWS_AS(g.chern(tensor(taut_quotient(0), taut_quotient(0))), UnsupportedConstruction);
  CHECK_THROWS_AS(g.chern(sym2(trivial(4))), UnsupportedConstruction);
  CHECK_THROWS_AS(g.chern(wedge2(difference(trivial(5), line("h", -1)))), UnsupportedConstruction);
  // Sums distribute, so a tensor of two split bundles is supported.
  CHECK(total(g.chern(tensor(sum(trivial(1), line("h", 1)), sum(trivial(1), line("H", 1))))) ==
        g.reduce(P(g, "1 + h").pow(1) * P(g, "1 + H") * P(g, "1 + h + H")));
  CHECK_THROWS_AS(g.rank(difference(trivial(1), trivial(2))), std::invalid_argument);
  CHECK_THROWS_AS(g.chern(taut_sub(3)), std::invalid_argument);
  CHECK_THROWS_AS(g.chern(line("z", 1)), std::invalid_argument);
}

TEST_CASE("two integration routes agree, randomized") {
  testing::Gen gen(8);
  std::vector<TowerSpace> spaces = {TowerSpace::product_projective(1, 2), gamma_space(), theta_space(), sigma_space(),
                                    TowerSpace::grassmannian_24()};
  for (const auto& X : spaces) {
    CHECK(X.top_degree_rank() == 1);
    CHECK(X.integrate(X.point_class()) == 1);
    for (int round = 0; round < 10; ++round) {
      MultiPoly p = gen.poly(X.ring(), 5, 3).homogeneous_component(X.dim());
      CHECK(X.integrate(p) == X.integrate_by_normal_form(p));
    }
  }
}

TEST_CASE("integration trace records each stage") {
  auto s = sigma_space();
  std::vector<std::string> trace;
  s.integrate(P(s, "a^2*H"), &trace);
  CHECK(trace.size() == 2);
  CHECK(s.description().find("G(2,") != std::string::npos);
}
