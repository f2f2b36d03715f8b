#include "doctest.h"

#include "gmqh/gwgeom/gwgeom.hpp"

using namespace gmqh;
using namespace gmqh::gw;

namespace {

Rational check_value(const TowerComputation& c, const std::string& key) {
  for (const auto& [k, v] : c.checks)
    if (k == key) return v;
  FAIL("missing check " << key);
  return Rational(0);
}

std::string class_value(const TowerComputation& c, const std::string& key) {
  for (const auto& [k, v] : c.classes)
    if (k == key) return v;
  FAIL("missing class " << key);
  return "";
}

void sanity(const TowerComputation& c) {
  CHECK(c.routes_agree());
  CHECK(c.degree_matches());
  CHECK(c.value == c.factor * c.integral);
  CHECK(is_integer(c.value));
  CHECK(c.value >= 0);
  CHECK_FALSE(c.trace.empty());
  CHECK_FALSE(c.script.empty());
}

}  // namespace

TEST_CASE("I11") {
  auto c = compute_I11();
  CHECK(c.value == 6);
  CHECK(c.integrand_degree == 3);
  CHECK(c.space_dim == 3);
  // Without the factor 2 from the quadric the count would be 3.
  CHECK(c.integrand == "2*H^3 + 6*h*H^2 + 6*h^2*H + 2*h^3");
  CHECK(c.value / 2 == 3);
  sanity(c);
}

TEST_CASE("I12") {
  auto c = compute_I12();
  CHECK(c.value == 10);
  CHECK(check_value(c, "int h*H^3") == 1);
  CHECK(check_value(c, "int H^4") == -1);
  CHECK(class_value(c, "c1(U2)") == "-H - h");
  CHECK(class_value(c, "c1(wedge^2 U2)") == "-H - h");
  CHECK(c.factor * (2 * check_value(c, "int H^4") + 7 * check_value(c, "int h*H^3")) == 10);
  sanity(c);
}

TEST_CASE("I13") {
  auto c = compute_I13();
  CHECK(c.value == 6);
  CHECK(check_value(c, "deg Sigma = 2 int H^4") == 4);
  sanity(c);
}

TEST_CASE("I2") {
  auto c = compute_I2();
  CHECK(c.value == 12);
  CHECK(check_value(c, "half I2") == 6);
  CHECK(check_value(c, "int l^3") == 2);
  CHECK(check_value(c, "int h*l^2") == 1);
  CHECK(class_value(c, "c1(L2^*)") == "h");
  CHECK(class_value(c, "c1(S^2 L2^*)") == "3*h");
  CHECK(c.value == 2 * (2 * check_value(c, "int l^3") + 2 * check_value(c, "int h*l^2")));
  sanity(c);
}

TEST_CASE("J12") {
  auto c = compute_J12();
  CHECK(c.value == 12);
  CHECK(check_value(c, "int a^2*H") == -1);
  CHECK(check_value(c, "int a^2*h") == 1);
  CHECK(class_value(c, "c2((L1 wedge L3)^*)") == "a + h*H");
  REQUIRE(c.notes.size() == 2);
  CHECK(c.notes[0].find(": yes") != std::string::npos);
  CHECK(c.notes[1].find(": no") != std::string::npos);
  CHECK(c.integrand_degree == 5);
  sanity(c);
}

TEST_CASE("derived invariants") {
  GWInvariants g = GWInvariants::computed();
  CHECK(g.J11 == 24);
  CHECK(g.J11 + g.J12 == 36);
  CHECK(Rational(8) * g.I13 - Rational(2) * g.I11 == 36);
  CHECK(g.J2 == 32);
  CHECK(printed_closed_form_J2(g) == Rational(124, 5));
  GWInvariants zero;
  CHECK(derive_J11(zero) == 0);
}
