#include "doctest.h"

#include "gmqh/schubert/schubert.hpp"

using namespace gmqh;
using namespace gmqh::schubert;

namespace {

SchubertClass s(int n, int a, int b = 0) { return SchubertClass::sigma(n, a, b); }

}  // namespace

TEST_CASE("pieri examples") {
  CHECK(pieri(1, s(5, 1)) == s(5, 2) + s(5, 1, 1));
  CHECK(pieri(1, s(5, 2)) == s(5, 3) + s(5, 2, 1));
  CHECK(pieri(2, s(5, 2, 2)) == s(5, 3, 3));
  CHECK(pieri(0, s(4, 1, 1)) == s(4, 1, 1));
  CHECK(pieri(1, s(5, 3, 3)).is_zero());
}

TEST_CASE("schubert_product examples") {
  CHECK(product(s(5, 2), s(5, 2)) == s(5, 2, 2) + s(5, 3, 1));
  for (const auto& p : basis(5)) {
    auto a = s(5, p.l1, p.l2);
    CHECK(product(s(5, 0), a) == a);
  }
  CHECK(product(s(4, 1, 1), s(4, 1, 1)) == s(4, 2, 2));
  CHECK(product(s(4, 2), s(4, 1, 1)).is_zero());
  CHECK_THROWS_AS(product(s(4, 1), s(5, 1)), std::invalid_argument);
}

TEST_CASE("integration examples") {
  CHECK(integrate_grassmannian(s(5, 3, 3)) == 1);
  CHECK(integrate_grassmannian(pieri(6, s(5, 0))) == 5);
  CHECK(integrate_grassmannian(pieri(4, s(4, 0))) == 2);
  CHECK(integrate_grassmannian(s(5, 1)) == 0);
}

TEST_CASE("partitions outside the box are rejected") {
  CHECK_THROWS_AS(s(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(s(5, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(SchubertClass(6), std::invalid_argument);
  CHECK(basis(4).size() == 6);
  CHECK(basis(5).size() == 10);
}

TEST_CASE("duality on G(2,4) and G(2,5)") {
  for (int n : {4, 5}) {
    for (const auto& l : basis(n))
      for (const auto& m : basis(n)) {
        if (l.degree() + m.degree() != 2 * (n - 2)) continue;
        const Rational v = integrate_grassmannian(product(s(n, l.l1, l.l2), s(n, m.l1, m.l2)));
        CHECK(v == (m == l.complement(n) ? 1 : 0));
      }
  }
}

TEST_CASE("product is commutative and associative on G(2,5)") {
  const auto B = basis(5);
  for (const auto& a : B)
    for (const auto& b : B) {
      auto x = s(5, a.l1, a.l2), y = s(5, b.l1, b.l2);
      CHECK(product(x, y) == product(y, x));
      for (const auto& c : B) {
        if (a.degree() + b.degree() + c.degree() > 6) continue;
        auto z = s(5, c.l1, c.l2);
        CHECK(product(product(x, y), z) == product(x, product(y, z)));
      }
    }
}

TEST_CASE("Pieri and Giambelli agree") {
  for (int n : {4, 5})
    for (const auto& p : basis(n)) {
      auto a = s(n, p.l1, p.l2);
      CHECK(product(s(n, 1), a) == pieri(1, a));
    }
}
