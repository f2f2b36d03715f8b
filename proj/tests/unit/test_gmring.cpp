#include "doctest.h"

#include "gmqh/gmring/gmring.hpp"

using namespace gmqh;
using namespace gmqh::gm;
using schubert::SchubertClass;

namespace {

ClassicalClass v(std::initializer_list<long> c) {
  std::vector<Rational> x;
  for (long a : c) x.emplace_back(a);
  return ClassicalClass(x);
}

ClassicalClass half(const ClassicalClass& a) { return Rational(1, 2) * a; }

}  // namespace

TEST_CASE("x_integral examples") {
  CHECK(x_integral(sigma(S2), sigma(S2)) == 4);
  CHECK(x_integral(sigma(S2), sigma(S11)) == 2);
  CHECK(x_integral(sigma(S11), sigma(S11)) == 2);
  CHECK(x_integral(sigma(S0), sigma(S31)) == 2);
  CHECK(x_integral(sigma(S1), sigma(S2)) == 0);
  // Degree of X.
  CHECK(x_integral(SchubertClass::sigma(5, 1), schubert::pieri(2, SchubertClass::sigma(5, 1))) == 10);
}

TEST_CASE("restriction identities for s22 and s21") {
  // pt = s31/2 = s22/2 and s1 dual = s3/2 = s21/4 as functionals on ambient classes.
  for (std::size_t c = 0; c < kAmbientDim; ++c) {
    const auto sc = to_grassmannian(c);
    CHECK(x_integral(SchubertClass::sigma(5, 2, 2), sc) == x_integral(SchubertClass::sigma(5, 3, 1), sc));
    CHECK(x_integral(SchubertClass::sigma(5, 2, 1), sc) == 2 * x_integral(SchubertClass::sigma(5, 3), sc));
  }
}

TEST_CASE("pairing matrix") {
  auto g = pairing_matrix();
  CHECK(g(S0, S31) == 2);
  CHECK(g(S1, S1) == 0);
  CHECK(g(S1, S3) == 2);
  CHECK(g(S2, S2) == 4);
  CHECK(g(S2, S11) == 2);
  CHECK(g.transpose() == g);
  for (std::size_t i = 0; i < kAmbientDim; ++i)
    for (std::size_t j = 0; j < kAmbientDim; ++j)
      if (kSlotDegree[i] + kSlotDegree[j] != 4) CHECK(g(i, j) == 0);
}

TEST_CASE("dual basis reproduces the closed forms") {
  auto d = dual_basis();
  CHECK(d[S0] == half(sigma(S31)));
  CHECK(d[S1] == half(sigma(S3)));
  CHECK(d[S2] == half(v({0, 0, 1, -1, 0, 0})));
  CHECK(d[S11] == v({0, 0, 0, 1, 0, 0}) - half(sigma(S2)));
  CHECK(d[S3] == half(sigma(S1)));
  CHECK(d[S31] == half(sigma(S0)));
  for (std::size_t a = 0; a < kAmbientDim; ++a)
    for (std::size_t b = 0; b < kAmbientDim; ++b) CHECK(x_integral(sigma(a), d[b]) == (a == b ? 1 : 0));
}

TEST_CASE("dual of the dual basis is the basis") {
  const auto d = dual_basis();
  // Solve x_integral(d_a, e_b) = delta for e_b; it must equal the original basis.
  Matrix<Rational> g(kAmbientDim, kAmbientDim, Rational(0));
  const auto p = pairing_matrix();
  for (std::size_t a = 0; a < kAmbientDim; ++a)
    for (std::size_t c = 0; c < kAmbientDim; ++c) {
      Rational s = 0;
      for (std::size_t k = 0; k < kAmbientDim; ++k) s += d[a][k] * p(k, c);
      g(a, c) = s;
    }
  auto inv = inverse(g);
  REQUIRE(inv.has_value());
  for (std::size_t b = 0; b < kAmbientDim; ++b)
    for (std::size_t c = 0; c < kAmbientDim; ++c) CHECK((*inv)(c, b) == (b == c ? 1 : 0));
}

TEST_CASE("cup examples") {
  CHECK(cup(sigma(S1), sigma(S2)) == Rational(3) * sigma(S3));
  CHECK(cup(sigma(S1), sigma(S31)).is_zero());
  CHECK(cup(sigma(S2), sigma(S2)) == Rational(2) * sigma(S31));
  CHECK(cup(sigma(S1), sigma(S1)) == sigma(S2) + sigma(S11));
  CHECK(cup(sigma(S1), sigma(S11)) == Rational(2) * sigma(S3));
  CHECK(cup(sigma(S1), sigma(S3)) == sigma(S31));
  CHECK(cup(sigma(S11), sigma(S11)) == sigma(S31));
  CHECK(cup(sigma(S2), sigma(S11)) == sigma(S31));
  CHECK(cup(sigma(S3), sigma(S3)).is_zero());
  CHECK(x_integral(point_class(), sigma(S0)) == 1);
}

TEST_CASE("cup is Frobenius, commutative and graded") {
  for (std::size_t a = 0; a < kAmbientDim; ++a)
    for (std::size_t b = 0; b < kAmbientDim; ++b) {
      const auto ab = cup(sigma(a), sigma(b));
      CHECK(ab == cup(sigma(b), sigma(a)));
      for (std::size_t c = 0; c < kAmbientDim; ++c) {
        CHECK(x_integral(ab, sigma(c)) == x_integral(sigma(a), cup(sigma(b), sigma(c))));
        if (!is_zero(ab[c])) CHECK(kSlotDegree[c] == kSlotDegree[a] + kSlotDegree[b]);
      }
    }
}
