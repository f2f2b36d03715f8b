#include "gmqh/gmring/gmring.hpp"

#include "gmqh/errors.hpp"

namespace gmqh::gm {

using schubert::SchubertClass;

SchubertClass to_grassmannian(std::size_t slot) {
  switch (slot) {
    case S0: return SchubertClass::sigma(5, 0);
    case S1: return SchubertClass::sigma(5, 1);
    case S2: return SchubertClass::sigma(5, 2);
    case S11: return SchubertClass::sigma(5, 1, 1);
    case S3: return SchubertClass::sigma(5, 3);
    case S31: return SchubertClass::sigma(5, 3, 1);
    default: throw std::out_of_range("ambient slot");
  }
}

SchubertClass to_grassmannian(const ClassicalClass& a) {
  SchubertClass s(5);
  for (std::size_t i = 0; i < kAmbientDim; ++i) s += a[i] * to_grassmannian(i);
  return s;
}

Rational x_integral(const SchubertClass& a) {
  if (a.n() != 5) throw std::invalid_argument("restriction to X needs a class on G(2,5)");
  return Rational(2) * schubert::integrate_grassmannian(schubert::pieri(2, a));
}

Rational x_integral(const SchubertClass& a, const SchubertClass& b) { return x_integral(schubert::product(a, b)); }

Rational x_integral(const ClassicalClass& a, const ClassicalClass& b) {
  return x_integral(to_grassmannian(a), to_grassmannian(b));
}

Rational x_integral(const ClassicalClass& a, const ClassicalClass& b, const ClassicalClass& c) {
  return x_integral(schubert::product(schubert::product(to_grassmannian(a), to_grassmannian(b)), to_grassmannian(c)));
}

Matrix<Rational> pairing_matrix() {
  Matrix<Rational> g(kAmbientDim, kAmbientDim, Rational(0));
  for (std::size_t i = 0; i < kAmbientDim; ++i)
    for (std::size_t j = 0; j < kAmbientDim; ++j) g(i, j) = x_integral(sigma(i), sigma(j));
  return g;
}

std::vector<ClassicalClass> dual_basis() {
  static const std::vector<ClassicalClass> cached = [] {
    auto inv = inverse(pairing_matrix());
    if (!inv) throw Error("ambient pairing is singular");
    std::vector<ClassicalClass> out;
    for (std::size_t b = 0; b < kAmbientDim; ++b) {
      ClassicalClass d(Rational(0));
      for (std::size_t c = 0; c < kAmbientDim; ++c) d[c] = (*inv)(c, b);
      out.push_back(d);
    }
    return out;
  }();
  return cached;
}

ClassicalClass cup(const ClassicalClass& a, const ClassicalClass& b) {
  const auto duals = dual_basis();
  const SchubertClass ab = schubert::product(to_grassmannian(a), to_grassmannian(b));
  ClassicalClass r(Rational(0));
  for (std::size_t c = 0; c < kAmbientDim; ++c) r[c] = x_integral(ab, to_grassmannian(duals[c]));
  return r;
}

ClassicalClass point_class() { return Rational(1, 2) * sigma(S31); }

}  // namespace gmqh::gm
