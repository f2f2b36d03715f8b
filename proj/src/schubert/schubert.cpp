#include "gmqh/schubert/schubert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gmqh::schubert {

namespace {

void check_n(int n) {
  if (n != 4 && n != 5) throw std::invalid_argument("Grassmannian G(2," + std::to_string(n) + ") not supported");
}

}  // namespace

std::string Partition2::name() const {
  if (l2 == 0) return "s" + std::to_string(l1);
  return "s" + std::to_string(l1) + std::to_string(l2);
}

std::vector<Partition2> basis(int n) {
  check_n(n);
  std::vector<Partition2> out;
  for (int a = 0; a <= n - 2; ++a)
    for (int b = 0; b <= a; ++b) out.push_back({a, b});
  std::sort(out.begin(), out.end(), [](const Partition2& x, const Partition2& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.l1 > y.l1;
  });
  return out;
}

SchubertClass::SchubertClass(int n) : n_(n) { check_n(n); }

SchubertClass SchubertClass::sigma(int n, int l1, int l2) {
  SchubertClass s(n);
  const Partition2 p{l1, l2};
  if (!p.fits(n)) throw std::invalid_argument("partition " + p.name() + " does not fit G(2," + std::to_string(n) + ")");
  s.add(p, Rational(1));
  return s;
}

Rational SchubertClass::coefficient(const Partition2& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SchubertClass::add(const Partition2& p, const Rational& c) {
  if (!p.fits(n_)) return;
  if (sgn(c) == 0) return;
  Rational& slot = coeffs_[p];
  slot += c;
  if (sgn(slot) == 0) coeffs_.erase(p);
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& o) {
  if (o.n_ != n_) throw std::invalid_argument("mismatched Grassmannians");
  for (const auto& [p, c] : o.coeffs_) add(p, c);
  return *this;
}

SchubertClass operator-(SchubertClass a, const SchubertClass& b) { return a += Rational(-1) * b; }

SchubertClass operator*(const Rational& s, const SchubertClass& a) {
  SchubertClass r(a.n_);
  for (const auto& [p, c] : a.coeffs_) r.add(p, s * c);
  return r;
}

std::string SchubertClass::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& p : basis(n_)) {
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) continue;
    Rational c = it->second;
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    c = abs(c);
    if (c != 1) out << c.get_str() << "*";
    out << p.name();
  }
  return out.str();
}

SchubertClass special_pieri(int k, const SchubertClass& s) {
  SchubertClass r(s.n());
  if (k < 0) return r;
  const int top = s.n() - 2;
  for (const auto& [p, c] : s.coeffs()) {
    const int total = p.degree() + k;
    for (int d = p.l2; d <= p.l1; ++d) {
      const int e = total - d;
      if (e < p.l1 || e > top || e < d) continue;
      r.add({e, d}, c);
    }
  }
  return r;
}

SchubertClass pieri(int k, const SchubertClass& s) {
  if (k < 0) throw std::invalid_argument("negative Pieri power");
  SchubertClass r = s;
  for (int i = 0; i < k; ++i) r = special_pieri(1, r);
  return r;
}

SchubertClass product(const SchubertClass& a, const SchubertClass& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mismatched Grassmannians");
  SchubertClass r(a.n());
  for (const auto& [p, c] : b.coeffs()) {
    SchubertClass first = special_pieri(p.l1, special_pieri(p.l2, a));
    SchubertClass second(a.n());
    if (p.l2 > 0 && p.l1 + 1 <= a.n() - 2) second = special_pieri(p.l1 + 1, special_pieri(p.l2 - 1, a));
    r += c * (first - second);
  }
  return r;
}

Rational integrate_grassmannian(const SchubertClass& a) {
  return a.coefficient({a.n() - 2, a.n() - 2});
}

}  // namespace gmqh::schubert
