#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gmqh/exactpoly/rational.hpp"

namespace gmqh {

namespace detail {
template <class K>
bool coeff_is_zero(const K& c) {
  using gmqh::is_zero;
  return is_zero(c);
}
}  // namespace detail

// Dense univariate polynomial over a field K. coeffs()[i] is the coefficient
// of x^i; the highest stored coefficient is nonzero (the zero polynomial
// stores nothing).
template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(K constant) {
    if (!detail::coeff_is_zero(constant)) coeffs_.push_back(std::move(constant));
  }
  explicit UPoly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UPoly monomial(std::size_t degree, K coefficient) {
    std::vector<K> c(degree + 1, K(0));
    c[degree] = std::move(coefficient);
    return UPoly(std::move(c));
  }
  static UPoly x() { return monomial(1, K(1)); }

  const std::vector<K>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  K coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(0); }
  const K& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) { return *this += -o; }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<K> c(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const K& s, UPoly a) {
    if (detail::coeff_is_zero(s)) return UPoly();
    for (auto& c : a.coeffs_) c = s * c;
    return a;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Euclidean division: *this = q*d + r with deg r < deg d.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    UPoly quotient;
    UPoly rem = *this;
    const K lead_inv = K(1) / d.leading();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      const std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
      const K factor = rem.leading() * lead_inv;
      UPoly term = monomial(shift, factor);
      quotient += term;
      rem -= term * d;
    }
    return {quotient, rem};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return (K(1) / leading()) * *this;
  }

  UPoly derivative() const {
    if (coeffs_.size() <= 1) return UPoly();
    std::vector<K> c(coeffs_.size() - 1, K(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = K(static_cast<long>(i)) * coeffs_[i];
    return UPoly(std::move(c));
  }

  K evaluate(const K& x) const {
    K acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<K> coeffs_;
};

// Monic gcd (zero iff both inputs are zero).
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Yun's squarefree decomposition: returns a_1, a_2, ... with
// f = lc(f) * prod a_i^i, each a_i squarefree and monic, pairwise coprime.
// Characteristic zero only.
template <class K>
std::vector<UPoly<K>> squarefree_decomposition(const UPoly<K>& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::vector<UPoly<K>> factors;
  if (f.degree() == 0) return factors;
  UPoly<K> fp = f.derivative();
  UPoly<K> a0 = gcd(f, fp);
  UPoly<K> b = f.divmod(a0).first;
  UPoly<K> c = fp.divmod(a0).first;
  UPoly<K> d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly<K> a = gcd(b, d);
    factors.push_back(a.monic());
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

template <class K>
bool is_squarefree(const UPoly<K>& f) {
  return gcd(f, f.derivative()).degree() <= 0;
}

namespace detail {
template <class K>
std::string coeff_string(const K& c) {
  using gmqh::to_string;
  return to_string(c);
}
}  // namespace detail

template <class K>
std::string UPoly<K>::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (detail::coeff_is_zero(coeffs_[i])) continue;
    std::string c = detail::coeff_string(coeffs_[i]);
    const bool compound = c.find_first_of("+-", 1) != std::string::npos;
    if (compound) c = "(" + c + ")";
    if (!first) out << (c[0] == '-' ? " - " : " + ");
    if (!first && c[0] == '-') c.erase(0, 1);
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c == "-1") out << "-";
    else if (c != "1") out << c << "*";
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace gmqh
