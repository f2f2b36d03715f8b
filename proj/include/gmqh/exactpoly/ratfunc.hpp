#pragma once

#include <string>

#include "gmqh/exactpoly/rational.hpp"
#include "gmqh/exactpoly/upoly.hpp"

namespace gmqh {

// Element of Q(q): num/den with gcd(num, den) = 1 and den monic.
// Used wherever a statement holds "for q generic".
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(UPoly<Rational> num) : num_(std::move(num)), den_(Rational(1)) {}
  RatFunc(UPoly<Rational> num, UPoly<Rational> den);

  static RatFunc q() { return RatFunc(UPoly<Rational>::x()); }

  const UPoly<Rational>& numerator() const { return num_; }
  const UPoly<Rational>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // Throws std::domain_error if q0 is a pole.
  Rational evaluate(const Rational& q0) const;

  std::string to_string() const;

 private:
  UPoly<Rational> num_;
  UPoly<Rational> den_{Rational(1)};
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }
inline std::string to_string(const RatFunc& r) { return r.to_string(); }

}  // namespace gmqh
