#include "gmqh/exactpoly/ratfunc.hpp"

#include <stdexcept>

namespace gmqh {

RatFunc::RatFunc(UPoly<Rational> num, UPoly<Rational> den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = UPoly<Rational>();
    den_ = UPoly<Rational>(Rational(1));
    return;
  }
  UPoly<Rational> g = gcd(num, den);
  num = num.divmod(g).first;
  den = den.divmod(g).first;
  const Rational lead_inv = Rational(1) / den.leading();
  num_ = lead_inv * std::move(num);
  den_ = lead_inv * std::move(den);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero in Q(q)");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RatFunc::evaluate(const Rational& q0) const {
  const Rational d = den_.evaluate(q0);
  if (gmqh::is_zero(d)) throw std::domain_error("evaluation at a pole of a rational function");
  return num_.evaluate(q0) / d;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string("q");
  return "(" + num_.to_string("q") + ")/(" + den_.to_string("q") + ")";
}

}  // namespace gmqh
