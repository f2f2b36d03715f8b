#pragma once

#include <string>

#include "gmqh/exactpoly/convert.hpp"
#include "gmqh/exactpoly/poly.hpp"

namespace gmqh {

// Element c0 + c1*t of Q[q,t]/(t^2), deg q = 2 and deg t = -1.
class Trunc {
 public:
  Trunc() : c0_(q_ring()), c1_(q_ring()) {}
  Trunc(long c) : Trunc(MultiPoly(q_ring(), Rational(c))) {}  // NOLINT(google-explicit-constructor)
  explicit Trunc(MultiPoly c0) : c0_(std::move(c0)), c1_(c0_.ring()) {}
  Trunc(MultiPoly c0, MultiPoly c1);

  static Trunc t();

  const MultiPoly& c0() const { return c0_; }
  const MultiPoly& c1() const { return c1_; }
  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }

  Trunc operator-() const { return Trunc(-c0_, -c1_); }
  friend Trunc operator+(const Trunc& a, const Trunc& b) { return Trunc(a.c0_ + b.c0_, a.c1_ + b.c1_); }
  friend Trunc operator-(const Trunc& a, const Trunc& b) { return Trunc(a.c0_ - b.c0_, a.c1_ - b.c1_); }
  friend Trunc operator*(const Trunc& a, const Trunc& b) {
    return Trunc(a.c0_ * b.c0_, a.c0_ * b.c1_ + a.c1_ * b.c0_);
  }
  Trunc& operator+=(const Trunc& o) { return *this = *this + o; }
  Trunc& operator-=(const Trunc& o) { return *this = *this - o; }
  friend bool operator==(const Trunc& a, const Trunc& b) { return a.c0_ == b.c0_ && a.c1_ == b.c1_; }
  friend bool operator!=(const Trunc& a, const Trunc& b) { return !(a == b); }

  // Degree of every term, t counted as -1; nullopt if zero or inhomogeneous.
  std::optional<int> homogeneous_degree() const;

  // Embedding into Q[q,t] (t^2 not yet zero); `ring` must start with q, t.
  MultiPoly lift(const RingPtr& ring) const;
  // Reduction of a polynomial in a ring starting with (q, t) modulo t^2;
  // other variables must not occur.
  static Trunc from_poly(const MultiPoly& p);

  Rational evaluate(const Rational& q0, const Rational& t0) const;
  std::string to_string() const;

 private:
  MultiPoly c0_, c1_;
};

inline bool is_zero(const Trunc& x) { return x.is_zero(); }
inline std::string to_string(const Trunc& x) { return x.to_string(); }

// Q[q,t] with deg q = 2, deg t = -1.
const RingPtr& qt_ring();

}  // namespace gmqh
