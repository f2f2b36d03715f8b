#pragma once

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmqh/exactpoly/rational.hpp"

namespace gmqh::gm {

// Ordered ambient basis of H*(X): s0 = 1, s1 = h, s2, s11, s3, s31.
enum Slot : std::size_t { S0 = 0, S1, S2, S11, S3, S31 };
inline constexpr std::size_t kAmbientDim = 6;
inline constexpr std::array<int, kAmbientDim> kSlotDegree = {0, 1, 2, 2, 3, 4};
inline constexpr std::array<const char*, kAmbientDim> kSlotName = {"s0", "s1", "s2", "s11", "s3", "s31"};

// Coordinates in the ambient basis over a coefficient ring C (Rational,
// MultiPoly in q, or Trunc).
template <class C>
class AmbientClass {
 public:
  explicit AmbientClass(const C& zero) : coords_(kAmbientDim, zero) {}
  explicit AmbientClass(std::vector<C> coords) : coords_(std::move(coords)) {
    if (coords_.size() != kAmbientDim) throw std::invalid_argument("ambient class needs 6 coordinates");
  }
  static AmbientClass basis(std::size_t slot, const C& zero, const C& one) {
    AmbientClass a(zero);
    a.coords_.at(slot) = one;
    return a;
  }

  const std::vector<C>& coords() const { return coords_; }
  C& operator[](std::size_t i) { return coords_.at(i); }
  const C& operator[](std::size_t i) const { return coords_.at(i); }

  bool is_zero() const {
    using gmqh::is_zero;
    for (const auto& c : coords_)
      if (!is_zero(c)) return false;
    return true;
  }

  AmbientClass& operator+=(const AmbientClass& o) {
    for (std::size_t i = 0; i < kAmbientDim; ++i) coords_[i] = coords_[i] + o.coords_[i];
    return *this;
  }
  AmbientClass& operator-=(const AmbientClass& o) {
    for (std::size_t i = 0; i < kAmbientDim; ++i) coords_[i] = coords_[i] - o.coords_[i];
    return *this;
  }
  friend AmbientClass operator+(AmbientClass a, const AmbientClass& b) { return a += b; }
  friend AmbientClass operator-(AmbientClass a, const AmbientClass& b) { return a -= b; }
  friend AmbientClass operator*(const C& s, AmbientClass a) {
    for (auto& c : a.coords_) c = s * c;
    return a;
  }
  friend bool operator==(const AmbientClass& a, const AmbientClass& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const AmbientClass& a, const AmbientClass& b) { return !(a == b); }

  std::string to_string() const {
    using gmqh::is_zero;
    using gmqh::to_string;
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = kAmbientDim; i-- > 0;) {
      if (is_zero(coords_[i])) continue;
      std::string c = to_string(coords_[i]);
      const bool compound = c.find_first_of("+-", 1) != std::string::npos;
      if (compound) c = "(" + c + ")";
      const bool negative = !compound && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (!first) out << (negative ? " - " : " + ");
      else if (negative) out << "-";
      first = false;
      if (i == S0) out << c;
      else if (c == "1") out << kSlotName[i];
      else out << c << "*" << kSlotName[i];
    }
    return first ? "0" : out.str();
  }

 private:
  std::vector<C> coords_;
};

using ClassicalClass = AmbientClass<Rational>;

inline ClassicalClass sigma(std::size_t slot) { return ClassicalClass::basis(slot, Rational(0), Rational(1)); }

}  // namespace gmqh::gm
