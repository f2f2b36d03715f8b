#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gmqh/exactpoly/rational.hpp"

namespace gmqh::gw {

// A tower integral together with everything needed to audit it: the
// construction script, named intermediate classes and numbers, and the
// stage-by-stage pushforward trace.
struct TowerComputation {
  std::string id;
  std::string space;
  std::vector<std::string> script;
  std::string integrand;
  Rational factor{1};  // value = factor * integral
  Rational integral{0};
  Rational normal_form_integral{0};
  Rational value{0};
  int integrand_degree = 0;
  int space_dim = 0;
  std::vector<std::pair<std::string, std::string>> classes;
  std::vector<std::pair<std::string, Rational>> checks;
  std::vector<std::string> trace;
  std::vector<std::string> notes;

  bool routes_agree() const { return integral == normal_form_integral; }
  bool degree_matches() const { return integrand_degree == space_dim; }
};

TowerComputation compute_I11();
TowerComputation compute_I12();
TowerComputation compute_I13();
TowerComputation compute_I2();
TowerComputation compute_J12();

struct GWInvariants {
  Rational I11, I12, I13, I2, J11, J12, J2;

  // The values the geometric scripts produce, with J11 and J2 filled in by
  // derive_J11 and closed_form_J2.
  static GWInvariants computed();
  // The two-point invariants only; J's zero.
  static GWInvariants two_point(const Rational& i11, const Rational& i12, const Rational& i13, const Rational& i2);
};

// J11 = 8 I13 - 2 I11 - J12.
Rational derive_J11(const GWInvariants& inv);

// Closed formula for J2 in terms of the other invariants. The I2 coefficient
// 6/5 is the one consistent with associativity; printed_closed_form_J2 uses
// 3/5 and is kept for comparison.
Rational closed_form_J2(const GWInvariants& inv);
Rational printed_closed_form_J2(const GWInvariants& inv);

}  // namespace gmqh::gw
