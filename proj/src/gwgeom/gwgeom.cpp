#include "gmqh/gwgeom/gwgeom.hpp"

#include "gmqh/bundletower/tower.hpp"

namespace gmqh::gw {

using namespace gmqh::tower;

namespace {

// Integrates `integrand` on X by both routes and fills the common fields.
void evaluate(TowerComputation& r, const TowerSpace& X, const MultiPoly& integrand) {
  r.space = X.description();
  r.space_dim = X.dim();
  r.integrand = integrand.to_string();
  r.integrand_degree = integrand.homogeneous_degree().value_or(-1);
  r.integral = X.integrate(integrand, &r.trace);
  r.normal_form_integral = X.integrate_by_normal_form(integrand);
  r.value = r.factor * r.integral;
}

void record(TowerComputation& r, const std::string& name, const MultiPoly& c) { r.classes.emplace_back(name, c.to_string()); }

void check(TowerComputation& r, const TowerSpace& X, const std::string& monomial) {
  r.checks.emplace_back("int " + monomial, X.integrate(parse_poly(X.ring(), monomial)));
}

}  // namespace

TowerComputation compute_I11() {
  TowerComputation r;
  r.id = "I11";
  auto X = TowerSpace::product_projective(1, 2, "h", "H");
  Sheaf L = tensor(line("h", 1), line("H", 1));
  Sheaf N = sum({L, L, tensor(L, L)});
  r.script = {"base P^1[h] x P^2[H]", "L = O(h) (x) O(H)", "N = " + to_string(N),
              "integrand c3(N), the class of three hypersurfaces of classes h+H, h+H, 2(h+H)"};
  const MultiPoly c1 = X.chern_class(L, 1);
  const MultiPoly integrand = c1 * c1 * X.chern_class(tensor(L, L), 1);
  record(r, "c3(N)", X.chern_class(N, 3));
  evaluate(r, X, integrand);
  return r;
}

TowerComputation compute_I12() {
  TowerComputation r;
  r.id = "I12";
  auto base = TowerSpace::projective_space(1, "h");
  Sheaf E = difference(trivial(5), line("h", -1));
  auto X = build_projective_bundle(base, E, "H");
  Sheaf U1 = line("h", -1);
  Sheaf U2 = sum(U1, taut_sub(0));
  r.script = {"base P^1[h] = P(V2), U1 = O(-h)", "stage P(" + to_string(E) + ") with generator H",
              "U2 = U1 + O(-H)", "integrand 2 c1(wedge^2 U2)^2 (s2(U2) + c1(U2)^2)"};
  const MultiPoly c1 = X.chern_class(U2, 1);
  const MultiPoly s2 = X.segre_class(U2, 2);
  const MultiPoly cw = X.chern_class(wedge2(U2), 1);
  record(r, "c1(U2)", c1);
  record(r, "c1(wedge^2 U2)", cw);
  record(r, "s2(U2)", s2);
  check(r, X, "h*H^3");
  check(r, X, "H^4");
  r.factor = 2;
  evaluate(r, X, cw * cw * (s2 + c1 * c1));
  return r;
}

TowerComputation compute_I13() {
  TowerComputation r;
  r.id = "I13";
  auto X = TowerSpace::grassmannian_24();
  Sheaf U = taut_sub(0);
  r.script = {"G(2,4)[H,a] as the Grassmann bundle of O^4 over a point, U' = tautological subbundle",
              "Sigma = G(2,4) cut by a hyperplane and a quadric: int_Sigma x = 2 int_G(2,4) x H^2",
              "integrand (s2(U') + c1(U')^2) H^2, factor 2"};
  const MultiPoly c1 = X.chern_class(U, 1);
  const MultiPoly s2 = X.segre_class(U, 2);
  record(r, "c1(U')", c1);
  record(r, "s2(U')", s2);
  const MultiPoly H = X.generator("H");
  r.checks.emplace_back("deg Sigma = 2 int H^4", Rational(2) * X.integrate(H.pow(4)));
  r.factor = 2;
  evaluate(r, X, (s2 + c1 * c1) * H * H);
  return r;
}

TowerComputation compute_I2() {
  TowerComputation r;
  r.id = "I2";
  auto base = TowerSpace::projective_space(1, "h");
  Sheaf V4 = sum(trivial(3), line("h", -1));
  Sheaf L2 = sum(trivial(1), line("h", -1));
  // (wedge^2 V4 cap hyperplane) / L2
  Sheaf F = difference(difference(wedge2(V4), trivial(1)), L2);
  auto X = build_projective_bundle(base, F, "l");
  Sheaf L3 = sum(L2, taut_sub(0));
  Sheaf Mvirt = difference(difference(sym2(dual(L3)), sum(trivial(1), line("h", 2))), line("h", 1));
  r.script = {"base P^1[h], V4 = O^3 + O(-h), L2 = a + b = O + O(-h)",
              "stage P(" + to_string(F) + ") with generator l",
              "L3 = L2 + O(-l)",
              "M4 = S^2 L3^* - (O + O(2h)) from the exact sequence, never built as a bundle",
              "integrand c3(M4 - O(h)), factor 2"};
  record(r, "c1(L2^*)", X.chern_class(dual(L2), 1));
  record(r, "c1(S^2 L2^*)", X.chern_class(sym2(dual(L2)), 1));
  record(r, "c(F)", total(X.chern(F)));
  check(r, X, "h*l^2");
  check(r, X, "l^3");
  r.factor = 2;
  evaluate(r, X, X.chern_class(Mvirt, 3));
  r.checks.emplace_back("half I2", r.integral);
  return r;
}

TowerComputation compute_J12() {
  TowerComputation r;
  r.id = "J12";
  auto base = TowerSpace::projective_space(1, "h");
  Sheaf E = difference(trivial(5), line("h", -1));
  auto X = build_grassmann2_bundle(base, E, {"H", "a", "Hp", "ap"});
  Sheaf L1 = line("h", -1);
  Sheaf W = tensor(L1, taut_sub(0));
  r.script = {"base P^1[h] = P(W2), L1 = O(-h)",
              "stage G(2, " + to_string(E) + ") with c(S^*) = 1 + H + a, c(Q^*) = 1 + Hp + ap",
              "L1 wedge L3 = L1 (x) (L3/L1) = " + to_string(W),
              "integrand c2((L1 wedge L3)^*) c3(S^2 (L1 wedge L3)^*)"};
  const MultiPoly c2 = X.chern_class(dual(W), 2);
  const MultiPoly c3 = X.chern_class(sym2(dual(W)), 3);
  record(r, "c2((L1 wedge L3)^*)", c2);
  record(r, "c3(S^2 (L1 wedge L3)^*)", c3);
  check(r, X, "a^2*H");
  check(r, X, "a^2*h");
  const auto& ring = X.ring();
  const bool matches_integrand = c3 == X.reduce(parse_poly(ring, "4*h*H^2 + 8*a*h + 4*a*H"));
  const bool matches_display = c3 == X.reduce(parse_poly(ring, "8*h*H^2 + 16*a*h + 4*a*H"));
  r.notes.push_back(std::string("c3 matches the integrand form 4hH^2 + 8ah + 4aH: ") + (matches_integrand ? "yes" : "no"));
  r.notes.push_back(std::string("c3 matches the displayed form 8hH^2 + 16ah + 4aH: ") + (matches_display ? "yes" : "no"));
  evaluate(r, X, c2 * c3);
  return r;
}

GWInvariants GWInvariants::two_point(const Rational& i11, const Rational& i12, const Rational& i13, const Rational& i2) {
  GWInvariants g;
  g.I11 = i11;
  g.I12 = i12;
  g.I13 = i13;
  g.I2 = i2;
  return g;
}

GWInvariants GWInvariants::computed() {
  GWInvariants g = two_point(compute_I11().value, compute_I12().value, compute_I13().value, compute_I2().value);
  g.J12 = compute_J12().value;
  g.J11 = derive_J11(g);
  g.J2 = closed_form_J2(g);
  return g;
}

Rational derive_J11(const GWInvariants& inv) { return Rational(8) * inv.I13 - Rational(2) * inv.I11 - inv.J12; }

namespace {

Rational closed_form(const GWInvariants& g, const Rational& i2_coefficient) {
  return g.I11 * (Rational(2) * g.I13 - g.I12) +
         Rational(1, 5) * (Rational(2) * g.I12 - Rational(3) * g.I13) *
             (Rational(2) * g.I12 + Rational(9) * g.I13 - Rational(5, 2) * g.J11) +
         i2_coefficient * g.I2;
}

}  // namespace

Rational closed_form_J2(const GWInvariants& inv) { return closed_form(inv, Rational(6, 5)); }
Rational printed_closed_form_J2(const GWInvariants& inv) { return closed_form(inv, Rational(3, 5)); }

}  // namespace gmqh::gw
