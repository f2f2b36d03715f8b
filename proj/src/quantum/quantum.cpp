#include "gmqh/quantum/quantum.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gmqh/errors.hpp"
#include "gmqh/exactpoly/ideal.hpp"
#include "gmqh/gmring/gmring.hpp"

namespace gmqh::qh {

using gm::kAmbientDim;
using gm::kSlotDegree;

namespace {

constexpr int kMaxCurveDegree = 4;

MultiPoly q_power(const RingPtr& ring, int d) { return MultiPoly::variable(ring, 0).pow(static_cast<unsigned>(d)); }

Triple sorted(std::size_t a, std::size_t b, std::size_t c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

const std::vector<gm::ClassicalClass>& duals() {
  static const std::vector<gm::ClassicalClass> d = gm::dual_basis();
  return d;
}

// <a, b, s_e>_d as a constant of `ring`.
MultiPoly three_point_value(const RingPtr& ring, const gw::GWInvariants& inv, const std::map<Triple, MultiPoly>& free,
                            std::size_t a, std::size_t b, std::size_t e, int d) {
  if (kSlotDegree[a] + kSlotDegree[b] + kSlotDegree[e] != 4 + 2 * d) return MultiPoly(ring);
  if (d == 0) return MultiPoly(ring, gm::x_integral(gm::sigma(a), gm::sigma(b), gm::sigma(e)));
  if (a == gm::S0 || b == gm::S0 || e == gm::S0) return MultiPoly(ring);
  if (a == gm::S1) return MultiPoly(ring, Rational(d) * two_point(inv, b, e, d));
  if (b == gm::S1) return MultiPoly(ring, Rational(d) * two_point(inv, a, e, d));
  if (e == gm::S1) return MultiPoly(ring, Rational(d) * two_point(inv, a, b, d));
  auto it = free.find(sorted(a, b, e));
  if (it == free.end()) throw Error("missing three-point invariant " + triple_name(sorted(a, b, e)));
  return it->second;
}

MultiPoly pairing_poly(const QClass& x, const QClass& y, const Matrix<Rational>& G, const RingPtr& ring) {
  MultiPoly acc(ring);
  for (std::size_t i = 0; i < kAmbientDim; ++i)
    for (std::size_t j = 0; j < kAmbientDim; ++j)
      if (!is_zero(G(i, j))) acc += G(i, j) * (x[i] * y[j]);
  return acc;
}

std::vector<RatFunc> to_ratfunc_vector(const QClass& x) {
  std::vector<RatFunc> v;
  for (const auto& c : x.coords()) v.push_back(to_ratfunc(c));
  return v;
}

Matrix<RatFunc> to_ratfunc_matrix(const QMatrix& m) {
  return m.map([](const MultiPoly& p) { return to_ratfunc(p); });
}

mpz_class isqrt_floor(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// n = s^2 f with f squarefree.
void square_part(mpz_class n, mpz_class& s, mpz_class& f) {
  s = 1;
  f = 1;
  for (mpz_class p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      s *= p;
    }
    if (n % p == 0) {
      n /= p;
      f *= p;
    }
  }
  f *= n;
}

}  // namespace

QClass zero_class(const RingPtr& ring) { return QClass(MultiPoly(ring)); }

QClass basis_class(std::size_t slot, const RingPtr& ring) {
  return QClass::basis(slot, MultiPoly(ring), MultiPoly(ring, Rational(1)));
}

QClass from_classical(const gm::ClassicalClass& c, const RingPtr& ring) {
  QClass r = zero_class(ring);
  for (std::size_t i = 0; i < kAmbientDim; ++i) r[i] = MultiPoly(ring, c[i]);
  return r;
}

QClass parse_class(const std::vector<std::string>& coords, const RingPtr& ring) {
  if (coords.size() != kAmbientDim) throw std::invalid_argument("parse_class needs 6 coordinates");
  QClass r = zero_class(ring);
  for (std::size_t i = 0; i < kAmbientDim; ++i) r[i] = parse_poly(ring, coords[i]);
  return r;
}

int triple_degree(const Triple& t) { return kSlotDegree[t[0]] + kSlotDegree[t[1]] + kSlotDegree[t[2]]; }
int curve_degree(const Triple& t) { return (triple_degree(t) - 4) / 2; }

std::string triple_name(const Triple& t) {
  return std::string("<") + gm::kSlotName[t[0]] + "," + gm::kSlotName[t[1]] + "," + gm::kSlotName[t[2]] + ">";
}

const Triple kJ11Triple{gm::S2, gm::S11, gm::S11};
const Triple kJ12Triple{gm::S11, gm::S11, gm::S11};
const Triple kJ2Triple{gm::S11, gm::S11, gm::S31};

const std::vector<Triple>& free_triples() {
  static const std::vector<Triple> triples = [] {
    std::vector<Triple> out;
    const std::size_t slots[] = {gm::S2, gm::S11, gm::S3, gm::S31};
    for (int d = 1; d <= kMaxCurveDegree; ++d)
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j)
          for (std::size_t k = j; k < 4; ++k) {
            Triple t{slots[i], slots[j], slots[k]};
            if (triple_degree(t) == 4 + 2 * d) out.push_back(t);
          }
    return out;
  }();
  return triples;
}

Rational two_point(const gw::GWInvariants& inv, std::size_t a, std::size_t b, int d) {
  if (a > b) std::swap(a, b);
  if (d == 1) {
    if (a == gm::S1 && b == gm::S31) return Rational(2) * inv.I11;
    if (a == gm::S2 && b == gm::S3) return Rational(2) * inv.I12;
    if (a == gm::S11 && b == gm::S3) return Rational(2) * inv.I13;
  }
  if (d == 2 && a == gm::S3 && b == gm::S31) return Rational(2) * inv.I2;
  return Rational(0);
}

QAlgebra::QAlgebra(const RingPtr& ring, const gw::GWInvariants& inv, const std::map<Triple, MultiPoly>& three_point)
    : ring_(ring), inv_(inv), three_point_(three_point) {
  const auto& dual = duals();
  for (std::size_t a = 0; a < kAmbientDim; ++a)
    for (std::size_t b = 0; b < kAmbientDim; ++b) {
      QClass p = zero_class(ring_);
      for (int d = 0; d <= kMaxCurveDegree; ++d) {
        const MultiPoly qd = q_power(ring_, d);
        for (std::size_t c = 0; c < kAmbientDim; ++c) {
          MultiPoly coeff(ring_);
          for (std::size_t e = 0; e < kAmbientDim; ++e)
            if (!is_zero(dual[c][e])) coeff += dual[c][e] * three_point_value(ring_, inv_, three_point_, a, b, e, d);
          p[c] += qd * coeff;
        }
      }
      table_.push_back(std::move(p));
    }
}

QClass QAlgebra::multiply(const QClass& x, const QClass& y) const {
  QClass r = zero_class(ring_);
  for (std::size_t a = 0; a < kAmbientDim; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < kAmbientDim; ++b) {
      if (y[b].is_zero()) continue;
      r += (x[a] * y[b]) * product(a, b);
    }
  }
  return r;
}

QClass QAlgebra::power(const QClass& x, unsigned k) const {
  QClass r = basis(gm::S0);
  for (unsigned i = 0; i < k; ++i) r = multiply(x, r);
  return r;
}

QMatrix QAlgebra::multiplication_matrix(const QClass& x) const {
  QMatrix m(kAmbientDim, kAmbientDim, MultiPoly(ring_));
  for (std::size_t j = 0; j < kAmbientDim; ++j) m.set_column(j, multiply(x, basis(j)).coords());
  return m;
}

bool QAlgebra::classical_limit_is_cup() const {
  for (std::size_t a = 0; a < kAmbientDim; ++a)
    for (std::size_t b = 0; b < kAmbientDim; ++b) {
      const auto cup = gm::cup(gm::sigma(a), gm::sigma(b));
      const QClass& p = product(a, b);
      for (std::size_t c = 0; c < kAmbientDim; ++c) {
        const auto parts = p[c].collect(0);
        auto it = parts.find(0);
        const MultiPoly at0 = it == parts.end() ? MultiPoly(ring_) : it->second;
        if (at0 != MultiPoly(ring_, cup[c])) return false;
      }
    }
  return true;
}

QMatrix build_h_matrix(const gw::GWInvariants& inv) {
  const RingPtr& ring = q_ring();
  const auto& dual = duals();
  QMatrix m(kAmbientDim, kAmbientDim, MultiPoly(ring));
  for (std::size_t j = 0; j < kAmbientDim; ++j) {
    const auto cup = gm::cup(gm::sigma(gm::S1), gm::sigma(j));
    for (std::size_t c = 0; c < kAmbientDim; ++c) {
      MultiPoly entry(ring, cup[c]);
      for (int d = 1; d <= 2; ++d) {
        Rational coeff(0);
        for (std::size_t e = 0; e < kAmbientDim; ++e) coeff += dual[c][e] * two_point(inv, j, e, d);
        entry += q_poly(Rational(d) * coeff, d);
      }
      m(c, j) = entry;
    }
  }
  return m;
}

AssociativitySolution solve_three_point(const gw::GWInvariants& inv, const std::map<Triple, Rational>& fixed) {
  std::vector<Triple> unknown;
  for (const auto& t : free_triples())
    if (!fixed.count(t)) unknown.push_back(t);
  std::vector<Variable> vars{{"q", 2}};
  for (std::size_t k = 0; k < unknown.size(); ++k) vars.push_back({"u" + std::to_string(k), 0});
  const RingPtr ring = make_ring(vars);
  std::map<Triple, MultiPoly> values;
  for (const auto& [t, v] : fixed) values.emplace(t, MultiPoly(ring, v));
  for (std::size_t k = 0; k < unknown.size(); ++k) values.emplace(unknown[k], MultiPoly::variable(ring, k + 1));
  const QAlgebra A(ring, inv, values);

  const std::size_t n = unknown.size();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  const QClass h = A.basis(gm::S1);
  for (std::size_t a = 0; a < kAmbientDim; ++a)
    for (std::size_t b = 0; b < kAmbientDim; ++b) {
      const QClass diff = A.multiply(h, A.product(a, b)) - A.multiply(A.product(gm::S1, a), A.basis(b));
      for (std::size_t c = 0; c < kAmbientDim; ++c)
        for (const auto& [qexp, part] : diff[c].collect(0)) {
          (void)qexp;
          std::vector<Rational> row(n, Rational(0));
          Rational constant(0);
          for (const auto& [e, coeff] : part.terms()) {
            int total = 0;
            std::size_t which = 0;
            for (std::size_t k = 1; k < e.size(); ++k)
              if (e[k] > 0) {
                total += e[k];
                which = k;
              }
            if (total == 0) constant += coeff;
            else if (total == 1) row[which - 1] += coeff;
            else throw Error("associativity equations are not linear");
          }
          rows.push_back(std::move(row));
          rhs.push_back(-constant);
        }
    }
  Matrix<Rational> sys(rows.size(), n, Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) sys(i, j) = rows[i][j];
  AssociativitySolution sol;
  sol.equations = rows.size();
  sol.unknowns = n;
  sol.rank = rank(sys);
  auto x = solve(sys, rhs);
  if (!x) throw InconsistentSystem("associativity equations have no solution for the given invariants");
  if (sol.rank < n) throw InconsistentSystem("associativity leaves " + std::to_string(n - sol.rank) + " invariants undetermined");
  sol.values = fixed;
  for (std::size_t k = 0; k < n; ++k) sol.values[unknown[k]] = (*x)[k];
  sol.J11 = sol.values.at(kJ11Triple);
  sol.J2 = sol.values.at(kJ2Triple) / 2;
  return sol;
}

AssociativitySolution solve_by_associativity(const gw::GWInvariants& inv) {
  return solve_three_point(inv, {{kJ12Triple, inv.J12}});
}

QAlgebra table_from_values(const gw::GWInvariants& inv, const std::map<Triple, Rational>& values) {
  std::map<Triple, MultiPoly> polys;
  for (const auto& [t, v] : values) polys.emplace(t, MultiPoly(q_ring(), v));
  return QAlgebra(q_ring(), inv, polys);
}

QAlgebra full_table(const gw::GWInvariants& inv) {
  auto sol = solve_three_point(inv, {{kJ11Triple, inv.J11}, {kJ12Triple, inv.J12}, {kJ2Triple, Rational(2) * inv.J2}});
  return table_from_values(inv, sol.values);
}

AssociativityReport check_associativity(const QAlgebra& A) {
  AssociativityReport rep;
  for (std::size_t a = 0; a < kAmbientDim; ++a)
    for (std::size_t b = a; b < kAmbientDim; ++b)
      for (std::size_t c = b; c < kAmbientDim; ++c) {
        ++rep.triples_checked;
        const QClass x = A.multiply(A.product(a, b), A.basis(c));
        const QClass y = A.multiply(A.basis(a), A.product(b, c));
        const QClass z = A.multiply(A.product(a, c), A.basis(b));
        if (x != y) rep.failures.push_back({{a, b, c}, "(ab)c - a(bc)", x - y});
        if (x != z) rep.failures.push_back({{a, b, c}, "(ab)c - (ac)b", x - z});
      }
  return rep;
}

std::vector<Triple> check_frobenius(const QAlgebra& A) {
  const auto G = gm::pairing_matrix();
  std::vector<Triple> bad;
  for (std::size_t a = 0; a < kAmbientDim; ++a)
    for (std::size_t b = 0; b < kAmbientDim; ++b)
      for (std::size_t c = 0; c < kAmbientDim; ++c)
        if (pairing_poly(A.product(a, b), A.basis(c), G, A.ring()) !=
            pairing_poly(A.basis(a), A.product(b, c), G, A.ring()))
          bad.push_back({a, b, c});
  return bad;
}

bool check_commutative(const QAlgebra& A) {
  for (std::size_t a = 0; a < kAmbientDim; ++a)
    for (std::size_t b = a + 1; b < kAmbientDim; ++b)
      if (A.product(a, b) != A.product(b, a)) return false;
  return true;
}

bool check_grading(const QAlgebra& A) {
  for (std::size_t a = 0; a < kAmbientDim; ++a)
    for (std::size_t b = 0; b < kAmbientDim; ++b)
      for (std::size_t c = 0; c < kAmbientDim; ++c) {
        const MultiPoly& x = A.product(a, b)[c];
        if (x.is_zero()) continue;
        auto d = x.homogeneous_degree();
        if (!d || *d != kSlotDegree[a] + kSlotDegree[b] - kSlotDegree[c]) return false;
      }
  return true;
}

bool check_matrix_grading(const QMatrix& m, int shift) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      auto d = m(i, j).homogeneous_degree();
      if (!d || *d != kSlotDegree[j] - kSlotDegree[i] + shift) return false;
    }
  return true;
}

std::string QuadraticSurd::to_string() const {
  if (is_zero(b) || d == 1) return gmqh::to_string(a + (d == 1 ? b : Rational(0)));
  std::ostringstream out;
  out << gmqh::to_string(a) << (sgn(b) < 0 ? " - " : " + ");
  const Rational ab = abs(b);
  if (ab != 1) out << gmqh::to_string(ab) << "*";
  out << "sqrt(" << d << ")";
  return out.str();
}

const RingPtr& qx_ring() {
  static const RingPtr r = make_ring({{"q", 2}, {"X", 1}});
  return r;
}

const RingPtr& qT_ring() {
  static const RingPtr r = make_ring({{"q", 2}, {"T", 2}});
  return r;
}

SpectralReport spectral_report(const QMatrix& M, std::optional<Rational> q0) {
  SpectralReport rep;
  rep.char_poly = char_poly(M, "X").embed(qx_ring());
  rep.P = MultiPoly(qT_ring());
  rep.even_with_double_zero = !rep.char_poly.is_zero();
  for (const auto& [e, c] : rep.char_poly.terms()) {
    if (e[1] % 2 != 0 || e[1] < 2) {
      rep.even_with_double_zero = false;
      continue;
    }
    rep.P.add_term({e[0], e[1] / 2 - 1}, c);
  }
  const auto coeffs = rep.P.collect(1);
  auto get = [&](int k) {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? MultiPoly(q_ring()) : it->second.embed(q_ring());
  };
  const int degP = rep.P.is_zero() ? -1 : rep.P.max_exponent(1);
  rep.P_at_zero = get(0);
  if (degP == 2) rep.discriminant = get(1) * get(1) - Rational(4) * get(2) * get(0);
  else rep.discriminant = MultiPoly(q_ring());
  std::vector<RatFunc> pc;
  for (int k = 0; k <= degP; ++k) pc.push_back(to_ratfunc(get(k)));
  const UPoly<RatFunc> Pu(pc);
  rep.P_squarefree = degP >= 1 && is_squarefree(Pu);
  rep.roots_nonzero = !rep.P_at_zero.is_zero();
  const auto rr = rank_over_function_field(M, 7);
  rep.symbolic_rank = rr.symbolic_rank;
  rep.rank_specialization_consistent = rr.consistent;
  rep.kernel_rank = M.cols() - fraction_free_rank(M);
  if (q0 && degP == 2) {
    rep.q0 = q0;
    const std::vector<Rational> at{*q0};
    const Rational a2 = get(2).evaluate(at), a1 = get(1).evaluate(at), a0 = get(0).evaluate(at);
    if (!is_zero(a2)) {
      const Rational B = a1 / a2, C = a0 / a2;
      const Rational D = B * B - Rational(4) * C;
      mpz_class num = D.get_num(), den = D.get_den();
      const int sign = sgn(num);
      mpz_class N = abs(num) * den, s, f;
      square_part(N, s, f);
      const long d = sign * f.get_si();
      rep.roots_verified = true;
      for (int pm : {1, -1}) {
        QuadraticSurd r;
        r.a = -B / 2;
        r.b = Rational(pm) * Rational(s) / (Rational(2) * Rational(den));
        r.d = d;
        if (d == 1) {
          r.a += r.b;
          r.b = 0;
        }
        if (sign == 0) r.b = 0;
        const Rational rational_part = r.a * r.a + r.b * r.b * Rational(r.d) + B * r.a + C;
        const Rational surd_part = Rational(2) * r.a * r.b + B * r.b;
        if (!is_zero(rational_part) || !is_zero(surd_part)) rep.roots_verified = false;
        rep.roots_at_q0.push_back(r);
      }
      (void)isqrt_floor;
    }
  }
  return rep;
}

KernelReport kernel_basis(const QMatrix& M) {
  const RingPtr& ring = q_ring();
  const auto Mr = to_ratfunc_matrix(M);
  const auto ker = kernel(Mr);
  if (ker.size() != 2) throw Error("kernel over Q(q) has rank " + std::to_string(ker.size()) + ", expected 2");
  KernelReport rep;
  for (const auto& v : ker) {
    UPoly<Rational> l(Rational(1));
    for (const auto& c : v) l = l * c.denominator().divmod(gcd(l, c.denominator())).first;
    QClass k = zero_class(ring);
    for (std::size_t i = 0; i < kAmbientDim; ++i) k[i] = from_ratfunc(v[i] * RatFunc(l), ring);
    rep.basis.push_back(k);
  }
  rep.alpha = parse_class({"-2*q", "0", "2", "-3", "0", "0"}, ring);
  rep.beta = parse_class({"-4*q^2", "0", "-2*q", "0", "0", "1"}, ring);
  auto in_kernel = [&](const QClass& x) {
    for (const auto& c : M.apply(x.coords()))
      if (!c.is_zero()) return false;
    return true;
  };
  rep.alpha_in_kernel = in_kernel(rep.alpha);
  rep.beta_in_kernel = in_kernel(rep.beta);
  auto span_rank = [&](const std::vector<QClass>& vs) {
    Matrix<RatFunc> m(kAmbientDim, vs.size(), RatFunc(0));
    for (std::size_t j = 0; j < vs.size(); ++j) m.set_column(j, to_ratfunc_vector(vs[j]));
    return rank(m);
  };
  rep.same_span = span_rank(rep.basis) == 2 && span_rank({rep.alpha, rep.beta}) == 2 &&
                  span_rank({rep.basis[0], rep.basis[1], rep.alpha, rep.beta}) == 2;
  return rep;
}

namespace {

const RingPtr& qhs_ring() {
  static const RingPtr r = make_ring({{"q", 2}, {"h", 1}, {"s11", 2}});
  return r;
}
const RingPtr& hs_ring() {
  static const RingPtr r = make_ring({{"h", 1}, {"s11", 2}});
  return r;
}

Poly<RatFunc> over_function_field(const MultiPoly& p) {
  Poly<RatFunc> r(hs_ring());
  for (const auto& [e, c] : p.terms()) {
    RatFunc coeff = RatFunc(c) * RatFunc(UPoly<Rational>::monomial(static_cast<std::size_t>(e[0]), Rational(1)));
    r.add_term({e[1], e[2]}, coeff);
  }
  return r;
}

}  // namespace

PresentationReport verify_presentation(const QAlgebra& A) {
  PresentationReport rep;
  const RingPtr& R = qhs_ring();
  rep.relations = {parse_poly(R, "5*h*s11 - 2*h^3 + 14*q*h"),
                   parse_poly(R, "5*s11^2 + 20*q*s11 - h^4 + 12*q*h^2 + 20*q^2"),
                   parse_poly(R, "h^5 - 44*q*h^3 - 16*q^2*h")};
  const QClass h = A.basis(gm::S1), s11 = A.basis(gm::S11);
  auto eval = [&](const std::vector<int>& e, const MultiPoly& scalar) {
    return (scalar * q_power(A.ring(), e[0])) * A.multiply(A.power(h, static_cast<unsigned>(e[1])),
                                                          A.power(s11, static_cast<unsigned>(e[2])));
  };
  rep.relations_vanish = true;
  for (const auto& rel : rep.relations) {
    QClass v = zero_class(A.ring());
    for (const auto& [e, c] : rel.terms()) v += eval(e, MultiPoly(A.ring(), c));
    if (!v.is_zero()) rep.relations_vanish = false;
    rep.relation_values.push_back(v);
  }

  std::vector<Poly<RatFunc>> gens;
  for (const auto& rel : rep.relations) gens.push_back(over_function_field(rel));
  const PolyIdeal<RatFunc> I(hs_ring(), gens);
  const auto sm = I.standard_monomials();
  rep.quotient_rank = sm ? sm->size() : 0;
  std::set<std::string> names;
  if (sm)
    for (const auto& m : *sm) {
      rep.standard_basis.push_back(Poly<RatFunc>::monomial(hs_ring(), m, RatFunc(1)).to_string());
      names.insert(rep.standard_basis.back());
    }
  rep.basis_matches = sm && names == std::set<std::string>{"1", "h", "h^2", "h^3", "h^4", "s11"};

  rep.isomorphism = false;
  if (sm && sm->size() == kAmbientDim) {
    std::vector<std::vector<RatFunc>> images;
    Matrix<RatFunc> phi(kAmbientDim, kAmbientDim, RatFunc(0));
    for (std::size_t k = 0; k < sm->size(); ++k) {
      const auto& m = (*sm)[k];
      images.push_back(to_ratfunc_vector(eval({0, m[0], m[1]}, MultiPoly(A.ring(), Rational(1)))));
      phi.set_column(k, images.back());
    }
    bool ok = rank(phi) == kAmbientDim;
    for (std::size_t i = 0; ok && i < sm->size(); ++i)
      for (std::size_t j = i; ok && j < sm->size(); ++j) {
        const auto& mi = (*sm)[i];
        const auto& mj = (*sm)[j];
        const auto nf = I.normal_form(Poly<RatFunc>::monomial(hs_ring(), {mi[0] + mj[0], mi[1] + mj[1]}, RatFunc(1)));
        std::vector<RatFunc> lhs(kAmbientDim, RatFunc(0));
        for (std::size_t k = 0; k < sm->size(); ++k) {
          const RatFunc c = nf.coefficient((*sm)[k]);
          if (c.is_zero()) continue;
          for (std::size_t s = 0; s < kAmbientDim; ++s) lhs[s] += c * images[k][s];
        }
        const QClass prod = eval({0, mi[0] + mj[0], mi[1] + mj[1]}, MultiPoly(A.ring(), Rational(1)));
        if (lhs != to_ratfunc_vector(prod)) ok = false;
      }
    rep.isomorphism = ok;
  }

  const QMatrix M = A.multiplication_matrix(h);
  const MultiPoly q = MultiPoly::variable(A.ring(), 0);
  const QMatrix ch = M.pow(5) - (Rational(44) * q) * M.pow(3) - (Rational(16) * q * q) * M;
  rep.cayley_hamilton = ch.is_zero();

  rep.r3_in_ideal_of_r1_r2 =
      rep.relations[2] == parse_poly(R, "5*s11 + 2*h^2 + 6*q") * rep.relations[0] - parse_poly(R, "5*h") * rep.relations[1];
  rep.each_relation_needed = true;
  for (std::size_t drop = 0; drop < gens.size(); ++drop) {
    std::vector<Poly<RatFunc>> rest;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (i != drop) rest.push_back(gens[i]);
    const auto r = PolyIdeal<RatFunc>(hs_ring(), rest).quotient_rank();
    rep.rank_without.push_back(r);
    if (r && *r <= kAmbientDim) rep.each_relation_needed = false;
  }
  return rep;
}

QMatrix reference_h_matrix() {
  const char* rows[6][6] = {{"0", "6*q", "0", "0", "24*q^2", "0"},   {"1", "0", "10*q", "6*q", "0", "24*q^2"},
                            {"0", "1", "0", "0", "4*q", "0"},        {"0", "1", "0", "0", "2*q", "0"},
                            {"0", "0", "3", "2", "0", "6*q"},        {"0", "0", "0", "0", "1", "0"}};
  QMatrix m(kAmbientDim, kAmbientDim, MultiPoly(q_ring()));
  for (std::size_t i = 0; i < kAmbientDim; ++i)
    for (std::size_t j = 0; j < kAmbientDim; ++j) m(i, j) = parse_poly(q_ring(), rows[i][j]);
  return m;
}

MultiPoly reference_char_poly() { return parse_poly(qx_ring(), "X^6 - 44*q*X^4 - 16*q^2*X^2"); }

std::vector<ReferenceProduct> reference_products() {
  using gm::S11;
  using gm::S2;
  using gm::S3;
  using gm::S31;
  return {
      {S2, S2, parse_class({"80*q^2", "0", "8*q", "12*q", "0", "2"})},
      {S2, S11, parse_class({"52*q^2", "0", "8*q", "4*q", "0", "1"})},
      {S11, S11, parse_class({"32*q^2", "0", "6*q", "0", "0", "1"})},
      {S3, S2, parse_class({"0", "60*q^2", "0", "0", "10*q", "0"})},
      {S3, S11, parse_class({"0", "40*q^2", "0", "0", "6*q", "0"})},
      {S3, S3, parse_class({"120*q^3", "0", "20*q^2", "20*q^2", "0", "0"})},
      {S31, S2, parse_class({"176*q^3", "0", "28*q^2", "24*q^2", "0", "0"})},
      {S31, S11, parse_class({"112*q^3", "0", "20*q^2", "12*q^2", "0", "0"})},
      {S31, S3, parse_class({"0", "120*q^3", "0", "0", "24*q^2", "0"})},
      {S31, S31, parse_class({"368*q^4", "0", "64*q^3", "48*q^3", "0", "0"})},
  };
}

}  // namespace gmqh::qh
