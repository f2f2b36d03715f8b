#include <random>
#include <sstream>

#include "gmqh/bundletower/splitting.hpp"
#include "gmqh/bundletower/tower.hpp"
#include "gmqh/cli/certificate.hpp"
#include "gmqh/gwgeom/gwgeom.hpp"
#include "gmqh/quantum/quantum.hpp"
#include "gmqh/schubert/schubert.hpp"

namespace gmqh::cli {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rational rational(long range = 9, long max_den = 4) {
    Rational r(integer(-range, range), integer(1, max_den));
    r.canonicalize();
    return r;
  }
  MultiPoly poly(const RingPtr& ring, int max_terms = 4, int max_exp = 3) {
    MultiPoly p(ring);
    const int terms = static_cast<int>(integer(0, max_terms));
    for (int k = 0; k < terms; ++k) {
      Exponents e(ring->size(), 0);
      for (auto& x : e) x = static_cast<int>(integer(0, max_exp));
      p.add_term(std::move(e), rational());
    }
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

SuiteResult grassmann_bundle_vs_schubert() {
  SuiteResult r{"grassmann bundle over a point vs Schubert calculus on G(2,4)", 0, {}};
  const auto g24 = tower::TowerSpace::grassmannian_24();
  using schubert::SchubertClass;
  const auto s1 = SchubertClass::sigma(4, 1), s11 = SchubertClass::sigma(4, 1, 1);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; 2 * j + i <= 4; ++j) {
      const MultiPoly mono =
          g24.generator("H").pow(static_cast<unsigned>(i)) * g24.generator("a").pow(static_cast<unsigned>(j));
      SchubertClass sc = SchubertClass::sigma(4, 0);
      for (int k = 0; k < i; ++k) sc = schubert::product(sc, s1);
      for (int k = 0; k < j; ++k) sc = schubert::product(sc, s11);
      const Rational expected = i + 2 * j == 4 ? schubert::integrate_grassmannian(sc) : Rational(0);
      ++r.cases;
      const Rational a = g24.integrate(mono), b = g24.integrate_by_normal_form(mono);
      if (a != expected || b != expected)
        r.failures.push_back("int " + mono.to_string() + ": tower " + to_string(a) + ", normal form " + to_string(b) +
                             ", Schubert " + to_string(expected));
    }
  return r;
}

SuiteResult closed_forms_vs_roots(std::uint64_t seed, int rounds) {
  SuiteResult r{"Sym^2 and wedge^2 closed forms vs formal Chern roots", 0, {}};
  Sampler gen(seed);
  using tower::Construction;
  for (int round = 0; round < rounds; ++round) {
    const int rk = static_cast<int>(gen.integer(2, 3));
    std::vector<Rational> x(static_cast<std::size_t>(rk));
    for (auto& v : x) v = gen.rational();
    std::vector<Rational> e;
    for (int k = 1; k <= rk; ++k) e.push_back(tower::elementary(rk, k).evaluate(x));
    for (auto kind : {Construction::Sym2, Construction::Wedge2}) {
      std::vector<Rational> poly{Rational(1)};
      for (int i = 0; i < rk; ++i)
        for (int j = i; j < rk; ++j) {
          if (kind == Construction::Wedge2 && i == j) continue;
          const Rational root = x[static_cast<std::size_t>(i)] + x[static_cast<std::size_t>(j)];
          std::vector<Rational> next(poly.size() + 1, Rational(0));
          for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + 1] += poly[k] * root;
          }
          poly = next;
        }
      const auto& closed = tower::splitting_closed_form(kind, rk);
      ++r.cases;
      bool same = closed.size() == poly.size();
      for (std::size_t k = 0; same && k < poly.size(); ++k) same = closed[k].evaluate(e) == poly[k];
      if (!same) {
        std::ostringstream w;
        w << (kind == Construction::Sym2 ? "Sym^2" : "wedge^2") << " rank " << rk << " at roots";
        for (const auto& v : x) w << " " << v.get_str();
        r.failures.push_back(w.str());
      }
    }
  }
  return r;
}

SuiteResult grassmannian_duality() {
  SuiteResult r{"duality int s_l s_l^c = 1 on G(2,4) and G(2,5)", 0, {}};
  using namespace schubert;
  for (int n : {4, 5})
    for (const auto& l : basis(n))
      for (const auto& m : basis(n)) {
        if (l.degree() + m.degree() != 2 * (n - 2)) continue;
        ++r.cases;
        const Rational v =
            integrate_grassmannian(product(SchubertClass::sigma(n, l.l1, l.l2), SchubertClass::sigma(n, m.l1, m.l2)));
        if (v != (m == l.complement(n) ? 1 : 0))
          r.failures.push_back("G(2," + std::to_string(n) + "): " + l.name() + " " + m.name() + " = " + v.get_str());
      }
  return r;
}

SuiteResult ring_axioms(std::uint64_t seed, int count) {
  SuiteResult r{"ring axioms on random polynomials", 0, {}};
  Sampler gen(seed);
  const auto ring = make_ring({{"a", 1}, {"b", 2}, {"c", 1}});
  const MultiPoly zero(ring), one(ring, Rational(1));
  for (int k = 0; k < count; ++k) {
    const MultiPoly a = gen.poly(ring), b = gen.poly(ring), c = gen.poly(ring);
    ++r.cases;
    bool ok = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a &&
              (a + b) + c == a + (b + c) && a + b == b + a && a - a == zero && a * one == a && a + zero == a;
    if (ok && !b.is_zero()) ok = exact_divide(a * b, b) == a;
    if (!ok) r.failures.push_back("a = " + a.to_string() + ", b = " + b.to_string() + ", c = " + c.to_string());
  }
  return r;
}

SuiteResult closed_form_J2_vs_associativity(std::uint64_t seed, int rounds) {
  SuiteResult r{"derive_J11 and closed-form J2 vs associativity on random invariants", 0, {}};
  Sampler gen(seed);
  for (int round = 0; round < rounds; ++round) {
    auto g = gw::GWInvariants::two_point(gen.integer(0, 20), gen.integer(0, 20), gen.integer(0, 20), gen.integer(0, 20));
    g.J12 = gen.integer(0, 20);
    const auto sol = qh::solve_by_associativity(g);
    g.J11 = sol.J11;
    ++r.cases;
    if (sol.J11 != gw::derive_J11(g) || sol.J2 != gw::closed_form_J2(g))
      r.failures.push_back("I = (" + g.I11.get_str() + ", " + g.I12.get_str() + ", " + g.I13.get_str() + ", " +
                           g.I2.get_str() + "), J12 = " + g.J12.get_str());
  }
  return r;
}

}  // namespace gmqh::cli
