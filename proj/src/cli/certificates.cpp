#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>

#include "gmqh/cli/certificate.hpp"
#include "gmqh/deformation/deformation.hpp"
#include "gmqh/errors.hpp"
#include "gmqh/gwgeom/gwgeom.hpp"
#include "gmqh/quantum/quantum.hpp"

namespace gmqh::cli {

using gm::kAmbientDim;
using gm::kSlotName;

namespace {

std::string str(const Rational& r) { return r.get_str(); }

template <class T>
Json matrix_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      using gmqh::to_string;
      row.push_back(to_string(m(i, j)));
    }
    rows.push_back(row);
  }
  return rows;
}

template <class T>
Json vector_json(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    using gmqh::to_string;
    out.push_back(to_string(x));
  }
  return out;
}

Certificate make(std::string id, Provenance p, bool ok, Json computed, Json expected) {
  Certificate c;
  c.id = std::move(id);
  c.provenance = p;
  c.status = ok ? Status::Verified : Status::Failed;
  c.computed = std::move(computed);
  c.expected = std::move(expected);
  return c;
}

void fail_with(Certificate& c, Json witness) {
  if (c.status == Status::Failed && c.witness.is_null()) c.witness = std::move(witness);
}

const gw::GWInvariants& invariants() {
  static const gw::GWInvariants g = gw::GWInvariants::computed();
  return g;
}
const qh::QAlgebra& table() {
  static const qh::QAlgebra A = qh::full_table(invariants());
  return A;
}
const qh::QMatrix& h_matrix() {
  static const qh::QMatrix M = qh::build_h_matrix(invariants());
  return M;
}
const deform::TruncatedOperator& ambient_operator() {
  static const deform::TruncatedOperator K = deform::build_deformed_matrix(invariants(), table());
  return K;
}

Json invariants_json(const gw::GWInvariants& g) {
  return Json{{"I11", str(g.I11)}, {"I12", str(g.I12)}, {"I13", str(g.I13)}, {"I2", str(g.I2)},
              {"J11", str(g.J11)}, {"J12", str(g.J12)}, {"J2", str(g.J2)}};
}

// ---- gw ----

Certificate tower_certificate(const gw::TowerComputation& tc, long expected) {
  const bool ok = tc.value == expected && tc.routes_agree() && tc.degree_matches();
  Certificate c = make("gw." + tc.id, Provenance::Reference, ok, str(tc.value), std::to_string(expected));
  c.inputs["space"] = tc.space;
  c.inputs["integrand"] = tc.integrand;
  c.inputs["factor"] = str(tc.factor);
  c.inputs["integrand_degree"] = tc.integrand_degree;
  c.inputs["space_dim"] = tc.space_dim;
  c.inputs["script"] = tc.script;
  Json classes = Json::object();
  for (const auto& [k, v] : tc.classes) classes[k] = v;
  c.inputs["classes"] = classes;
  Json checks = Json::object();
  for (const auto& [k, v] : tc.checks) checks[k] = str(v);
  c.inputs["checks"] = checks;
  c.trace = tc.trace;
  c.notes = tc.notes;
  c.notes.push_back("tower integral " + str(tc.integral) + ", normal-form integral " + str(tc.normal_form_integral));
  fail_with(c, Json{{"value", str(tc.value)},
                    {"routes_agree", tc.routes_agree()},
                    {"degree_matches", tc.degree_matches()}});
  return c;
}

std::vector<Certificate> gw_certificates() {
  std::vector<Certificate> out;
  out.push_back(tower_certificate(gw::compute_I11(), 6));
  out.push_back(tower_certificate(gw::compute_I12(), 10));
  out.push_back(tower_certificate(gw::compute_I13(), 6));
  out.push_back(tower_certificate(gw::compute_I2(), 12));
  out.push_back(tower_certificate(gw::compute_J12(), 12));

  const auto& g = invariants();
  const Rational j11 = gw::derive_J11(g);
  auto d = make("gw.J11.derived", Provenance::Reference, j11 == 24, str(j11), "24");
  d.inputs = invariants_json(g);
  d.trace.push_back("J11 = 8 I13 - 2 I11 - J12 = 8*" + str(g.I13) + " - 2*" + str(g.I11) + " - " + str(g.J12));
  fail_with(d, str(j11));
  out.push_back(d);

  const auto sol = qh::solve_by_associativity(g);
  auto a = make("gw.associativity-solve", Provenance::Oracle, sol.J11 == 24 && sol.J2 == 32,
                Json{{"J11", str(sol.J11)}, {"J2", str(sol.J2)}}, Json{{"J11", "24"}, {"J2", "32"}});
  a.inputs = invariants_json(gw::GWInvariants::two_point(g.I11, g.I12, g.I13, g.I2));
  a.inputs["J12"] = str(g.J12);
  a.trace.push_back("unknowns: " + std::to_string(sol.unknowns) + " free three-point invariants");
  a.trace.push_back("equations: " + std::to_string(sol.equations) + " from h*(a*b) = (h*a)*b, rank " +
                    std::to_string(sol.rank));
  for (const auto& [t, v] : sol.values) a.trace.push_back(qh::triple_name(t) + " = " + str(v));
  fail_with(a, Json{{"J11", str(sol.J11)}, {"J2", str(sol.J2)}});
  out.push_back(a);

  const Rational cf = gw::closed_form_J2(g), printed = gw::printed_closed_form_J2(g);
  auto f = make("gw.J2.closed-form", Provenance::Reference, cf == 32, str(cf), "32");
  f.inputs = invariants_json(g);
  f.notes.push_back("with I2 coefficient 6/5; the printed coefficient 3/5 gives " + str(printed));
  fail_with(f, str(cf));
  out.push_back(f);

  const bool agree = j11 == sol.J11 && cf == sol.J2 && g.J11 == j11 && g.J2 == cf;
  auto r = make("gw.routes-agree", Provenance::Oracle, agree,
                Json{{"J11", {str(j11), str(sol.J11)}}, {"J2", {str(cf), str(sol.J2)}}},
                "geometric and associativity routes equal");
  fail_with(r, r.computed);
  out.push_back(r);
  return out;
}

// ---- matrix ----

Certificate spectrum_certificate(const Rational& q0) {
  const auto rep = qh::spectral_report(h_matrix(), q0);
  std::vector<std::string> roots;
  for (const auto& s : rep.roots_at_q0) roots.push_back(s.to_string());
  const MultiPoly P = rep.P;
  const auto c = P.collect(1);
  std::vector<Rational> coeffs;
  Json pq = Json::object();
  for (const auto& [k, part] : c) pq["T^" + std::to_string(k)] = str(part.evaluate({q0, Rational(0)}));
  auto cert = make("quantum.spectrum-at-q", Provenance::Reference, rep.roots_verified && roots.size() == 2,
                   Json{{"eigenvalue_squares", roots}, {"P_coefficients", pq}},
                   q0 == 1 ? Json("22 + 10*sqrt(5), 22 - 10*sqrt(5)") : Json("roots of T^2 - 44qT - 16q^2"));
  cert.inputs["q"] = str(q0);
  cert.trace.push_back("P(T) = " + rep.P.to_string());
  cert.notes.push_back("eigenvalues of the h-matrix are 0, 0 and the square roots of these values");
  fail_with(cert, Json{{"roots", roots}, {"verified", rep.roots_verified}});
  return cert;
}

std::vector<Certificate> matrix_certificates(const Options& opt, bool with_spectrum) {
  std::vector<Certificate> out;
  const auto& M = h_matrix();
  const auto ref = qh::reference_h_matrix();
  const bool graded = qh::check_matrix_grading(M, 1);
  auto h = make("quantum.h-matrix", Provenance::Reference, M == ref && graded, matrix_json(M), matrix_json(ref));
  h.inputs = invariants_json(invariants());
  h.notes.push_back("column j is h * s_j in the basis s0, s1, s2, s11, s3, s31");
  h.notes.push_back(std::string("entry (i,j) homogeneous of degree deg s_j - deg s_i + 1: ") + (graded ? "yes" : "no"));
  if (h.status == Status::Failed) {
    Json diff = Json::array();
    for (std::size_t i = 0; i < kAmbientDim; ++i)
      for (std::size_t j = 0; j < kAmbientDim; ++j)
        if (M(i, j) != ref(i, j)) diff.push_back({kSlotName[i], kSlotName[j], M(i, j).to_string(), ref(i, j).to_string()});
    fail_with(h, Json{{"entries", diff}, {"graded", graded}});
  }
  out.push_back(h);

  const auto rep = qh::spectral_report(M);
  auto cp = make("quantum.char-poly", Provenance::Reference,
                 rep.char_poly == qh::reference_char_poly() && rep.even_with_double_zero, rep.char_poly.to_string(),
                 qh::reference_char_poly().to_string());
  cp.trace.push_back("det(X Id - M) by fraction-free elimination over Q[q, X]");
  fail_with(cp, rep.char_poly.to_string());
  out.push_back(cp);

  auto kr = make("quantum.kernel-rank", Provenance::Oracle,
                 rep.kernel_rank == 2 && rep.rank_specialization_consistent, static_cast<int>(rep.kernel_rank), 2);
  kr.inputs["symbolic_rank"] = rep.symbolic_rank;
  kr.notes.push_back("rank over Q(q); a random rational specialization does not exceed it");
  fail_with(kr, Json{{"kernel_rank", rep.kernel_rank}, {"specialization_consistent", rep.rank_specialization_consistent}});
  out.push_back(kr);

  auto p = make("quantum.P-squarefree", Provenance::Reference, rep.P_squarefree && rep.roots_nonzero,
                Json{{"P", rep.P.to_string()}, {"discriminant", rep.discriminant.to_string()},
                     {"P(0)", rep.P_at_zero.to_string()}},
                "T^2 - 44qT - 16q^2 squarefree with P(0) != 0");
  fail_with(p, p.computed);
  out.push_back(p);

  const auto kb = qh::kernel_basis(M);
  Json basis = Json::array();
  for (const auto& v : kb.basis) basis.push_back(v.to_string());
  auto k = make("quantum.h-kernel", Provenance::Reference,
                kb.same_span && kb.alpha_in_kernel && kb.beta_in_kernel, basis,
                Json::array({kb.alpha.to_string(), kb.beta.to_string()}));
  k.notes.push_back("spans compared over Q(q)");
  fail_with(k, Json{{"same_span", kb.same_span}, {"alpha_in_kernel", kb.alpha_in_kernel},
                    {"beta_in_kernel", kb.beta_in_kernel}});
  out.push_back(k);

  if (with_spectrum) out.push_back(spectrum_certificate(opt.q0.value_or(Rational(1))));
  return out;
}

// ---- table ----

std::vector<Certificate> table_certificates() {
  std::vector<Certificate> out;
  const auto& A = table();
  Json computed = Json::object(), expected = Json::object(), diff = Json::array();
  bool match = true;
  for (const auto& r : qh::reference_products()) {
    const std::string key = std::string(kSlotName[r.a]) + "*" + kSlotName[r.b];
    const auto& got = A.product(r.a, r.b);
    computed[key] = got.to_string();
    expected[key] = r.value.to_string();
    if (got != r.value || A.product(r.b, r.a) != r.value) {
      match = false;
      diff.push_back(key);
    }
  }
  auto p = make("quantum.products", Provenance::Reference, match, computed, expected);
  p.inputs = invariants_json(invariants());
  for (const auto& [t, v] : A.three_point()) p.trace.push_back(qh::triple_name(t) + " = " + v.to_string());
  p.notes.push_back("s3*s3 has constant term 120q^3: the product is homogeneous of degree 6");
  fail_with(p, diff);
  out.push_back(p);

  Json full = Json::object();
  for (std::size_t a = 0; a < kAmbientDim; ++a)
    for (std::size_t b = a; b < kAmbientDim; ++b)
      full[std::string(kSlotName[a]) + "*" + kSlotName[b]] = A.product(a, b).to_string();
  auto t = make("quantum.table", Provenance::Identity, qh::check_commutative(A) && qh::check_grading(A), full,
                "commutative, homogeneous with deg q = 2");
  fail_with(t, Json{{"commutative", qh::check_commutative(A)}, {"graded", qh::check_grading(A)}});
  out.push_back(t);

  const auto as = qh::check_associativity(A);
  auto a = make("quantum.associativity", Provenance::Oracle, as.ok() && as.triples_checked == 56,
                static_cast<int>(as.triples_checked - as.failures.size()), 56);
  a.inputs["triples_checked"] = as.triples_checked;
  if (!as.ok()) {
    Json w = Json::array();
    for (const auto& f : as.failures)
      w.push_back({qh::triple_name(f.triple), f.bracketing, f.difference.to_string()});
    fail_with(a, w);
  }
  out.push_back(a);

  const auto fr = qh::check_frobenius(A);
  auto f = make("quantum.frobenius", Provenance::Oracle, fr.empty(), static_cast<int>(216 - fr.size()), 216);
  if (!fr.empty()) {
    Json w = Json::array();
    for (const auto& tr : fr) w.push_back(qh::triple_name(tr));
    fail_with(f, w);
  }
  f.notes.push_back("<a*b, c> = <a, b*c> for all ordered basis triples");
  out.push_back(f);

  auto cl = make("quantum.classical-limit", Provenance::Oracle, A.classical_limit_is_cup(),
                 A.classical_limit_is_cup() ? "q = 0 part equals the cup product" : "differs",
                 "q = 0 part equals the cup product");
  fail_with(cl, "classical limit differs from the cup product");
  out.push_back(cl);
  return out;
}

// ---- presentation ----

std::vector<Certificate> presentation_certificates() {
  std::vector<Certificate> out;
  const auto rep = qh::verify_presentation(table());
  Json rels = Json::array(), vals = Json::array();
  for (const auto& r : rep.relations) rels.push_back(r.to_string());
  for (const auto& v : rep.relation_values) vals.push_back(v.to_string());

  auto v = make("presentation.relations-vanish", Provenance::Reference, rep.relations_vanish, vals,
                Json::array({"0", "0", "0"}));
  v.inputs["relations"] = rels;
  fail_with(v, vals);
  out.push_back(v);

  Json expected_basis = Json::array({"1", "h", "h^2", "s11", "h^3", "h^4"});
  auto b = make("presentation.standard-basis", Provenance::Reference,
                rep.basis_matches && rep.quotient_rank == 6, rep.standard_basis, expected_basis);
  b.inputs["relations"] = rels;
  b.notes.push_back("standard monomials of a reduced Groebner basis over Q(q), degrevlex with deg h = 1, deg s11 = 2");
  fail_with(b, Json{{"quotient_rank", rep.quotient_rank}});
  out.push_back(b);

  auto iso = make("presentation.isomorphism", Provenance::Oracle, rep.isomorphism,
                  rep.isomorphism ? "structure constants agree" : "differ", "structure constants agree");
  fail_with(iso, "quotient and quantum algebra structure constants differ");
  out.push_back(iso);

  auto ch = make("presentation.cayley-hamilton", Provenance::Reference, rep.cayley_hamilton,
                 rep.cayley_hamilton ? "0" : "nonzero", "M^5 - 44q M^3 - 16q^2 M = 0");
  fail_with(ch, "matrix identity fails");
  out.push_back(ch);

  Json ranks = Json::array();
  for (const auto& r : rep.rank_without) ranks.push_back(r ? Json(*r) : Json("infinite"));
  const bool shape = rep.rank_without.size() == 3 && rep.rank_without[0] == std::optional<std::size_t>(10) &&
                     !rep.rank_without[1] && rep.rank_without[2] == std::optional<std::size_t>(6);
  auto m = make("presentation.relation-ranks", Provenance::Oracle, rep.r3_in_ideal_of_r1_r2 && shape,
                Json{{"rank_without", ranks}, {"R3_in_ideal_R1_R2", rep.r3_in_ideal_of_r1_r2}},
                Json{{"rank_without", Json::array({10, "infinite", 6})}, {"R3_in_ideal_R1_R2", true}});
  m.trace.push_back("R3 = (5*s11 + 2*h^2 + 6*q)*R1 - 5*h*R2 holds in Q[q, h, s11]");
  m.notes.push_back("dropping R1 or R2 raises the rank above 6; dropping R3 does not, since R3 lies in (R1, R2)");
  m.notes.push_back(std::string("every relation needed: ") + (rep.each_relation_needed ? "yes" : "no"));
  fail_with(m, m.computed);
  out.push_back(m);
  return out;
}

// ---- deform ----

std::vector<Certificate> deform_certificates(const Options& opt) {
  std::vector<Certificate> out;
  const auto& K = ambient_operator();
  const auto ref = deform::reference_deformed_matrix();
  const std::vector<int> deg(gm::kSlotDegree.begin(), gm::kSlotDegree.end());
  const bool graded = deform::check_operator_grading(K.matrix, deg);
  auto op = make("deformation.operator", Provenance::Reference, K.matrix == ref && graded, matrix_json(K.matrix),
                 matrix_json(ref));
  op.inputs["Eu"] = "2h - t*s2";
  op.trace.push_back("order 0: 2 x h-matrix");
  op.trace.push_back("order 1, column b: -(s2 cup s_b) + sum over d >= 1 of (2d - 1) (s2 * s_b)_d");
  op.notes.push_back("entries mod t^2, deg t = -1");
  if (op.status == Status::Failed) {
    Json diff = Json::array();
    for (std::size_t i = 0; i < kAmbientDim; ++i)
      for (std::size_t j = 0; j < kAmbientDim; ++j)
        if (K.matrix(i, j) != ref(i, j))
          diff.push_back({kSlotName[i], kSlotName[j], K.matrix(i, j).to_string(), ref(i, j).to_string()});
    fail_with(op, Json{{"entries", diff}, {"graded", graded}});
  }
  out.push_back(op);

  const auto jp = deform::verify_jordan_pair(K);
  auto j = make("deformation.jordan-pair", Provenance::Reference, jp.ok(),
                Json{{"Eu*alpha - (-4qt alpha - t beta)", vector_json(jp.residual_alpha)},
                     {"Eu*beta - (-4qt beta)", vector_json(jp.residual_beta)}},
                "both residuals vanish mod t^2");
  j.inputs["alpha"] = vector_json(jp.alpha);
  j.inputs["beta"] = vector_json(jp.beta);
  j.notes.push_back(std::string("alpha in the kernel of h at t = 0: ") + (jp.alpha_in_h_kernel ? "yes" : "no"));
  fail_with(j, j.computed);
  out.push_back(j);

  const deform::HodgeModel model;
  Certificate ax;
  ax.id = "deformation.primitive-block";
  ax.status = Status::ModelAxiom;
  ax.provenance = Provenance::Identity;
  ax.computed = "-4*q*t Id on the 22 primitive classes, no mixing with the ambient block";
  ax.expected = ax.computed;
  ax.inputs = Json{{"h31", model.h31}, {"h22_primitive", model.h22_primitive}, {"h13", model.h13}};
  ax.notes.push_back("axiom of the model; its proof is monodromy-theoretic and not computed");
  out.push_back(ax);

  const auto full = deform::assemble_full_operator(K, model);
  const auto st = deform::atom_statistics(full, model);
  const bool stats = st.eigenspace_dim == 24 && st.lambda0 == Trunc::from_poly(parse_poly(qt_ring(), "-4*q*t")) &&
                     st.nu == 1 && st.nu_prime == 0 && st.gamma == 1 && st.rho == 2 && st.order_zero_semisimple;
  auto a = make("deformation.atom-statistics", Provenance::Reference, stats,
                Json{{"lambda0", st.lambda0.to_string()}, {"generalized_eigenspace_dim", st.eigenspace_dim},
                     {"nu", st.nu}, {"nu_prime", st.nu_prime}, {"gamma", st.gamma}, {"rho", st.rho}},
                Json{{"lambda0", "-4*q*t"}, {"generalized_eigenspace_dim", 24}, {"nu", 1}, {"nu_prime", 0},
                     {"gamma", 1}, {"rho", 2}});
  a.inputs["model_dim"] = model.total_dim();
  a.trace.push_back("E = generalized kernel of the order-0 operator, complement = its stable image");
  a.trace.push_back("first-order block B = order-1 operator compressed to E, lambda1 = tr(B) / dim E");
  a.notes.push_back("ranks over Q(q) of the order-0 and order-1 data");
  a.notes.push_back("rho computed at xi0 = t*s2");
  a.notes.push_back("all identities are polynomial identities in q, t mod t^2");
  fail_with(a, a.computed);
  out.push_back(a);

  const bool block = st.square_zero && st.size_two_blocks == 1 && st.block_in_ambient && st.image_in_ambient &&
                     st.image_is_beta_line && st.kernel_is_primitive_plus_line && st.kernel_dim == 23;
  auto b = make("deformation.jordan-block", Provenance::Reference, block,
                Json{{"blocks_of_size_two", st.size_two_blocks}, {"square_zero", st.square_zero},
                     {"block_in_ambient", st.block_in_ambient}, {"image", vector_json(st.image_vector)},
                     {"image_is_beta_line", st.image_is_beta_line}, {"kernel_dim", st.kernel_dim},
                     {"kernel_is_primitive_plus_line", st.kernel_is_primitive_plus_line}},
                Json{{"blocks_of_size_two", 1}, {"block_in_ambient", true}, {"image", "beta(0)"}, {"kernel_dim", 23}});
  fail_with(b, b.computed);
  out.push_back(b);

  const auto br = deform::truncated_branches(K);
  auto c = make("deformation.branches", Provenance::Oracle, br.ok(),
                Json{{"char_poly", br.char_poly.to_string()}, {"cofactor_t0", br.cofactor_order_zero.to_string()},
                     {"cofactor_t1", br.cofactor_order_one.to_string()}},
                "char poly = (X + 4qt)^2 (e0 + t e1) mod t^2, e0(0) != 0, e0 squarefree");
  c.notes.push_back(std::string("divisible by (X + 4qt)^2: ") + (br.divisible_by_double_factor ? "yes" : "no"));
  fail_with(c, Json{{"divisible", br.divisible_by_double_factor}, {"nonzero_at_lambda0", br.cofactor_nonzero_at_lambda0},
                    {"squarefree", br.cofactor_squarefree_at_t0}});
  out.push_back(c);

  if (opt.q0) {
    const Rational q0 = *opt.q0;
    auto at_q = [&](const MultiPoly& p) { return p.evaluate({q0}); };
    Matrix<Rational> K0(kAmbientDim, kAmbientDim, Rational(0)), K1 = K0;
    for (std::size_t i = 0; i < kAmbientDim; ++i)
      for (std::size_t jj = 0; jj < kAmbientDim; ++jj) {
        K0(i, jj) = at_q(K.matrix(i, jj).c0());
        K1(i, jj) = at_q(K.matrix(i, jj).c1());
      }
    std::vector<Rational> a0, a1, b0, b1;
    for (std::size_t i = 0; i < kAmbientDim; ++i) {
      a0.push_back(at_q(jp.alpha[i].c0()));
      a1.push_back(at_q(jp.alpha[i].c1()));
      b0.push_back(at_q(jp.beta[i].c0()));
      b1.push_back(at_q(jp.beta[i].c1()));
    }
    const Rational lam = -4 * q0;
    auto add = [](std::vector<Rational> x, const std::vector<Rational>& y) {
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
      return x;
    };
    auto scale = [](const Rational& s, std::vector<Rational> x) {
      for (auto& v : x) v *= s;
      return x;
    };
    const bool ok = K0.apply(a0) == std::vector<Rational>(kAmbientDim, Rational(0)) &&
                    add(K0.apply(a1), K1.apply(a0)) == add(scale(lam, a0), scale(Rational(-1), b0)) &&
                    K0.apply(b0) == std::vector<Rational>(kAmbientDim, Rational(0)) &&
                    add(K0.apply(b1), K1.apply(b0)) == scale(lam, b0);
    auto s = make("deformation.specialized", Provenance::Oracle, ok,
                  Json{{"order0", matrix_json(K0)}, {"order1", matrix_json(K1)}},
                  "Jordan pair identities hold at this q, order by order in t");
    s.inputs["q"] = str(q0);
    if (opt.t0) {
      Matrix<Rational> Kt = K0;
      for (std::size_t i = 0; i < kAmbientDim; ++i)
        for (std::size_t jj = 0; jj < kAmbientDim; ++jj) Kt(i, jj) += *opt.t0 * K1(i, jj);
      s.inputs["t"] = str(*opt.t0);
      s.notes.push_back("first-order operator evaluated at t");
      s.computed["at_t"] = matrix_json(Kt);
    }
    fail_with(s, "Jordan pair identities fail at this q");
    out.push_back(s);
  }
  return out;
}

// ---- criterion ----

std::vector<Certificate> criterion_certificates() {
  std::vector<Certificate> out;
  const deform::HodgeModel model;
  const auto M = h_matrix().map([](const MultiPoly& p) { return Rational(2) * p; });
  const auto rep = deform::irrationality_criterion(M, model);
  auto c = make("criterion.multiplicities", Provenance::Reference,
                rep.satisfied && rep.simple_nonzero == 4 && rep.zero_multiplicity == 2 && rep.max_multiplicity == 2,
                Json{{"profile", rep.profile_string()}, {"simple_nonzero", rep.simple_nonzero},
                     {"zero_multiplicity", rep.zero_multiplicity}, {"max_multiplicity", rep.max_multiplicity},
                     {"h31_nonzero", rep.h31_nonzero}, {"satisfied", rep.satisfied}},
                Json{{"simple_nonzero", 4}, {"zero_multiplicity", 2}, {"h31_nonzero", true}, {"satisfied", true}});
  c.inputs["operator"] = "2h on the ambient (= Hodge) classes";
  c.inputs["h31"] = model.h31;
  c.trace.push_back("squarefree decomposition of det(X Id - 2M) over Q(q)");
  fail_with(c, c.computed);
  out.push_back(c);

  const auto id2 = qh::QMatrix::identity(kAmbientDim, MultiPoly(q_ring()), MultiPoly(q_ring(), Rational(2)));
  const auto ctl = deform::irrationality_criterion(id2, model);
  auto k = make("criterion.control", Provenance::Identity, !ctl.satisfied && ctl.max_multiplicity == 6,
                Json{{"profile", ctl.profile_string()}, {"satisfied", ctl.satisfied}},
                Json{{"profile", "multiplicity 6 x1"}, {"satisfied", false}});
  k.inputs["operator"] = "2 Id";
  fail_with(k, k.computed);
  out.push_back(k);
  return out;
}

// ---- oracle suites ----

Certificate suite_certificate(const std::string& id, const SuiteResult& r, std::optional<std::uint64_t> seed) {
  auto c = make(id, Provenance::Oracle, r.ok(), static_cast<int>(r.cases - r.failures.size()),
                static_cast<int>(r.cases));
  c.inputs["suite"] = r.name;
  if (seed) c.inputs["seed"] = *seed;
  fail_with(c, r.failures);
  return c;
}

std::vector<Certificate> oracle_certificates(const Options& opt) {
  return {suite_certificate("oracle.grassmann-schubert", grassmann_bundle_vs_schubert(), std::nullopt),
          suite_certificate("oracle.splitting-closed-forms", closed_forms_vs_roots(opt.seed), opt.seed),
          suite_certificate("oracle.grassmannian-duality", grassmannian_duality(), std::nullopt),
          suite_certificate("oracle.ring-axioms", ring_axioms(opt.seed), opt.seed),
          suite_certificate("oracle.J2-closed-form", closed_form_J2_vs_associativity(opt.seed), opt.seed)};
}

void sort_by_id(std::vector<Certificate>& v) {
  std::sort(v.begin(), v.end(), [](const Certificate& a, const Certificate& b) { return a.id < b.id; });
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Failed: return "failed";
    case Status::ModelAxiom: return "model-axiom";
  }
  return "failed";
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Reference: return "reference";
    case Provenance::Oracle: return "oracle";
    case Provenance::Identity: return "identity";
  }
  return "reference";
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"gw", "matrix", "table", "presentation", "deform", "criterion", "verify-all"};
  return c;
}

std::vector<Certificate> certify(const std::string& command, const Options& opt) {
  using Group = std::function<std::vector<Certificate>()>;
  std::vector<Group> groups;
  if (command == "gw") groups = {gw_certificates};
  else if (command == "matrix") groups = {[&] { return matrix_certificates(opt, opt.q0.has_value()); }};
  else if (command == "table") groups = {table_certificates};
  else if (command == "presentation") groups = {presentation_certificates};
  else if (command == "deform") groups = {[&] { return deform_certificates(opt); }};
  else if (command == "criterion") groups = {criterion_certificates};
  else if (command == "verify-all")
    groups = {gw_certificates,
              [&] { return matrix_certificates(opt, true); },
              table_certificates,
              presentation_certificates,
              [&] { return deform_certificates(opt); },
              criterion_certificates,
              [&] { return oracle_certificates(opt); }};
  else throw UsageError("unknown command '" + command + "'");

  // Shared inputs are built once before any worker starts.
  if (command != "gw") {
    (void)table();
    (void)h_matrix();
  }
  std::vector<std::vector<Certificate>> parts(groups.size());
  const std::size_t jobs = std::max<std::size_t>(1, opt.jobs);
  for (std::size_t start = 0; start < groups.size(); start += jobs) {
    std::vector<std::future<std::vector<Certificate>>> running;
    for (std::size_t i = start; i < std::min(groups.size(), start + jobs); ++i)
      running.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, groups[i]));
    for (std::size_t i = 0; i < running.size(); ++i) parts[start + i] = running[i].get();
  }
  std::vector<Certificate> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  sort_by_id(all);
  return all;
}

bool any_failed(const std::vector<Certificate>& certs) {
  return std::any_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.status == Status::Failed; });
}

}  // namespace gmqh::cli
