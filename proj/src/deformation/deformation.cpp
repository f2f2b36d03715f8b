#include "gmqh/deformation/deformation.hpp"

#include <sstream>

#include "gmqh/errors.hpp"

namespace gmqh::deform {

using gm::kAmbientDim;
using gm::kSlotDegree;

namespace {

Trunc parse_trunc(const std::string& s) { return Trunc::from_poly(parse_poly(qt_ring(), s)); }

std::vector<Trunc> parse_trunc_vector(const std::vector<std::string>& v) {
  std::vector<Trunc> out;
  for (const auto& s : v) out.push_back(parse_trunc(s));
  return out;
}

bool all_zero(const std::vector<Trunc>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix<RatFunc> to_ratfunc(const qh::QMatrix& m) {
  return m.map([](const MultiPoly& p) { return gmqh::to_ratfunc(p); });
}

Matrix<RatFunc> columns(const std::vector<std::vector<RatFunc>>& cols, std::size_t rows) {
  Matrix<RatFunc> m(rows, cols.size(), RatFunc(0));
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

std::vector<std::vector<RatFunc>> unit_vectors(std::size_t n, std::size_t from, std::size_t to) {
  std::vector<std::vector<RatFunc>> out;
  for (std::size_t i = from; i < to; ++i) {
    std::vector<RatFunc> e(n, RatFunc(0));
    e[i] = RatFunc(1);
    out.push_back(std::move(e));
  }
  return out;
}

std::size_t span_dim(const std::vector<std::vector<RatFunc>>& vs, std::size_t n) {
  return vs.empty() ? 0 : rank(columns(vs, n));
}

// dim(U cap W) = dim U + dim W - dim(U + W).
std::size_t intersection_dim(const std::vector<std::vector<RatFunc>>& U, const std::vector<std::vector<RatFunc>>& W,
                             std::size_t n) {
  std::vector<std::vector<RatFunc>> both = U;
  both.insert(both.end(), W.begin(), W.end());
  return span_dim(U, n) + span_dim(W, n) - span_dim(both, n);
}

std::vector<std::vector<RatFunc>> column_basis(const Matrix<RatFunc>& m) {
  std::vector<std::vector<RatFunc>> out;
  for (auto c : rref(m).pivots) out.push_back(m.column(c));
  return out;
}

}  // namespace

std::vector<std::string> HodgeModel::slot_tags() const {
  std::vector<std::string> tags(gm::kSlotName.begin(), gm::kSlotName.end());
  for (int i = 0; i < h31; ++i) tags.emplace_back("(3,1)");
  for (int i = 0; i < h22_primitive; ++i) tags.emplace_back("(2,2)");
  for (int i = 0; i < h13; ++i) tags.emplace_back("(1,3)");
  return tags;
}

std::vector<int> HodgeModel::slot_degrees() const {
  std::vector<int> d(kSlotDegree.begin(), kSlotDegree.end());
  d.insert(d.end(), static_cast<std::size_t>(primitive_count()), 2);
  return d;
}

bool HodgeModel::consistent() const {
  return h31 >= 0 && h13 >= 0 && h22_primitive >= 0 && h31 == h13 && primitive_count() + 2 == 24 && total_dim() == 28;
}

TruncatedOperator build_deformed_matrix(const gw::GWInvariants& inv, const qh::QAlgebra& table) {
  if (!qh::check_associativity(table).ok()) throw Error("deformed operator needs an associative product table");
  const qh::QMatrix M = qh::build_h_matrix(inv);
  const RingPtr& ring = q_ring();
  TMatrix K(kAmbientDim, kAmbientDim, Trunc());
  for (std::size_t b = 0; b < kAmbientDim; ++b) {
    const qh::QClass s2b = table.product(gm::S2, b);
    for (std::size_t c = 0; c < kAmbientDim; ++c) {
      MultiPoly c1(ring);
      for (const auto& [d, part] : s2b[c].collect(0)) {
        const Rational weight = d == 0 ? Rational(-1) : Rational(2 * d - 1);
        c1 += weight * (part * q_poly(1, d));
      }
      K(c, b) = Trunc(Rational(2) * M(c, b), c1);
    }
  }
  return {K, TruncatedOperator::Basis::Ambient6};
}

TMatrix reference_deformed_matrix() {
  const char* rows[6][6] = {{"0", "12*q", "240*q^2*t", "156*q^2*t", "48*q^2", "880*q^3*t"},
                            {"2", "10*q*t", "20*q", "12*q", "180*q^2*t", "48*q^2"},
                            {"-t", "2", "8*q*t", "8*q*t", "8*q", "84*q^2*t"},
                            {"0", "2", "12*q*t", "4*q*t", "4*q", "72*q^2*t"},
                            {"0", "-3*t", "6", "4", "10*q*t", "12*q"},
                            {"0", "0", "-2*t", "-t", "2", "0"}};
  TMatrix m(kAmbientDim, kAmbientDim, Trunc());
  for (std::size_t i = 0; i < kAmbientDim; ++i)
    for (std::size_t j = 0; j < kAmbientDim; ++j) m(i, j) = parse_trunc(rows[i][j]);
  return m;
}

bool check_operator_grading(const TMatrix& m, const std::vector<int>& deg) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      auto d = m(i, j).homogeneous_degree();
      if (!d || *d != deg[j] - deg[i] + 1) return false;
    }
  return true;
}

qh::QMatrix order_zero(const TMatrix& m) {
  return m.map([](const Trunc& x) { return x.c0(); });
}
qh::QMatrix order_one(const TMatrix& m) {
  return m.map([](const Trunc& x) { return x.c1(); });
}

bool JordanPairReport::ok() const { return all_zero(residual_alpha) && all_zero(residual_beta) && alpha_in_h_kernel; }

JordanPairReport verify_jordan_pair(const TruncatedOperator& K) {
  if (K.size() != kAmbientDim) throw std::invalid_argument("Jordan pair check needs the ambient operator");
  JordanPairReport rep;
  rep.alpha = parse_trunc_vector({"-2*q", "0", "2", "-3", "0", "0"});
  rep.beta = parse_trunc_vector({"-4*q^2", "-16*q^2*t", "-2*q", "0", "-4*q*t", "1"});
  const Trunc lambda = parse_trunc("-4*q*t"), t = Trunc::t();
  const auto Ka = K.matrix.apply(rep.alpha);
  const auto Kb = K.matrix.apply(rep.beta);
  for (std::size_t i = 0; i < kAmbientDim; ++i) {
    rep.residual_alpha.push_back(Ka[i] - (lambda * rep.alpha[i] - t * rep.beta[i]));
    rep.residual_beta.push_back(Kb[i] - lambda * rep.beta[i]);
  }
  const auto K0 = order_zero(K.matrix);
  std::vector<MultiPoly> a0;
  for (const auto& x : rep.alpha) a0.push_back(x.c0());
  rep.alpha_in_h_kernel = true;
  for (const auto& x : K0.apply(a0))
    if (!x.is_zero()) rep.alpha_in_h_kernel = false;
  return rep;
}

TruncatedOperator assemble_full_operator(const TruncatedOperator& K, const HodgeModel& model) {
  if (K.size() != kAmbientDim) throw std::invalid_argument("full operator needs the ambient operator");
  const std::size_t n = static_cast<std::size_t>(model.total_dim());
  TMatrix F(n, n, Trunc());
  for (std::size_t i = 0; i < kAmbientDim; ++i)
    for (std::size_t j = 0; j < kAmbientDim; ++j) F(i, j) = K.matrix(i, j);
  const Trunc prim = parse_trunc("-4*q*t");
  for (std::size_t i = kAmbientDim; i < n; ++i) F(i, i) = prim;
  return {F, TruncatedOperator::Basis::Full28};
}

AtomStatistics atom_statistics(const TruncatedOperator& Kfull, const HodgeModel& model) {
  const std::size_t n = Kfull.size();
  if (static_cast<int>(n) != model.total_dim()) throw ModelInconsistency("operator size does not match the Hodge model");
  const Matrix<RatFunc> K0 = to_ratfunc(order_zero(Kfull.matrix));
  const Matrix<RatFunc> K1 = to_ratfunc(order_one(Kfull.matrix));

  // Fitting decomposition of K0: generalized kernel and stable image.
  Matrix<RatFunc> P = K0;
  std::size_t r = rank(P);
  for (std::size_t k = 1; k < n; ++k) {
    Matrix<RatFunc> P2 = P * K0;
    const std::size_t r2 = rank(P2);
    if (r2 == r) break;
    P = P2;
    r = r2;
  }
  const auto E0 = kernel(P);
  const auto image = column_basis(P);
  const std::size_t m = E0.size();
  constexpr std::size_t kExpected = 24;
  if (m != kExpected)
    throw ModelInconsistency("eigenvalue cluster at t = 0 has dimension " + std::to_string(m) + ", expected 24");

  AtomStatistics st;
  st.eigenspace_dim = m;
  st.order_zero_semisimple = true;
  for (const auto& v : E0)
    for (const auto& x : K0.apply(v))
      if (!x.is_zero()) st.order_zero_semisimple = false;
  if (!st.order_zero_semisimple) throw ModelInconsistency("K0 is not semisimple on its generalized kernel");

  std::vector<std::vector<RatFunc>> tcols = E0;
  tcols.insert(tcols.end(), image.begin(), image.end());
  const Matrix<RatFunc> T = columns(tcols, n);
  const auto Tinv = inverse(T);
  if (!Tinv) throw ModelInconsistency("generalized kernel and image do not split the space");
  const Matrix<RatFunc> Bfull = *Tinv * K1 * T;
  Matrix<RatFunc> B(m, m, RatFunc(0));
  RatFunc trace(0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) B(i, j) = Bfull(i, j);
    trace += B(i, i);
  }
  const RatFunc lambda1 = trace / RatFunc(static_cast<long>(m));
  st.lambda0 = Trunc(MultiPoly(q_ring()), from_ratfunc(lambda1));
  Matrix<RatFunc> N = B;
  for (std::size_t i = 0; i < m; ++i) N(i, i) -= lambda1;
  st.square_zero = (N * N).is_zero();
  st.gamma = static_cast<int>(rank(N));
  st.kernel_dim = m - static_cast<std::size_t>(st.gamma);
  st.size_two_blocks = st.square_zero ? static_cast<std::size_t>(st.gamma) : 0;

  const auto ambient = unit_vectors(n, 0, kAmbientDim);
  const std::size_t p0 = kAmbientDim;
  const auto primitive = unit_vectors(n, p0, n);
  const auto h2 = unit_vectors(n, p0, p0 + static_cast<std::size_t>(model.h31));
  st.nu = static_cast<int>(intersection_dim(E0, h2, n));
  st.nu_prime = 0;  // H^(1) = 0: no odd cohomology
  st.rho = static_cast<int>(intersection_dim(E0, ambient, n));

  auto to_full = [&](const std::vector<RatFunc>& x) {
    std::vector<RatFunc> v(n, RatFunc(0));
    for (std::size_t k = 0; k < m; ++k)
      if (!x[k].is_zero())
        for (std::size_t i = 0; i < n; ++i) v[i] += x[k] * E0[k][i];
    return v;
  };
  std::vector<std::vector<RatFunc>> img;
  for (const auto& c : column_basis(N)) img.push_back(to_full(c));
  st.image_in_ambient = true;
  for (const auto& v : img)
    for (std::size_t i = p0; i < n; ++i)
      if (!v[i].is_zero()) st.image_in_ambient = false;
  std::vector<RatFunc> beta0(n, RatFunc(0));
  beta0[gm::S0] = gmqh::to_ratfunc(parse_poly(q_ring(), "-4*q^2"));
  beta0[gm::S2] = gmqh::to_ratfunc(parse_poly(q_ring(), "-2*q"));
  beta0[gm::S31] = RatFunc(1);
  st.image_is_beta_line = img.size() == 1 && span_dim({img[0], beta0}, n) == 1;
  if (!img.empty()) st.image_vector = img[0];

  std::vector<std::vector<RatFunc>> ker;
  for (const auto& v : kernel(N)) ker.push_back(to_full(v));
  st.kernel_is_primitive_plus_line = ker.size() == primitive.size() + 1 &&
                                     intersection_dim(ker, primitive, n) == primitive.size() &&
                                     intersection_dim(ker, ambient, n) == 1;

  // N restricted to E0 cap ambient, in E0 coordinates.
  Matrix<RatFunc> sel(n - p0, m, RatFunc(0));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = p0; i < n; ++i) sel(i - p0, k) = E0[k][i];
  const auto amb_in_e0 = kernel(sel);
  st.block_in_ambient = st.image_in_ambient && !amb_in_e0.empty() &&
                        rank(N * columns(amb_in_e0, m)) == static_cast<std::size_t>(st.gamma);
  return st;
}

const RingPtr& qtX_ring() {
  static const RingPtr r = make_ring({{"q", 2}, {"t", -1}, {"X", 1}});
  return r;
}

BranchReport truncated_branches(const TruncatedOperator& K) {
  const RingPtr& R = qtX_ring();
  const auto lifted = K.matrix.map([](const Trunc& x) { return x.lift(qt_ring()); });
  BranchReport rep{MultiPoly(R), false, MultiPoly(R), MultiPoly(R), false, false};
  rep.char_poly = char_poly(lifted, "X").embed(R).truncated_in(1, 1);
  const auto parts = rep.char_poly.collect(1);
  auto part = [&](int k) {
    auto it = parts.find(k);
    return it == parts.end() ? MultiPoly(R) : it->second;
  };
  const MultiPoly X = MultiPoly::variable(R, 2), q = MultiPoly::variable(R, 0);
  try {
    rep.cofactor_order_zero = exact_divide(part(0), X * X);
    rep.cofactor_order_one = exact_divide(part(1) - Rational(8) * q * X * rep.cofactor_order_zero, X * X);
    rep.divisible_by_double_factor = true;
  } catch (const std::domain_error&) {
    return rep;
  }
  const auto by_x = rep.cofactor_order_zero.collect(2);
  rep.cofactor_nonzero_at_lambda0 = by_x.count(0) && !by_x.at(0).is_zero();
  std::vector<RatFunc> coeffs;
  const int deg = rep.cofactor_order_zero.max_exponent(2);
  for (int k = 0; k <= deg; ++k) {
    auto it = by_x.find(k);
    coeffs.push_back(it == by_x.end() ? RatFunc(0) : gmqh::to_ratfunc(it->second.embed(q_ring())));
  }
  rep.cofactor_squarefree_at_t0 = deg >= 1 && is_squarefree(UPoly<RatFunc>(coeffs));
  return rep;
}

std::string CriterionReport::profile_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [mult, count] : profile) {
    if (!first) out << ", ";
    first = false;
    if (mult == 1) out << "simple x" << count;
    else out << "multiplicity " << mult << " x" << count;
  }
  if (zero_multiplicity > 0) out << (first ? "" : ", ") << "0:" << zero_multiplicity;
  return out.str();
}

CriterionReport irrationality_criterion(const qh::QMatrix& M, const HodgeModel& model) {
  CriterionReport rep;
  const MultiPoly cp = char_poly(M, "X").embed(qh::qx_ring());
  const auto by_x = cp.collect(1);
  const int deg = cp.max_exponent(1);
  std::vector<RatFunc> coeffs;
  for (int k = 0; k <= deg; ++k) {
    auto it = by_x.find(k);
    coeffs.push_back(it == by_x.end() ? RatFunc(0) : gmqh::to_ratfunc(it->second.embed(q_ring())));
  }
  while (rep.zero_multiplicity <= deg && coeffs[static_cast<std::size_t>(rep.zero_multiplicity)].is_zero())
    ++rep.zero_multiplicity;
  const auto factors = squarefree_decomposition(UPoly<RatFunc>(coeffs));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const int count = factors[i].degree();
    if (count <= 0) continue;
    const int mult = static_cast<int>(i) + 1;
    rep.profile.emplace_back(mult, count);
    rep.max_multiplicity = std::max(rep.max_multiplicity, mult);
    if (mult == 1) rep.simple_nonzero = count - (rep.zero_multiplicity == 1 ? 1 : 0);
  }
  rep.h31_nonzero = model.h31 > 0;
  rep.satisfied = rep.max_multiplicity <= 2 && rep.h31_nonzero;
  return rep;
}

}  // namespace gmqh::deform
