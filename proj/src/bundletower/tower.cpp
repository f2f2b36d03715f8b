#include "gmqh/bundletower/tower.hpp"

#include <sstream>
#include <stdexcept>

#include "gmqh/bundletower/splitting.hpp"
#include "gmqh/errors.hpp"

namespace gmqh::tower {

using Kind = SheafNode::Kind;

namespace {

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<MultiPoly> one(const RingPtr& ring, int d) {
  std::vector<MultiPoly> c(static_cast<std::size_t>(d + 1), MultiPoly(ring));
  c[0] = MultiPoly(ring, Rational(1));
  return c;
}

std::vector<MultiPoly> multiply(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
  const std::size_t n = a.size();
  std::vector<MultiPoly> r(n, MultiPoly(a[0].ring()));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::vector<MultiPoly> dual_of(std::vector<MultiPoly> c) {
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return c;
}

// Flattens sums, pushing duals through them.
std::vector<Sheaf> sum_parts(const Sheaf& e) {
  if (e->kind == Kind::Sum) {
    auto a = sum_parts(e->children[0]);
    auto b = sum_parts(e->children[1]);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  if (e->kind == Kind::Dual) {
    const Sheaf& inner = e->children[0];
    if (inner->kind == Kind::Dual) return sum_parts(inner->children[0]);
    if (inner->kind == Kind::Sum) {
      std::vector<Sheaf> out;
      for (const auto& p : sum_parts(inner)) out.push_back(dual(p));
      return out;
    }
  }
  return {e};
}

}  // namespace

std::vector<MultiPoly> components(const MultiPoly& p, int max_degree) {
  std::vector<MultiPoly> c;
  for (int k = 0; k <= max_degree; ++k) c.push_back(p.homogeneous_component(k));
  return c;
}

MultiPoly total(const std::vector<MultiPoly>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty total class");
  MultiPoly t(parts[0].ring());
  for (const auto& p : parts) t += p;
  return t;
}

std::vector<MultiPoly> series_inverse(const std::vector<MultiPoly>& c, int max_degree) {
  if (c.empty() || c[0] != MultiPoly(c[0].ring(), Rational(1)))
    throw std::invalid_argument("series inverse needs constant term 1");
  const RingPtr& ring = c[0].ring();
  std::vector<MultiPoly> s(static_cast<std::size_t>(max_degree + 1), MultiPoly(ring));
  s[0] = MultiPoly(ring, Rational(1));
  for (int k = 1; k <= max_degree; ++k) {
    MultiPoly acc(ring);
    for (int i = 1; i <= k && i < static_cast<int>(c.size()); ++i)
      acc += c[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
    s[static_cast<std::size_t>(k)] = -acc;
  }
  return s;
}

// ---- construction ----

TowerSpace TowerSpace::point() {
  TowerSpace t;
  t.base_kind_ = BaseKind::Point;
  t.ring_ = make_ring({});
  t.dim_ = 0;
  t.finalize();
  return t;
}

TowerSpace TowerSpace::projective_space(int n, const std::string& var) {
  if (n < 1) throw std::invalid_argument("projective space needs n >= 1");
  TowerSpace t;
  t.base_kind_ = BaseKind::Projective;
  t.base_a_ = n;
  t.ring_ = make_ring({{var, 1}});
  t.dim_ = n;
  t.relations_ = {MultiPoly::variable(t.ring_, 0).pow(static_cast<unsigned>(n + 1))};
  t.finalize();
  return t;
}

TowerSpace TowerSpace::product_projective(int a, int b, const std::string& var_a, const std::string& var_b) {
  if (a < 1 || b < 1) throw std::invalid_argument("product of projective spaces needs positive dimensions");
  TowerSpace t;
  t.base_kind_ = BaseKind::Product;
  t.base_a_ = a;
  t.base_b_ = b;
  t.ring_ = make_ring({{var_a, 1}, {var_b, 1}});
  t.dim_ = a + b;
  t.relations_ = {MultiPoly::variable(t.ring_, 0).pow(static_cast<unsigned>(a + 1)),
                  MultiPoly::variable(t.ring_, 1).pow(static_cast<unsigned>(b + 1))};
  t.finalize();
  return t;
}

TowerSpace TowerSpace::grassmannian_24(const std::vector<std::string>& names) {
  return build_grassmann2_bundle(point(), trivial(4), names);
}

void TowerSpace::finalize() {
  ideal_ = std::make_shared<const PolyIdeal<Rational>>(ring_, relations_);
  if (top_degree_rank() != 1) throw ModelInconsistency("top graded piece of the tower is not one-dimensional");
  if (integrate(point_class()) != 1) throw ModelInconsistency("point class does not integrate to 1");
}

TowerSpace build_projective_bundle(const TowerSpace& base, const Sheaf& e, const std::string& var) {
  const int r = base.rank(e);
  if (r < 1) throw std::invalid_argument("projective bundle needs rank >= 1");
  if (base.ring_->find(var)) throw std::invalid_argument("generator " + var + " already declared");
  auto c = base.chern(e);
  for (std::size_t k = static_cast<std::size_t>(r) + 1; k < c.size(); ++k)
    if (!c[k].is_zero())
      throw Error(to_string(e) + " has nonzero c_" + std::to_string(k) + " beyond its rank " + std::to_string(r));
  c.resize(static_cast<std::size_t>(r + 1), MultiPoly(base.ring_));
  Stage st{Stage::Kind::Projective, e, r, {var}, base.ring_, c, {}};
  st.segre = series_inverse(c, base.dim_);
  for (auto& s : st.segre) s = base.reduce(s);

  TowerSpace t = base;
  t.ring_ = base.ring_->extended({{var, 1}});
  t.dim_ = base.dim_ + r - 1;
  for (auto& rel : t.relations_) rel = rel.embed(t.ring_);
  const MultiPoly zeta = MultiPoly::variable(t.ring_, base.ring_->size());
  MultiPoly rel(t.ring_);
  for (int i = 0; i <= r; ++i) rel += c[static_cast<std::size_t>(i)].embed(t.ring_) * zeta.pow(static_cast<unsigned>(r - i));
  t.relations_.push_back(rel);
  t.stages_.push_back(std::move(st));
  t.finalize();
  return t;
}

TowerSpace build_grassmann2_bundle(const TowerSpace& base, const Sheaf& e, const std::vector<std::string>& names) {
  const int r = base.rank(e);
  if (r != 4) throw UnsupportedConstruction("Grassmann bundle G(2,E) needs rank E = 4, got " + std::to_string(r));
  if (names.size() != 4) throw std::invalid_argument("Grassmann bundle needs four generator names");
  for (const auto& n : names)
    if (base.ring_->find(n)) throw std::invalid_argument("generator " + n + " already declared");
  auto c = base.chern(e);
  for (std::size_t k = 5; k < c.size(); ++k)
    if (!c[k].is_zero()) throw Error(to_string(e) + " has nonzero Chern classes beyond rank 4");
  c.resize(5, MultiPoly(base.ring_));
  Stage st{Stage::Kind::Grassmann2, e, r, names, base.ring_, c, {}};
  st.segre = series_inverse(c, base.dim_);
  for (auto& s : st.segre) s = base.reduce(s);

  TowerSpace t = base;
  t.ring_ = base.ring_->extended({{names[0], 1}, {names[1], 2}, {names[2], 1}, {names[3], 2}});
  t.dim_ = base.dim_ + 4;
  for (auto& rel : t.relations_) rel = rel.embed(t.ring_);
  const std::size_t off = base.ring_->size();
  std::vector<MultiPoly> sub = one(t.ring_, 4), quo = one(t.ring_, 4);
  sub[1] = MultiPoly::variable(t.ring_, off);
  sub[2] = MultiPoly::variable(t.ring_, off + 1);
  quo[1] = MultiPoly::variable(t.ring_, off + 2);
  quo[2] = MultiPoly::variable(t.ring_, off + 3);
  const auto whitney = multiply(sub, quo);
  for (int k = 1; k <= 4; ++k) {
    MultiPoly cd = c[static_cast<std::size_t>(k)].embed(t.ring_);
    if (k % 2 == 1) cd = -cd;
    t.relations_.push_back(whitney[static_cast<std::size_t>(k)] - cd);
  }
  t.stages_.push_back(std::move(st));
  t.finalize();
  return t;
}

std::string TowerSpace::description() const {
  std::ostringstream out;
  switch (base_kind_) {
    case BaseKind::Point: out << "point"; break;
    case BaseKind::Projective: out << "P^" << base_a_ << "[" << ring_->variable(0).name << "]"; break;
    case BaseKind::Product:
      out << "P^" << base_a_ << "[" << ring_->variable(0).name << "] x P^" << base_b_ << "["
          << ring_->variable(1).name << "]";
      break;
  }
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    const auto& st = stages_[i];
    if (st.kind == Stage::Kind::Projective)
      out << " <- P(" << to_string(st.bundle) << ")[" << st.generators[0] << "]";
    else
      out << " <- G(2," << to_string(st.bundle) << ")[" << st.generators[0] << "," << st.generators[1] << ","
          << st.generators[2] << "," << st.generators[3] << "]";
  }
  return out.str();
}

MultiPoly TowerSpace::reduce(const MultiPoly& p) const { return ideal_->normal_form(p.embed(ring_)); }

MultiPoly TowerSpace::point_class() const {
  MultiPoly p(ring_, Rational(1));
  if (base_kind_ == BaseKind::Projective) p = MultiPoly::variable(ring_, 0).pow(static_cast<unsigned>(base_a_));
  if (base_kind_ == BaseKind::Product)
    p = MultiPoly::variable(ring_, 0).pow(static_cast<unsigned>(base_a_)) *
        MultiPoly::variable(ring_, 1).pow(static_cast<unsigned>(base_b_));
  for (const auto& st : stages_) {
    const std::size_t off = st.base_ring->size();
    if (st.kind == Stage::Kind::Projective)
      p *= MultiPoly::variable(ring_, off).pow(static_cast<unsigned>(st.rank - 1));
    else
      p *= MultiPoly::variable(ring_, off + 1).pow(2);
  }
  return p;
}

// ---- characteristic classes ----

int TowerSpace::rank(const Sheaf& e) const {
  switch (e->kind) {
    case Kind::Trivial: return e->rank;
    case Kind::Line: return 1;
    case Kind::TautSub:
    case Kind::TautQuotient: {
      if (e->stage < 0 || e->stage >= static_cast<int>(stages_.size()))
        throw std::invalid_argument("no stage " + std::to_string(e->stage) + " in " + description());
      const auto& st = stages_[static_cast<std::size_t>(e->stage)];
      const int sub = st.kind == Stage::Kind::Projective ? 1 : 2;
      return e->kind == Kind::TautSub ? sub : st.rank - sub;
    }
    case Kind::Dual: return rank(e->children[0]);
    case Kind::Sum: return rank(e->children[0]) + rank(e->children[1]);
    case Kind::Difference: {
      const int r = rank(e->children[0]) - rank(e->children[1]);
      if (r < 0) throw std::invalid_argument("negative rank for " + to_string(e));
      return r;
    }
    case Kind::Tensor: return rank(e->children[0]) * rank(e->children[1]);
    case Kind::Sym2: {
      const int r = rank(e->children[0]);
      return r * (r + 1) / 2;
    }
    case Kind::Wedge2: {
      const int r = rank(e->children[0]);
      return r * (r - 1) / 2;
    }
  }
  return 0;
}

std::vector<MultiPoly> TowerSpace::total_chern(const Sheaf& e) const {
  const int d = dim_;
  switch (e->kind) {
    case Kind::Trivial: return one(ring_, d);
    case Kind::Line: {
      auto c = one(ring_, d);
      if (d >= 1) c[1] = MultiPoly(ring_, Rational(e->multiple)) * generator(e->generator);
      return c;
    }
    case Kind::TautSub:
    case Kind::TautQuotient: {
      rank(e);
      const auto& st = stages_[static_cast<std::size_t>(e->stage)];
      const std::size_t off = st.base_ring->size();
      auto c = one(ring_, d);
      if (st.kind == Stage::Kind::Projective) {
        const MultiPoly zeta = MultiPoly::variable(ring_, off);
        if (e->kind == Kind::TautSub) {
          if (d >= 1) c[1] = -zeta;
          return c;
        }
        // Q = E / O(-1): c(E) / (1 - zeta).
        std::vector<MultiPoly> ce = one(ring_, d), geo = one(ring_, d);
        for (std::size_t k = 0; k < st.chern.size() && k <= static_cast<std::size_t>(d); ++k)
          ce[k] = st.chern[k].embed(ring_);
        for (int k = 1; k <= d; ++k) geo[static_cast<std::size_t>(k)] = zeta.pow(static_cast<unsigned>(k));
        return multiply(ce, geo);
      }
      const std::size_t first = e->kind == Kind::TautSub ? off : off + 2;
      if (d >= 1) c[1] = -MultiPoly::variable(ring_, first);
      if (d >= 2) c[2] = MultiPoly::variable(ring_, first + 1);
      return c;
    }
    case Kind::Dual: return dual_of(total_chern(e->children[0]));
    case Kind::Sum: return multiply(total_chern(e->children[0]), total_chern(e->children[1]));
    case Kind::Difference:
      rank(e);
      return multiply(total_chern(e->children[0]), series_inverse(total_chern(e->children[1]), d));
    case Kind::Tensor: {
      const Sheaf& a = e->children[0];
      const Sheaf& b = e->children[1];
      for (int side = 0; side < 2; ++side) {
        const Sheaf& x = side == 0 ? a : b;
        const Sheaf& other = side == 0 ? b : a;
        auto parts = sum_parts(x);
        if (parts.size() > 1) {
          std::vector<Sheaf> terms;
          for (const auto& p : parts) terms.push_back(tensor(p, other));
          return total_chern(sum(terms));
        }
        if (x->kind == Kind::Difference)
          return total_chern(difference(tensor(x->children[0], other), tensor(x->children[1], other)));
      }
      const int ra = rank(a), rb = rank(b);
      if (ra != 1 && rb != 1) throw UnsupportedConstruction("tensor product needs a line bundle factor: " + to_string(e));
      const Sheaf& l = ra == 1 ? a : b;
      const Sheaf& m = ra == 1 ? b : a;
      const int r = ra == 1 ? rb : ra;
      if (r > 3) throw UnsupportedConstruction("tensor product with a bundle of rank " + std::to_string(r) + " > 3");
      auto cm = total_chern(m);
      for (std::size_t k = static_cast<std::size_t>(r) + 1; k < cm.size(); ++k)
        if (!reduce(cm[k]).is_zero()) throw UnsupportedConstruction("tensor product with a virtual bundle: " + to_string(e));
      const auto cl = total_chern(l);
      const MultiPoly c1l = d >= 1 ? cl[1] : MultiPoly(ring_);
      auto c = one(ring_, d);
      for (int k = 1; k <= std::min(r, d); ++k) {
        MultiPoly acc(ring_);
        for (int i = 0; i <= k; ++i)
          acc += MultiPoly(ring_, Rational(binomial(r - i, k - i))) * cm[static_cast<std::size_t>(i)] *
                 c1l.pow(static_cast<unsigned>(k - i));
        c[static_cast<std::size_t>(k)] = acc;
      }
      return c;
    }
    case Kind::Sym2:
    case Kind::Wedge2: {
      const Sheaf& inner = e->children[0];
      auto parts = sum_parts(inner);
      if (parts.size() > 1) {
        Sheaf rest = parts[1];
        for (std::size_t i = 2; i < parts.size(); ++i) rest = sum(rest, parts[i]);
        const Sheaf& first = parts[0];
        if (e->kind == Kind::Sym2) return total_chern(sum({sym2(first), tensor(first, rest), sym2(rest)}));
        return total_chern(sum({wedge2(first), tensor(first, rest), wedge2(rest)}));
      }
      const int r = rank(inner);
      if (r == 0) return one(ring_, d);
      const auto& closed =
          splitting_closed_form(e->kind == Kind::Sym2 ? Construction::Sym2 : Construction::Wedge2, r);
      auto ci = total_chern(inner);
      for (std::size_t k = static_cast<std::size_t>(r) + 1; k < ci.size(); ++k)
        if (!reduce(ci[k]).is_zero()) throw UnsupportedConstruction("splitting principle on a virtual bundle: " + to_string(e));
      std::vector<MultiPoly> images;
      for (int i = 1; i <= r; ++i)
        images.push_back(i <= d ? ci[static_cast<std::size_t>(i)] : MultiPoly(ring_));
      auto c = one(ring_, d);
      for (std::size_t k = 1; k < closed.size() && k <= static_cast<std::size_t>(d); ++k)
        c[k] = closed[k].map_to(ring_, images);
      return c;
    }
  }
  throw std::logic_error("unknown sheaf kind");
}

std::vector<MultiPoly> TowerSpace::chern(const Sheaf& e) const {
  auto c = total_chern(e);
  for (auto& x : c) x = reduce(x);
  return c;
}

std::vector<MultiPoly> TowerSpace::segre(const Sheaf& e) const {
  auto s = series_inverse(total_chern(e), dim_);
  for (auto& x : s) x = reduce(x);
  return s;
}

MultiPoly TowerSpace::chern_class(const Sheaf& e, int k) const {
  if (k < 0 || k > dim_) return MultiPoly(ring_);
  return chern(e)[static_cast<std::size_t>(k)];
}

MultiPoly TowerSpace::segre_class(const Sheaf& e, int k) const {
  if (k < 0 || k > dim_) return MultiPoly(ring_);
  return segre(e)[static_cast<std::size_t>(k)];
}

// ---- integration ----

namespace {

// pi_*(zeta^m) = s_{m-r+1}, for the projective bundle of a rank-r bundle.
MultiPoly push_projective(const MultiPoly& p, std::size_t var, int r, const std::vector<MultiPoly>& segre,
                          const RingPtr& target) {
  MultiPoly out(target);
  for (const auto& [m, coeff] : p.collect(var)) {
    const int k = m - (r - 1);
    if (k < 0 || k >= static_cast<int>(segre.size())) continue;
    out += coeff.embed(target) * segre[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace

Rational TowerSpace::integrate(const MultiPoly& c, std::vector<std::string>* trace) const {
  MultiPoly p = c.embed(ring_);
  for (std::size_t i = stages_.size(); i-- > 0;) {
    const Stage& st = stages_[i];
    const RingPtr& low = st.base_ring;
    const std::size_t off = low->size();
    if (st.kind == Stage::Kind::Projective) {
      // p lives in low + {zeta} after dropping the variables of higher stages.
      RingPtr here = low->extended({{st.generators[0], 1}});
      p = push_projective(p.embed(here), off, st.rank, st.segre, low);
      if (trace) trace->push_back("push P(" + to_string(st.bundle) + ") along " + st.generators[0] + ": " + p.to_string());
      continue;
    }
    // Grassmann stage through the flag bundle Fl(1,2;E) = P(E/L1) over P(E).
    RingPtr here = low->extended({{st.generators[0], 1}, {st.generators[1], 2}, {st.generators[2], 1}, {st.generators[3], 2}});
    const std::string f1n = "f1_" + std::to_string(i), f2n = "f2_" + std::to_string(i);
    RingPtr flag = low->extended({{f1n, 1}, {f2n, 1}});
    const MultiPoly f1 = MultiPoly::variable(flag, off), f2 = MultiPoly::variable(flag, off + 1);
    std::vector<MultiPoly> images;
    for (std::size_t j = 0; j < off; ++j) images.push_back(MultiPoly::variable(flag, j));
    MultiPoly ce1 = -st.chern[1].embed(flag), ce2 = st.chern[2].embed(flag);
    const MultiPoly e1 = f1 + f2, e2 = f1 * f2;
    images.push_back(e1);
    images.push_back(e2);
    images.push_back(ce1 - e1);
    images.push_back(ce2 - ce1 * e1 + e1 * e1 - e2);
    MultiPoly q = p.embed(here).map_to(flag, images) * f1;
    std::vector<MultiPoly> s_quot;
    for (std::size_t k = 0; k < st.segre.size() + 1; ++k) {
      MultiPoly s = k < st.segre.size() ? st.segre[k].embed(flag) : MultiPoly(flag);
      if (k > 0) s -= f1 * st.segre[k - 1].embed(flag);
      s_quot.push_back(s);
    }
    q = push_projective(q, off + 1, 3, s_quot, flag);
    std::vector<MultiPoly> s_e;
    for (const auto& s : st.segre) s_e.push_back(s.embed(flag));
    q = push_projective(q, off, 4, s_e, flag);
    p = q.embed(low);
    if (trace) trace->push_back("push G(2," + to_string(st.bundle) + ") via flag bundle: " + p.to_string());
  }
  Rational value(0);
  switch (base_kind_) {
    case BaseKind::Point: value = p.constant_term(); break;
    case BaseKind::Projective: value = p.coefficient(Exponents{base_a_}); break;
    case BaseKind::Product: value = p.coefficient(Exponents{base_a_, base_b_}); break;
  }
  if (trace) trace->push_back("integrate over the base: " + gmqh::to_string(value));
  return value;
}

std::size_t TowerSpace::top_degree_rank() const {
  auto sm = ideal_->standard_monomials();
  if (!sm) throw ModelInconsistency("Chow ring presentation is not finite dimensional");
  std::size_t count = 0;
  for (const auto& m : *sm) {
    const int d = ring_->weighted_degree(m);
    if (d > dim_) throw ModelInconsistency("Chow ring has classes above the dimension");
    if (d == dim_) ++count;
  }
  return count;
}

Rational TowerSpace::integrate_by_normal_form(const MultiPoly& c) const {
  auto sm = ideal_->standard_monomials();
  const Exponents* top = nullptr;
  for (const auto& m : *sm)
    if (ring_->weighted_degree(m) == dim_) top = &m;
  if (!top) throw ModelInconsistency("no top-degree class");
  const Rational norm = reduce(point_class()).coefficient(*top);
  if (is_zero(norm)) throw ModelInconsistency("point class reduces to zero");
  return reduce(c).coefficient(*top) / norm;
}

}  // namespace gmqh::tower
