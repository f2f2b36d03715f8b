#include "gmqh/exactpoly/matrix.hpp"

namespace gmqh {

MultiPoly char_poly(const Matrix<MultiPoly>& m, const std::string& var) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const RingPtr& base = m.zero().ring();
  if (base->find(var)) throw std::invalid_argument("variable " + var + " already in use");
  RingPtr ring = base->extended({Variable{var, 1}});
  const MultiPoly x = MultiPoly::variable(ring, base->size());
  Matrix<MultiPoly> a(m.rows(), m.cols(), MultiPoly(ring));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      MultiPoly e = -m(i, j).embed(ring);
      if (i == j) e += x;
      a(i, j) = std::move(e);
    }
  return determinant(std::move(a));
}

RankReport rank_over_function_field(const Matrix<MultiPoly>& m, std::uint64_t seed) {
  RankReport report;
  report.symbolic_rank = fraction_free_rank(m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-97, 97);
  std::uniform_int_distribution<long> den(1, 31);
  const std::size_t nvars = m.zero().ring()->size();
  for (std::size_t i = 0; i < nvars; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    report.point.push_back(r);
  }
  Matrix<Rational> v = m.map([&](const MultiPoly& p) { return p.evaluate(report.point); });
  report.specialized_rank = rank(v);
  report.consistent = report.specialized_rank <= report.symbolic_rank;
  return report;
}

}  // namespace gmqh
