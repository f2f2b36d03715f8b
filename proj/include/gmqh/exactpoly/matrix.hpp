#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gmqh/exactpoly/poly.hpp"

namespace gmqh {

// Dense matrix over a commutative ring T. Entries of polynomial type carry
// their ring, so a zero prototype is supplied at construction.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
  const T& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c;
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }
  void set_column(std::size_t j, const std::vector<T>& c) {
    if (c.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    Matrix<U> out(rows_, cols_, f(zero_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  bool is_zero() const {
    using gmqh::is_zero;
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] + o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] - o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    using gmqh::is_zero;
    Matrix r(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (is_zero(b(k, j))) continue;
          r(i, j) = r(i, j) + aik * b(k, j);
        }
      }
    return r;
  }
  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> r(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix pow(unsigned k) const {
    if (!is_square()) throw std::invalid_argument("power of non-square matrix");
    Matrix r = identity(rows_, zero_, one_like());
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

 private:
  T one_like() const {
    if constexpr (std::is_constructible_v<T, RingPtr, Rational>) return T(zero_.ring(), Rational(1));
    else return T(1);
  }
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  T zero_;
  std::vector<T> data_;
};

template <class T>
using Vector = std::vector<T>;

// ---- fraction-free elimination over a polynomial ring ----

// Bareiss determinant; every division is exact in an integral domain.
template <class K>
Poly<K> determinant(Matrix<Poly<K>> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  const RingPtr& ring = m.zero().ring();
  if (n == 0) return Poly<K>(ring, K(1));
  Poly<K> prev(ring, K(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return Poly<K>(ring);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = Poly<K>(ring);
    }
    prev = m(k, k);
  }
  Poly<K> d = m(n - 1, n - 1);
  return negate ? -d : d;
}

// Rank over the fraction field of the coefficient ring, by fraction-free
// elimination with full pivot search.
template <class K>
std::size_t fraction_free_rank(Matrix<Poly<K>> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const RingPtr& ring = m.zero().ring();
  Poly<K> prev(ring, K(1));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(rank, j), m(p, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m(i, j) = exact_divide(m(i, j) * m(rank, c) - m(i, c) * m(rank, j), prev);
      m(i, c) = Poly<K>(ring);
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

// det(X*Id - M) in the ring of M extended by a fresh variable of degree 1.
MultiPoly char_poly(const Matrix<MultiPoly>& m, const std::string& var = "X");

// ---- linear algebra over a field ----

template <class K>
struct RowEchelon {
  Matrix<K> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <class K>
RowEchelon<K> rref(Matrix<K> m) {
  using gmqh::is_zero;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(p, j));
    const K inv = K(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) = inv * m(r, j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const K f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).pivots.size();
}

// Basis of the right kernel {v : m v = 0}.
template <class K>
std::vector<std::vector<K>> kernel(const Matrix<K>& m) {
  auto [r, pivots] = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(cols, K(0));
    v[f] = K(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of m x = b, or nullopt if the system is inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& m, const std::vector<K>& b) {
  using gmqh::is_zero;
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix<K> aug(m.rows(), m.cols() + 1, K(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<K> x(m.cols(), K(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, m.cols());
  return x;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n, K(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K(1);
  }
  auto [r, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<K> inv(n, n, K(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

// Rank of a polynomial matrix over the fraction field, with the independent
// check that one random rational specialization has rank <= the symbolic rank.
struct RankReport {
  std::size_t symbolic_rank = 0;
  std::size_t specialized_rank = 0;
  std::vector<Rational> point;
  bool consistent = false;
};

RankReport rank_over_function_field(const Matrix<MultiPoly>& m, std::uint64_t seed = 1);

}  // namespace gmqh
