#pragma once

#include <map>
#include <string>
#include <vector>

#include "gmqh/exactpoly/rational.hpp"

namespace gmqh::schubert {

// Two-row partition (l1 >= l2 >= 0) indexing a Schubert class of G(2,n).
struct Partition2 {
  int l1 = 0;
  int l2 = 0;

  int degree() const { return l1 + l2; }
  bool fits(int n) const { return l2 >= 0 && l1 >= l2 && l1 <= n - 2; }
  // Box complement in the 2 x (n-2) rectangle.
  Partition2 complement(int n) const { return {n - 2 - l2, n - 2 - l1}; }
  std::string name() const;

  friend auto operator<=>(const Partition2&, const Partition2&) = default;
};

// All partitions fitting G(2,n), ordered by degree, then by l1 descending.
std::vector<Partition2> basis(int n);

// Rational combination of Schubert classes on G(2,n), n in {4, 5}.
class SchubertClass {
 public:
  explicit SchubertClass(int n);
  static SchubertClass sigma(int n, int l1, int l2 = 0);
  static SchubertClass point(int n) { return sigma(n, n - 2, n - 2); }

  int n() const { return n_; }
  const std::map<Partition2, Rational>& coeffs() const { return coeffs_; }
  Rational coefficient(const Partition2& p) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(const Partition2& p, const Rational& c);

  SchubertClass& operator+=(const SchubertClass& o);
  friend SchubertClass operator+(SchubertClass a, const SchubertClass& b) { return a += b; }
  friend SchubertClass operator-(SchubertClass a, const SchubertClass& b);
  friend SchubertClass operator*(const Rational& s, const SchubertClass& a);
  friend bool operator==(const SchubertClass& a, const SchubertClass& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  int n_;
  std::map<Partition2, Rational> coeffs_;
};

// sigma_1^k * s by iterated Pieri; terms leaving the box are dropped.
SchubertClass pieri(int k, const SchubertClass& s);

// Special Pieri: sigma_k * s.
SchubertClass special_pieri(int k, const SchubertClass& s);

// Product through Giambelli, sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1},
// reduced to special Pieri products. Throws std::invalid_argument on mismatched n.
SchubertClass product(const SchubertClass& a, const SchubertClass& b);

// Coefficient of the point class sigma_{n-2,n-2}.
Rational integrate_grassmannian(const SchubertClass& a);

}  // namespace gmqh::schubert
