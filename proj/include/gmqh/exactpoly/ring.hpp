#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gmqh {

struct Variable {
  std::string name;
  int degree = 1;  // complex grading; may be negative (t has degree -1)
  friend bool operator==(const Variable&, const Variable&) = default;
};

using Exponents = std::vector<int>;

// An ordered list of named graded variables. Polynomials over the same
// context may be combined; contexts compare structurally.
//
// Monomial order ("weighted degrevlex"): compare weighted degree first, then
// break ties reverse-lexicographically with the EARLIEST declared variable as
// the least significant one. Declaring base generators first therefore makes
// them cheap, and Groebner bases eliminate later (fibre) generators first.
class PolyRing {
 public:
  explicit PolyRing(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const std::vector<Variable>& variables() const { return vars_; }
  const Variable& variable(std::size_t i) const { return vars_.at(i); }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;  // throws if absent

  int weighted_degree(const Exponents& e) const;
  bool all_degrees_positive() const;

  // Strict "a < b" in weighted degrevlex.
  bool degrevlex_less(const Exponents& a, const Exponents& b) const;

  // New ring with extra variables appended; existing indices are preserved.
  std::shared_ptr<const PolyRing> extended(const std::vector<Variable>& extra) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<Variable> vars) {
  return std::make_shared<const PolyRing>(std::move(vars));
}

// Strict lexicographic order with index 0 most significant; a monomial
// well-order independent of the grading.
inline bool lex_less(const Exponents& a, const Exponents& b) { return a < b; }

}  // namespace gmqh
