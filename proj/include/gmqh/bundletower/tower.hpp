#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gmqh/bundletower/sheaf.hpp"
#include "gmqh/exactpoly/ideal.hpp"

namespace gmqh::tower {

struct Stage {
  enum class Kind { Projective, Grassmann2 };
  Kind kind;
  Sheaf bundle;
  int rank = 0;
  std::vector<std::string> generators;  // {zeta} or {H, a, Hp, ap}
  RingPtr base_ring;                    // ring of the space the stage sits over
  std::vector<MultiPoly> chern;         // c_0..c_rank of the bundle, in base_ring
  std::vector<MultiPoly> segre;         // s_0..s_{dim}, in base_ring
};

// A base (point, P^n or P^a x P^b) with a stack of projective and
// two-plane Grassmann bundles. The Chow ring is presented by the generators
// of all stages and a reduced Groebner basis of the relations.
class TowerSpace {
 public:
  static TowerSpace point();
  static TowerSpace projective_space(int n, const std::string& var = "h");
  static TowerSpace product_projective(int a, int b, const std::string& var_a = "h", const std::string& var_b = "H");
  // G(2,4) as a Grassmann bundle of O^4 over a point.
  static TowerSpace grassmannian_24(const std::vector<std::string>& names = {"H", "a", "Hp", "ap"});

  int dim() const { return dim_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<Stage>& stages() const { return stages_; }
  const std::vector<MultiPoly>& relations() const { return relations_; }
  const PolyIdeal<Rational>& ideal() const { return *ideal_; }
  std::string description() const;

  MultiPoly generator(const std::string& name) const { return MultiPoly::variable(ring_, name); }
  MultiPoly constant(const Rational& c) const { return MultiPoly(ring_, c); }
  MultiPoly reduce(const MultiPoly& p) const;

  // Base point times zeta^{r-1} per projective stage and a^2 per Grassmann stage.
  MultiPoly point_class() const;

  // Total Chern / Segre class, homogeneous components 0..dim, in normal form.
  std::vector<MultiPoly> chern(const Sheaf& e) const;
  std::vector<MultiPoly> segre(const Sheaf& e) const;
  MultiPoly chern_class(const Sheaf& e, int k) const;
  MultiPoly segre_class(const Sheaf& e, int k) const;
  int rank(const Sheaf& e) const;

  // Pushforward to a point, stage by stage. Appends one line per stage to
  // `trace` if given.
  Rational integrate(const MultiPoly& c, std::vector<std::string>* trace = nullptr) const;
  // Second route: coefficient of the top standard monomial after reduction,
  // normalized by the point class.
  Rational integrate_by_normal_form(const MultiPoly& c) const;

  // Standard monomials of degree dim: must be exactly one.
  std::size_t top_degree_rank() const;

  friend TowerSpace build_projective_bundle(const TowerSpace& base, const Sheaf& e, const std::string& var);
  friend TowerSpace build_grassmann2_bundle(const TowerSpace& base, const Sheaf& e,
                                            const std::vector<std::string>& names);

 private:
  enum class BaseKind { Point, Projective, Product };
  TowerSpace() = default;
  void finalize();
  std::vector<MultiPoly> total_chern(const Sheaf& e) const;  // unreduced, truncated at dim
  MultiPoly embed(const MultiPoly& p) const { return p.embed(ring_); }

  BaseKind base_kind_ = BaseKind::Point;
  int base_a_ = 0, base_b_ = 0;
  RingPtr ring_;
  int dim_ = 0;
  std::vector<Stage> stages_;
  std::vector<MultiPoly> relations_;
  std::shared_ptr<const PolyIdeal<Rational>> ideal_;
};

TowerSpace build_projective_bundle(const TowerSpace& base, const Sheaf& e, const std::string& var);
TowerSpace build_grassmann2_bundle(const TowerSpace& base, const Sheaf& e,
                                   const std::vector<std::string>& names = {"H", "a", "Hp", "ap"});

// Helpers on graded total classes (vectors of homogeneous components).
std::vector<MultiPoly> components(const MultiPoly& total, int max_degree);
MultiPoly total(const std::vector<MultiPoly>& parts);
// Formal inverse of a total class with constant term 1, truncated at max_degree.
std::vector<MultiPoly> series_inverse(const std::vector<MultiPoly>& c, int max_degree);

}  // namespace gmqh::tower
