#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gmqh/exactpoly/truncated.hpp"
#include "gmqh/quantum/quantum.hpp"

namespace gmqh::deform {

using TMatrix = Matrix<Trunc>;

struct TruncatedOperator {
  enum class Basis { Ambient6, Full28 };
  TMatrix matrix;
  Basis basis = Basis::Ambient6;
  std::size_t size() const { return matrix.rows(); }
};

// Hodge numbers of the 22 primitive slots of H^4. Defaults are those of a
// GM fourfold: h^{3,1} = h^{1,3} = 1, primitive h^{2,2} = 20.
struct HodgeModel {
  int h31 = 1;
  int h22_primitive = 20;
  int h13 = 1;

  int primitive_count() const { return h31 + h22_primitive + h13; }
  int total_dim() const { return static_cast<int>(gm::kAmbientDim) + primitive_count(); }
  // tag of every full-basis slot: ambient slot names, then "(3,1)", "(2,2)", "(1,3)".
  std::vector<std::string> slot_tags() const;
  // Cohomological degree (complex) of every full-basis slot.
  std::vector<int> slot_degrees() const;
  // Dimensions 1, 1, 24, 1, 1 of H^0, H^2, H^4, H^6, H^8 and h^{3,1} = h^{1,3}.
  bool consistent() const;
};

// Eu * (.) with Eu = 2h - t s2, to first order in t, on the ambient basis.
// The q^d t coefficient of column b is (2d - 1) times the q^d part of
// s2 * s_b, and the t q^0 part is -(s2 cup s_b). Throws Error if the table
// is not associative.
TruncatedOperator build_deformed_matrix(const gw::GWInvariants& inv, const qh::QAlgebra& table);
TMatrix reference_deformed_matrix();

// Entry (i,j) zero or homogeneous of degree deg_j - deg_i + 1 (deg t = -1).
bool check_operator_grading(const TMatrix& m, const std::vector<int>& slot_degrees);
// The t = 0 part.
qh::QMatrix order_zero(const TMatrix& m);
qh::QMatrix order_one(const TMatrix& m);

struct JordanPairReport {
  std::vector<Trunc> alpha, beta;                   // alpha and beta(t)
  std::vector<Trunc> residual_alpha, residual_beta;  // must vanish
  bool alpha_in_h_kernel = false;                    // at t = 0
  bool ok() const;
};

// Eu*alpha = -4qt alpha - t beta(t) and Eu*beta(t) = -4qt beta(t) mod t^2.
JordanPairReport verify_jordan_pair(const TruncatedOperator& K);

// Ambient block K, primitive block -4qt Id, no mixing (model axiom).
TruncatedOperator assemble_full_operator(const TruncatedOperator& K, const HodgeModel& model);

struct AtomStatistics {
  Trunc lambda0;
  std::size_t eigenspace_dim = 0;  // generalized
  int nu = 0, nu_prime = 0, gamma = 0, rho = 0;
  std::size_t kernel_dim = 0;  // of (K - lambda0) on E
  bool square_zero = false;    // (K - lambda0)^2 = 0 on E
  bool order_zero_semisimple = false;
  std::size_t size_two_blocks = 0;
  bool block_in_ambient = false;
  bool image_in_ambient = false;
  bool image_is_beta_line = false;
  bool kernel_is_primitive_plus_line = false;
  std::vector<RatFunc> image_vector;  // full-basis coordinates
};

// The eigenvalue cluster of K at t = 0 that contains the primitive block,
// analysed to first order in t. Throws ModelInconsistency unless its
// generalized eigenspace has dimension 24.
AtomStatistics atom_statistics(const TruncatedOperator& Kfull, const HodgeModel& model);

struct BranchReport {
  MultiPoly char_poly;  // in q, t, X, reduced mod t^2
  bool divisible_by_double_factor = false;  // by (X + 4qt)^2 = X^2 + 8qtX mod t^2
  MultiPoly cofactor_order_zero;            // in q, t, X with t = 0
  MultiPoly cofactor_order_one;
  bool cofactor_nonzero_at_lambda0 = false;
  bool cofactor_squarefree_at_t0 = false;
  bool ok() const { return divisible_by_double_factor && cofactor_nonzero_at_lambda0 && cofactor_squarefree_at_t0; }
};
BranchReport truncated_branches(const TruncatedOperator& K);
const RingPtr& qtX_ring();

struct CriterionReport {
  std::vector<std::pair<int, int>> profile;  // (multiplicity, number of eigenvalues)
  int zero_multiplicity = 0;
  int simple_nonzero = 0;
  int max_multiplicity = 0;
  bool h31_nonzero = false;
  bool satisfied = false;
  std::string profile_string() const;
};

// M = 2 x (h-matrix) on the Hodge classes = ambient classes.
CriterionReport irrationality_criterion(const qh::QMatrix& M, const HodgeModel& model);

}  // namespace gmqh::deform
