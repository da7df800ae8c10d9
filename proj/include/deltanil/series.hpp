#pragma once

#include <optional>
#include <vector>

#include "deltanil/alpha.hpp"
#include "deltanil/group_type.hpp"

namespace deltanil {

/// Two-sided ideal of the endomorphism ring in exponent form: the ideal whose
/// cell (i,j) is p^{beta(i,j)} times the full cell, with beta(i,j) in
/// [0, n_j]. beta(i,j) == n_j encodes the zero cell, beta(i,j) == 0 the full
/// one.
struct ExponentMatrix {
  GroupType g;
  ExpGrid beta;

  bool operator==(const ExponentMatrix& other) const {
    return g == other.g && grids_equal(beta, other.beta);
  }
};

/// The Jacobson radical: beta(i,j) = n_j - n_{min(i,j)} + [i == j].
ExponentMatrix radical_shape(const GroupType& g);

/// All cells zero (beta = n_j).
ExponentMatrix zero_ideal(const GroupType& g);

/// Cellwise product shape: result(i,j) = min(n_j, min_k a(i,k) + b(k,j)).
ExponentMatrix ideal_product(const ExponentMatrix& a, const ExponentMatrix& b);

/// True iff outer contains inner, i.e. outer.beta <= inner.beta cellwise.
bool ideal_contains(const ExponentMatrix& outer, const ExponentMatrix& inner);

/// The largest ideal A inside the radical J with A*J and J*A inside prev.
/// Throws NotContainedInRadical unless prev is contained in J.
ExponentMatrix annihilator_step(const GroupType& g, const ExponentMatrix& prev);

/// The upper annihilating sequence J_1 .. J_l read off the alpha table:
/// beta_t(i,j) = n_j - alpha(i,j,t). Empty when the radical is zero.
std::vector<ExponentMatrix> uas_via_alpha(const GroupType& g);

/// The same sequence by fixed-point iteration of annihilator_step from the
/// zero ideal. Independent of the alpha recursion; the two must agree.
std::vector<ExponentMatrix> uas_via_annihilators(const GroupType& g);

/// Least t with J_t = J; 0 when the radical is the zero ideal.
int uas_length(const GroupType& g);

/// Least t at which every cell except (s,s) is saturated. One-block types
/// have an empty constraint set: 1 when the radical is nonzero, else 0.
int y_of_g(const GroupType& g);

struct NilpotencyClass {
  int value = 0;
  ApplicabilityResult applicability;
  /// False means the value is predicted only (unguaranteed p = 2 corner).
  bool guaranteed = false;
};

/// Nilpotency class of Delta(G): uas_length when r_s >= 2, y_of_g when
/// r_s = 1. Carries the applicability tag of the input.
NilpotencyClass nilpotency_class(const GroupType& g);

/// Congruence rules cutting out the t-th hypercenter from Delta(G) = 1 + J.
/// For C + 1 in Delta(G), with E(i,j) = n_j - alpha(i,j,t):
///   (a) entries of cell (i,j), i != j, are 0 mod p^{E(i,j)};
///   (b) off-diagonal entries of cell (i,i) are 0 mod p^{E(i,i)};
///   (c) each diagonal entry of block i is congruent to the last diagonal
///       entry of block s, mod p^{E(i,i)}.
struct HypercenterDescription {
  int t = 0;
  ExpGrid alpha_slice;  // s x s
  ExpGrid cell_exp;     // s x s, n_j - alpha(i,j,t)

  int tie_exponent(Index block) const {
    return cell_exp(block, block);
  }
};

/// Throws StepOutOfRange unless 1 <= t <= nilpotency class.
HypercenterDescription hypercenter_description(const GroupType& g, int t);

struct SeriesReport {
  GroupType g;
  ApplicabilityResult applicability;
  std::optional<int> sigma_value;
  std::optional<Index> ell;  // top gap index, 0-based
  DeltaOrder order;
  std::vector<ExponentMatrix> uas;
  int length = 0;       // l(J)
  int y = 0;            // y(G)
  int cls = 0;          // nilpotency class
  bool guaranteed = false;
  std::vector<HypercenterDescription> ucs;  // t = 1 .. cls
};

bool operator==(const SeriesReport& a, const SeriesReport& b);

/// Full pipeline: both uas routes (asserted equal), lengths, class, and the
/// hypercenter description of every step. Throws InternalMismatch if the
/// alpha route and the annihilator iteration ever disagree.
SeriesReport ucs_report(const GroupType& g);

}  // namespace deltanil
