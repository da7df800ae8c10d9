#pragma once

#include <optional>
#include <vector>

#include "deltanil/group_type.hpp"

namespace deltanil {

/// Memoized table of the upper annihilating function alpha(i,j,t).
///
/// Slice t holds the exponent drop of the t-th annihilator ideal relative to
/// the zero ideal: the ideal at step t has cell exponents n_j - alpha(i,j,t).
/// Values are clamped to the radical depth; the table is built bottom-up in t
/// until every cell saturates and is immutable afterwards.
class AlphaTable {
 public:
  explicit AlphaTable(GroupType g);

  const GroupType& group() const { return g_; }
  const ExpGrid& depth() const { return depth_; }

  /// Least t with slice(t) == radical depth grid; 0 when the radical is the
  /// zero ideal.
  int saturation_step() const { return saturation_; }

  /// alpha(i,j,t), defined for every t >= 0 (constant beyond saturation).
  int value(Index i, Index j, int t) const;

  /// Grid at step t, 0 <= t <= saturation_step().
  const ExpGrid& slice(int t) const { return slices_[static_cast<size_t>(t)]; }

  /// All stored grids, t = 0 .. saturation_step().
  const std::vector<ExpGrid>& slices() const { return slices_; }

 private:
  GroupType g_;
  ExpGrid depth_;
  std::vector<ExpGrid> slices_;
  int saturation_ = 0;
};

/// Convenience wrapper around AlphaTable for one-off evaluations.
int alpha(const GroupType& g, Index i, Index j, int t);

/// Closed form when the minimum exponent gap is >= 2:
/// alpha(i,j,t) = max(0, t + (i+1) + (j+1) - 2s), clamped to the depth.
/// Block indices are 0-based here; the formula works on 1-based ones.
int closed_form_case1(const GroupType& g, Index i, Index j, int t);

/// Closed form when the minimum gap is 1 and the top gap n_s - n_{s-1} is 1:
/// alpha(i,j,t) = floor((t + (i+1) + (j+1) - 2s + 1) / 2), negatives to 0,
/// clamped to the depth.
int closed_form_case2(const GroupType& g, Index i, Index j, int t);

struct AnnihilatingViolation {
  int condition = 0;  // 1..6
  Index i = 0;
  Index j = 0;
  int t = 0;
};

/// Checks the six conditions every annihilating function satisfies, against
/// the table steps[0..L-1] holding the grids for t = 1..L (step 0 is the
/// implicit zero grid). Returns the first violation in scan order
/// (t, then i, j, then condition number), or nullopt when the table passes.
/// Conditions whose neighbor index falls outside [0, s) are skipped; the
/// monotonicity-in-t legs of conditions (3) and (4) apply everywhere.
std::optional<AnnihilatingViolation> check_annihilating_function(
    const GroupType& g, const std::vector<ExpGrid>& steps);

}  // namespace deltanil
