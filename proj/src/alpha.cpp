#include "deltanil/alpha.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace deltanil {

AlphaTable::AlphaTable(GroupType g) : g_(std::move(g)) {
  const Index s = g_.blocks();
  depth_ = radical_depth_grid(g_);
  slices_.push_back(ExpGrid::Zero(s, s));
  if (grids_equal(slices_.back(), depth_)) {
    saturation_ = 0;  // zero radical, type (1)
    return;
  }

  ExpGrid first = ExpGrid::Zero(s, s);
  first(s - 1, s - 1) = std::min(1, depth_(s - 1, s - 1));
  slices_.push_back(first);

  const int cap =
      2 * std::accumulate(g_.exponents.begin(), g_.exponents.end(), 0) + 2;
  while (!grids_equal(slices_.back(), depth_)) {
    if (static_cast<int>(slices_.size()) > cap) {
      throw InternalMismatch("alpha recursion failed to saturate");
    }
    const ExpGrid& prev = slices_.back();
    ExpGrid next(s, s);
    for (Index i = 0; i < s; ++i) {
      for (Index j = 0; j < s; ++j) {
        int best = prev(i, j) + 1;
        if (j > 0) {
          best = std::min(best, g_.exponent(j) - g_.exponent(j - 1) + prev(i, j - 1));
        }
        if (i > 0) {
          best = std::min(best, g_.exponent(i) - g_.exponent(i - 1) + prev(i - 1, j));
        }
        if (i + 1 < s) best = std::min(best, prev(i + 1, j));
        if (j + 1 < s) best = std::min(best, prev(i, j + 1));
        next(i, j) = std::min(best, depth_(i, j));
        if (next(i, j) < prev(i, j)) {
          throw InternalMismatch("alpha recursion lost monotonicity");
        }
      }
    }
    slices_.push_back(std::move(next));
  }
  saturation_ = static_cast<int>(slices_.size()) - 1;
}

int AlphaTable::value(Index i, Index j, int t) const {
  if (t < 0) throw std::out_of_range("alpha step must be non-negative");
  if (t > saturation_) return depth_(i, j);
  return slices_[static_cast<size_t>(t)](i, j);
}

int alpha(const GroupType& g, Index i, Index j, int t) {
  return AlphaTable(g).value(i, j, t);
}

namespace {

int bracket_nonneg(int x) { return x < 0 ? 0 : x; }

}  // namespace

int closed_form_case1(const GroupType& g, Index i, Index j, int t) {
  auto gap = sigma(g);
  if (!gap || *gap < 2) {
    throw CaseNotApplicable("case 1 needs minimum exponent gap >= 2");
  }
  const int s = static_cast<int>(g.blocks());
  const int v = bracket_nonneg(t + static_cast<int>(i + 1) +
                               static_cast<int>(j + 1) - 2 * s);
  return std::min(v, radical_depth(g, i, j));
}

int closed_form_case2(const GroupType& g, Index i, Index j, int t) {
  auto gap = sigma(g);
  const Index s = g.blocks();
  if (!gap || *gap != 1 ||
      g.exponent(s - 1) - g.exponent(s - 2) != 1) {
    throw CaseNotApplicable(
        "case 2 needs minimum gap 1 with top gap n_s - n_{s-1} = 1");
  }
  const int num = t + static_cast<int>(i + 1) + static_cast<int>(j + 1) -
                  2 * static_cast<int>(s) + 1;
  const int v = num < 0 ? 0 : num / 2;
  return std::min(v, radical_depth(g, i, j));
}

std::optional<AnnihilatingViolation> check_annihilating_function(
    const GroupType& g, const std::vector<ExpGrid>& steps) {
  const Index s = g.blocks();
  const ExpGrid zero = ExpGrid::Zero(s, s);
  auto at = [&](int t) -> const ExpGrid& {
    return t == 0 ? zero : steps[static_cast<size_t>(t - 1)];
  };
  const int L = static_cast<int>(steps.size());
  for (int t = 1; t <= L; ++t) {
    const ExpGrid& f = at(t);
    const ExpGrid& fp = at(t - 1);
    for (Index i = 0; i < s; ++i) {
      for (Index j = 0; j < s; ++j) {
        if (t == 1) {
          const int want = (i == s - 1 && j == s - 1) ? 1 : 0;
          if (f(i, j) != want) return AnnihilatingViolation{1, i, j, t};
        }
        if (f(i, j) > fp(i, j) + 1) return AnnihilatingViolation{2, i, j, t};
        if (i > 0 && f(i - 1, j) > fp(i, j)) {
          return AnnihilatingViolation{3, i, j, t};
        }
        if (fp(i, j) > f(i, j)) return AnnihilatingViolation{3, i, j, t};
        if (j > 0 && f(i, j - 1) > fp(i, j)) {
          return AnnihilatingViolation{4, i, j, t};
        }
        if (i + 1 < s &&
            f(i + 1, j) > g.exponent(i + 1) - g.exponent(i) + fp(i, j)) {
          return AnnihilatingViolation{5, i, j, t};
        }
        if (j + 1 < s &&
            f(i, j + 1) > g.exponent(j + 1) - g.exponent(j) + fp(i, j)) {
          return AnnihilatingViolation{6, i, j, t};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace deltanil
