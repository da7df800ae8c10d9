#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deltanil/errors.hpp"

namespace deltanil {

using Index = Eigen::Index;

/// Small integer grid indexed by block pairs (exponents of p).
using ExpGrid = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense integer matrix with entries reduced per block column.
using IntMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

inline bool grids_equal(const ExpGrid& a, const ExpGrid& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.array() == b.array()).all();
}

inline bool mats_equal(const IntMat& a, const IntMat& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.array() == b.array()).all();
}

/// A bounded abelian p-group given by its underlying type and ranks:
/// the direct sum over i of (Z/p^{n_i})^{r_i} with n_1 < ... < n_s.
///
/// Use validate() to construct; all accessors assume the invariants hold.
struct GroupType {
  std::uint64_t p = 0;
  std::vector<int> exponents;       // n_1 < n_2 < ... < n_s, all >= 1
  std::vector<std::int64_t> ranks;  // r_i >= 1, one per block

  Index blocks() const { return static_cast<Index>(exponents.size()); }
  int exponent(Index i) const { return exponents[static_cast<size_t>(i)]; }
  std::int64_t rank(Index i) const { return ranks[static_cast<size_t>(i)]; }
  int top_exponent() const { return exponents.back(); }

  std::int64_t total_rank() const;
  /// First row/column of block i inside an r x r matrix.
  std::int64_t block_offset(Index i) const;
  /// Block containing matrix position pos (0-based).
  Index block_of(std::int64_t pos) const;
  /// p^{n_j}, the modulus of every entry in block column j.
  std::uint64_t column_modulus(Index j) const;

  bool operator==(const GroupType&) const = default;
};

/// Checks all GroupType invariants and returns the value. Throws
/// ValidationError naming the offending index/value. Also rejects inputs with
/// p^{n_s} >= 2^63 since residue matrices store canonical 64-bit entries.
GroupType validate(std::uint64_t p, std::vector<int> exponents,
                   std::vector<std::int64_t> ranks);

/// Deterministic Miller-Rabin, valid for all 64-bit n.
bool is_prime_u64(std::uint64_t n);

/// p^e, throws on 64-bit overflow.
std::uint64_t pow_u64(std::uint64_t p, unsigned e);

/// Minimum gap of the exponent sequence; empty for one-block types.
std::optional<int> sigma(const GroupType& g);

/// Largest block index j (0-based) with n_j - n_{j-1} == sigma; empty for
/// one-block types. Reported for completeness, no formula consumes it.
std::optional<Index> top_gap_index(const GroupType& g);

/// Depth of cell (i,j) inside the radical: the number of p-power layers the
/// cell admits, and the saturation target of the upper function there.
/// n_{min(i,j)} off the diagonal, n_j - 1 on it. 0-based block indices.
int radical_depth(const GroupType& g, Index i, Index j);

ExpGrid radical_depth_grid(const GroupType& g);

enum class GuaranteeCase {
  kCase1,  // r_s > 1 and s >= 2 (extended to homocyclic r > 1)
  kCase2,  // minimum exponent gap >= 2
  kCase3,  // p >= 3
  kNotGuaranteed,
};

struct ApplicabilityResult {
  GuaranteeCase tag = GuaranteeCase::kNotGuaranteed;
  std::string notes;

  bool guaranteed() const { return tag != GuaranteeCase::kNotGuaranteed; }
};

const char* guarantee_case_name(GuaranteeCase tag);
GuaranteeCase guarantee_case_from_name(const std::string& name);

/// First matching guarantee condition, in order: (1) r_s > 1 and s >= 2,
/// (2) sigma >= 2, (3) p >= 3. One-block types with r > 1 report case (1)
/// as well; only p = 2 with r_s = 1 and minimum gap 1 stays unguaranteed.
ApplicabilityResult classify_applicability(const GroupType& g);

/// |Delta(G)| = p^E with E = sum over cells of r_i * r_j * depth(i,j).
/// `value` is present only when p^E fits in 64 bits; otherwise callers get
/// the symbolic base/exponent pair.
struct DeltaOrder {
  std::uint64_t base = 0;
  std::uint64_t exponent = 0;
  std::optional<std::uint64_t> value;

  bool exceeds(std::uint64_t guard) const {
    return !value.has_value() || *value > guard;
  }
  std::string str() const;
};

DeltaOrder delta_order(const GroupType& g);

}  // namespace deltanil
