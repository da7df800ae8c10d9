#pragma once

#include <cstdint>
#include <vector>

#include "deltanil/residue.hpp"

namespace deltanil {

inline constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 13;

/// Delta(G) = 1 + J as an explicit list of residue matrices, in a fixed
/// odometer order over the free digits of the radical shape. Because every
/// element decomposes uniquely into digits, membership lookup is arithmetic
/// (no hashing).
struct EnumeratedGroup {
  GroupType g;
  std::vector<IntMat> elements;
  std::vector<std::int32_t> inverse;  // index of each element's inverse
  std::int32_t identity = 0;

  struct Digit {
    Index row = 0;
    Index col = 0;
    std::uint64_t step = 0;    // p^{beta_J} at this position
    std::uint64_t count = 0;   // p^{depth} choices
    std::uint64_t stride = 0;  // mixed-radix weight in the element index
  };
  std::vector<Digit> digits;

  std::int64_t size() const { return static_cast<std::int64_t>(elements.size()); }
  /// Index of m in `elements`, or -1 when m is not in Delta(G).
  std::int32_t index_of(const IntMat& m) const;
};

/// Materializes 1 + J. Throws OrderExceedsGuard when |Delta(G)| > max_order.
EnumeratedGroup enumerate_delta(const GroupType& g, std::uint64_t max_order);

/// Upper central series of the enumerated group, from the group axioms alone:
/// membership[t] flags the t-th hypercenter, membership[0] = {1}, and cls is
/// the first t with everything flagged (0 for the trivial group).
struct UcsChain {
  std::vector<std::vector<char>> membership;
  int cls = 0;
};

UcsChain ucs_oracle(const EnumeratedGroup& grp);

/// Brute-force annihilator step on explicit element sets:
/// {a in J : aJ and Ja inside prev}, returned as an exponent matrix. Throws
/// NotExponentShaped if the set is not exactly an exponent-matrix ideal, and
/// OrderExceedsGuard when |J| > max_order.
ExponentMatrix ann_oracle(const GroupType& g, const ExponentMatrix& prev,
                          std::uint64_t max_order);

/// ann_oracle iterated from the zero ideal to saturation.
std::vector<ExponentMatrix> uas_via_ann_oracle(const GroupType& g,
                                               std::uint64_t max_order);

struct StepComparison {
  int t = 0;
  std::int64_t oracle_size = 0;
  std::int64_t predicted_size = 0;
  bool equal = false;
  bool predicted_subset_of_oracle = false;
};

struct OracleReport {
  GroupType g;
  ApplicabilityResult applicability;
  DeltaOrder order;
  int oracle_class = 0;
  int predicted_class = 0;
  int uas_len = 0;
  std::vector<StepComparison> steps;
  bool agreement = false;       // classes equal and every step set-equal
  bool bound_ok = false;        // oracle class <= uas length (unconditional)
  bool subsets_ok = false;      // predicted Gamma_t inside oracle Z_t for all t
  bool abelian = false;         // oracle found Delta abelian (class <= 1)
};

/// Enumerates Delta(G), computes its genuine upper central series, and diffs
/// it step by step against the predicted hypercenter descriptions.
OracleReport compare_report(const GroupType& g, std::uint64_t max_order);

}  // namespace deltanil
