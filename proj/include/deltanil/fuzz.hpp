#pragma once

#include <cstdint>
#include <ostream>
#include <random>

#include "deltanil/group_type.hpp"

namespace deltanil {

struct FuzzLimits {
  int max_blocks = 6;
  int max_exponent = 12;
  std::int64_t max_rank = 3;
};

using Rng = std::mt19937_64;

GroupType random_group_type(Rng& rng, const FuzzLimits& lim = {});

/// Random type with minimum exponent gap >= 2 (case-1 closed form territory).
GroupType random_group_type_min_gap2(Rng& rng, const FuzzLimits& lim = {});

/// Random type with minimum gap 1 and top gap 1 (case-2 closed form).
GroupType random_group_type_case2(Rng& rng, const FuzzLimits& lim = {});

struct CheckOutcome {
  int checks = 0;
  int failures = 0;

  bool ok() const { return failures == 0; }
};

/// The seeded invariant suite behind the `check` subcommand. Prints one line
/// per invariant family to `log`; `count` scales the number of fuzzed types.
CheckOutcome run_check_suite(std::uint64_t seed, int count, std::ostream& log);

}  // namespace deltanil
