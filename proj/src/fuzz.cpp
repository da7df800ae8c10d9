#include "deltanil/fuzz.hpp"

#include <algorithm>
#include <sstream>

#include "deltanil/alpha.hpp"
#include "deltanil/series.hpp"

namespace deltanil {

namespace {

const std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13};

std::uint64_t pick_prime(Rng& rng) {
  return kPrimes[rng() % (sizeof(kPrimes) / sizeof(kPrimes[0]))];
}

std::vector<std::int64_t> pick_ranks(Rng& rng, size_t s, std::int64_t max_rank) {
  std::vector<std::int64_t> ranks(s);
  for (auto& r : ranks) r = 1 + static_cast<std::int64_t>(rng() % max_rank);
  return ranks;
}

std::vector<int> increasing_exponents(Rng& rng, int s, int max_exponent,
                                      int min_gap) {
  // n_1 >= 1 and s-1 gaps of at least min_gap, fitted under max_exponent.
  std::vector<int> exps(static_cast<size_t>(s));
  while (true) {
    int cur = 1 + static_cast<int>(rng() % 3);
    bool ok = true;
    for (int k = 0; k < s; ++k) {
      if (k > 0) cur += min_gap + static_cast<int>(rng() % 3);
      if (cur > max_exponent) {
        ok = false;
        break;
      }
      exps[static_cast<size_t>(k)] = cur;
    }
    if (ok) return exps;
  }
}

}  // namespace

GroupType random_group_type(Rng& rng, const FuzzLimits& lim) {
  const int s = 1 + static_cast<int>(rng() % lim.max_blocks);
  return validate(pick_prime(rng),
                  increasing_exponents(rng, s, lim.max_exponent, 1),
                  pick_ranks(rng, static_cast<size_t>(s), lim.max_rank));
}

GroupType random_group_type_min_gap2(Rng& rng, const FuzzLimits& lim) {
  const int s = 2 + static_cast<int>(rng() % std::min(lim.max_blocks - 1, 5));
  return validate(pick_prime(rng),
                  increasing_exponents(rng, s, lim.max_exponent, 2),
                  pick_ranks(rng, static_cast<size_t>(s), lim.max_rank));
}

GroupType random_group_type_case2(Rng& rng, const FuzzLimits& lim) {
  while (true) {
    const int s = 2 + static_cast<int>(rng() % (lim.max_blocks - 1));
    auto exps = increasing_exponents(rng, s, lim.max_exponent - 1, 1);
    // Force a top gap of exactly 1; sigma = 1 follows.
    exps.push_back(exps.back() + 1);
    if (exps.back() > lim.max_exponent) continue;
    return validate(pick_prime(rng), std::move(exps),
                    pick_ranks(rng, static_cast<size_t>(s + 1), lim.max_rank));
  }
}

namespace {

struct Suite {
  std::ostream& log;
  int checks = 0;
  int failures = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      log << "FAIL " << what << "\n";
    }
  }

  void section(const std::string& name, bool ok) {
    log << (ok ? "ok   " : "FAIL ") << name << "\n";
  }
};

std::string describe(const GroupType& g) {
  std::ostringstream os;
  os << "p=" << g.p << " type=(";
  for (size_t k = 0; k < g.exponents.size(); ++k) {
    if (k) os << ",";
    os << g.exponents[k];
  }
  os << ")";
  return os.str();
}

bool uas_routes_agree(const GroupType& g) {
  const auto via_alpha = uas_via_alpha(g);
  const auto direct = uas_via_annihilators(g);
  if (via_alpha.size() != direct.size()) return false;
  for (size_t k = 0; k < direct.size(); ++k) {
    if (!(via_alpha[k] == direct[k])) return false;
  }
  return true;
}

bool alpha_properties_hold(const GroupType& g) {
  AlphaTable table(g);
  const Index s = g.blocks();
  const int top = table.saturation_step();
  for (int t = 0; t <= top; ++t) {
    const ExpGrid& f = table.slice(t);
    for (Index i = 0; i < s; ++i) {
      for (Index j = 0; j < s; ++j) {
        if (f(i, j) < 0 || f(i, j) > table.depth()(i, j)) return false;
        // Monotone toward the last block, in both indices. The printed
        // statement has these reversed, which already fails at t = 1: the
        // initial grid is zero except at (s,s).
        if (i + 1 < s && f(i, j) > f(i + 1, j)) return false;
        if (j + 1 < s && f(i, j) > f(i, j + 1)) return false;
        if (t > 0) {
          const int prev = table.value(i, j, t - 1);
          if (prev > f(i, j) || f(i, j) > prev + 1) return false;
        }
        if (t == 0 && f(i, j) != 0) return false;
      }
    }
    // Diagonal residue exponents grow toward block s.
    for (Index j = 0; j + 1 < s; ++j) {
      if (g.exponent(j) - f(j, j) > g.exponent(s - 1) - f(s - 1, s - 1)) {
        return false;
      }
    }
  }
  if (top >= 1) {
    const ExpGrid& f1 = table.slice(1);
    for (Index i = 0; i < s; ++i) {
      for (Index j = 0; j < s; ++j) {
        const int want = (i == s - 1 && j == s - 1) ? 1 : 0;
        if (f1(i, j) != want) return false;
      }
    }
  }
  return true;
}

bool closed_form_matches(const GroupType& g, int which) {
  AlphaTable table(g);
  const Index s = g.blocks();
  for (int t = 0; t <= table.saturation_step(); ++t) {
    for (Index i = 0; i < s; ++i) {
      for (Index j = 0; j < s; ++j) {
        const int direct = which == 1 ? closed_form_case1(g, i, j, t)
                                      : closed_form_case2(g, i, j, t);
        if (direct != table.value(i, j, t)) return false;
      }
    }
  }
  return true;
}

bool chain_ascends(const GroupType& g) {
  const auto seq = uas_via_alpha(g);
  const ExponentMatrix rad = radical_shape(g);
  ExponentMatrix prev = zero_ideal(g);
  for (const auto& cur : seq) {
    if (!ideal_contains(cur, prev)) return false;
    if (cur == prev) return false;
    prev = cur;
  }
  if (!seq.empty() && !(seq.back() == rad)) return false;
  if (seq.empty() && !(rad == zero_ideal(g))) return false;
  return y_of_g(g) > uas_length(g) ? false : true;
}

struct Perturbed {
  std::vector<ExpGrid> steps;
  Index i = 0;
  Index j = 0;
  int t = 1;
};

/// Perturbations guaranteed to break one of the six conditions: a +2 jump
/// anywhere, or a broken step-1 grid. (A -1 nudge can land on another valid
/// annihilating function, so it is not used.)
Perturbed perturb_table(Rng& rng, const GroupType& g, const AlphaTable& table) {
  Perturbed out;
  const int top = table.saturation_step();
  for (int t = 1; t <= top; ++t) out.steps.push_back(table.slice(t));
  const Index s = g.blocks();
  out.i = static_cast<Index>(rng() % s);
  out.j = static_cast<Index>(rng() % s);
  out.t = 1 + static_cast<int>(rng() % top);
  switch (rng() % 3) {
    case 0:
      out.steps[static_cast<size_t>(out.t - 1)](out.i, out.j) += 2;
      break;
    case 1:
      out.t = 1;
      out.i = out.j = s - 1;
      out.steps[0](out.i, out.j) = 0;
      break;
    default:
      out.t = 1;
      if (s == 1) {
        out.steps[0](0, 0) = 0;  // same as case 1 for one block
        out.i = out.j = 0;
      } else {
        out.i = static_cast<Index>(rng() % (s - 1));  // anything but (s,s)
        out.j = static_cast<Index>(rng() % s);
        out.steps[0](out.i, out.j) = 1;
      }
      break;
  }
  return out;
}

/// Re-evaluates the cited condition directly, so a bogus citation fails.
bool violation_is_genuine(const GroupType& g, const std::vector<ExpGrid>& steps,
                          const AnnihilatingViolation& v) {
  const Index s = g.blocks();
  const ExpGrid zero = ExpGrid::Zero(s, s);
  const ExpGrid& f = steps[static_cast<size_t>(v.t - 1)];
  const ExpGrid& fp = v.t == 1 ? zero : steps[static_cast<size_t>(v.t - 2)];
  switch (v.condition) {
    case 1: {
      const int want = (v.i == s - 1 && v.j == s - 1) ? 1 : 0;
      return v.t == 1 && f(v.i, v.j) != want;
    }
    case 2:
      return f(v.i, v.j) > fp(v.i, v.j) + 1;
    case 3:
      return (v.i > 0 && f(v.i - 1, v.j) > fp(v.i, v.j)) ||
             fp(v.i, v.j) > f(v.i, v.j);
    case 4:
      return v.j > 0 && f(v.i, v.j - 1) > fp(v.i, v.j);
    case 5:
      return v.i + 1 < s &&
             f(v.i + 1, v.j) > g.exponent(v.i + 1) - g.exponent(v.i) + fp(v.i, v.j);
    case 6:
      return v.j + 1 < s &&
             f(v.i, v.j + 1) > g.exponent(v.j + 1) - g.exponent(v.j) + fp(v.i, v.j);
    default:
      return false;
  }
}

}  // namespace

CheckOutcome run_check_suite(std::uint64_t seed, int count, std::ostream& log) {
  Rng rng(seed);
  Suite suite{log};
  const FuzzLimits lim;

  {
    bool ok = true;
    for (int k = 0; k < count; ++k) {
      const GroupType g = random_group_type(rng, lim);
      if (!uas_routes_agree(g)) {
        ok = false;
        suite.expect(false, "uas route equivalence: " + describe(g));
      }
    }
    suite.expect(ok, "uas route equivalence");
    suite.section("uas route equivalence (" + std::to_string(count) + " types)",
                  ok);
  }

  {
    bool ok = true;
    for (int k = 0; k < count; ++k) {
      const GroupType g = random_group_type(rng, lim);
      if (!alpha_properties_hold(g)) {
        ok = false;
        suite.expect(false, "alpha monotonicity: " + describe(g));
      }
      const AlphaTable table(g);
      const std::vector<ExpGrid> steps(table.slices().begin() + 1,
                                       table.slices().end());
      if (check_annihilating_function(g, steps).has_value()) {
        ok = false;
        suite.expect(false, "alpha rejected as annihilating fn: " + describe(g));
      }
      if (!chain_ascends(g)) {
        ok = false;
        suite.expect(false, "chain ascent: " + describe(g));
      }
    }
    suite.expect(ok, "alpha invariants");
    suite.section("alpha table invariants", ok);
  }

  {
    bool ok = true;
    const int half = std::max(1, count / 2);
    for (int k = 0; k < half; ++k) {
      const GroupType g1 = random_group_type_min_gap2(rng, lim);
      if (!closed_form_matches(g1, 1)) {
        ok = false;
        suite.expect(false, "closed form (min gap >= 2): " + describe(g1));
      }
      const GroupType g2 = random_group_type_case2(rng, lim);
      if (!closed_form_matches(g2, 2)) {
        ok = false;
        suite.expect(false, "closed form (top gap 1): " + describe(g2));
      }
    }
    suite.expect(ok, "closed forms");
    suite.section("closed forms vs recursion", ok);
  }

  {
    bool ok = true;
    int done = 0;
    while (done < 50) {
      const GroupType g = random_group_type(rng, lim);
      AlphaTable table(g);
      if (table.saturation_step() < 1) continue;
      ++done;
      const Perturbed bad = perturb_table(rng, g, table);
      const auto v = check_annihilating_function(g, bad.steps);
      if (!v.has_value() || !violation_is_genuine(g, bad.steps, *v)) {
        ok = false;
        suite.expect(false, "perturbed table accepted: " + describe(g));
      }
    }
    suite.expect(ok, "perturbation rejection");
    suite.section("perturbed tables rejected with verified citations", ok);
  }

  {
    bool ok = true;
    for (int k = 0; k < 20; ++k) {
      const GroupType base = random_group_type(rng, lim);
      std::vector<std::vector<std::int64_t>> rank_choices;
      rank_choices.push_back(std::vector<std::int64_t>(base.exponents.size(), 1));
      rank_choices.push_back(std::vector<std::int64_t>(base.exponents.size(), 2));
      std::vector<std::int64_t> mixed;
      for (size_t m = 0; m < base.exponents.size(); ++m) {
        mixed.push_back(1 + static_cast<std::int64_t>(m % 2));
      }
      rank_choices.push_back(std::move(mixed));
      std::vector<std::vector<ExponentMatrix>> sequences;
      for (const auto& ranks : rank_choices) {
        sequences.push_back(
            uas_via_alpha(validate(base.p, base.exponents, ranks)));
      }
      bool same = true;
      for (size_t v = 1; v < sequences.size(); ++v) {
        if (sequences[v].size() != sequences[0].size()) {
          same = false;
          continue;
        }
        for (size_t t = 0; t < sequences[v].size(); ++t) {
          if (!grids_equal(sequences[v][t].beta, sequences[0][t].beta)) {
            same = false;
          }
        }
      }
      if (!same) {
        ok = false;
        suite.expect(false, "rank independence: " + describe(base));
      }
    }
    suite.expect(ok, "rank independence");
    suite.section("uas exponents independent of ranks", ok);
  }

  CheckOutcome out;
  out.checks = suite.checks;
  out.failures = suite.failures;
  return out;
}

}  // namespace deltanil
