#include "deltanil/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace deltanil {

namespace {

std::vector<EnumeratedGroup::Digit> free_digits(const GroupType& g) {
  const ExponentMatrix rad = radical_shape(g);
  std::vector<EnumeratedGroup::Digit> digits;
  const std::int64_t r = g.total_rank();
  for (std::int64_t a = 0; a < r; ++a) {
    const Index i = g.block_of(a);
    for (std::int64_t b = 0; b < r; ++b) {
      const Index j = g.block_of(b);
      const int depth = radical_depth(g, i, j);
      if (depth == 0) continue;
      EnumeratedGroup::Digit d;
      d.row = a;
      d.col = b;
      d.step = pow_u64(g.p, static_cast<unsigned>(rad.beta(i, j)));
      d.count = pow_u64(g.p, static_cast<unsigned>(depth));
      digits.push_back(d);
    }
  }
  std::uint64_t stride = 1;
  for (auto& d : digits) {
    d.stride = stride;
    stride *= d.count;
  }
  return digits;
}

/// Run fn(first, last) on roughly even chunks of [0, n).
template <typename Fn>
void parallel_chunks(std::int64_t n, Fn fn) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      n >= 512 ? std::min<unsigned>(hw, static_cast<unsigned>((n + 255) / 256))
               : 1;
  if (workers <= 1) {
    fn(std::int64_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::int64_t lo = static_cast<std::int64_t>(w) * chunk;
    const std::int64_t hi = std::min<std::int64_t>(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::int32_t EnumeratedGroup::index_of(const IntMat& m) const {
  const std::int64_t r = g.total_rank();
  if (m.rows() != r || m.cols() != r) return -1;
  std::uint64_t idx = 0;
  for (const auto& d : digits) {
    std::int64_t v = m(d.row, d.col);
    if (d.row == d.col) v -= 1;
    if (v < 0) return -1;
    const std::uint64_t u = static_cast<std::uint64_t>(v);
    if (u % d.step != 0) return -1;
    const std::uint64_t digit = u / d.step;
    if (digit >= d.count) return -1;
    idx += digit * d.stride;
  }
  // Positions without a free digit must match the identity exactly.
  // Cheap check: reconstruct is avoided; verify against the stored element.
  const std::int32_t i = static_cast<std::int32_t>(idx);
  if (i < 0 || i >= static_cast<std::int32_t>(elements.size())) return -1;
  return mats_equal(elements[static_cast<size_t>(i)], m) ? i : -1;
}

EnumeratedGroup enumerate_delta(const GroupType& g, std::uint64_t max_order) {
  if (max_order == 0) max_order = kDefaultMaxOrder;
  const DeltaOrder ord = delta_order(g);
  if (ord.exceeds(max_order)) {
    std::ostringstream msg;
    msg << "OrderExceedsGuard: |Delta(G)| = " << ord.str()
        << " exceeds the guard " << max_order;
    throw OrderExceedsGuard(msg.str());
  }
  EnumeratedGroup grp;
  grp.g = g;
  grp.digits = free_digits(g);
  const std::uint64_t total = ord.value.value();
  grp.elements.reserve(total);
  const IntMat identity = residue_identity(g);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    IntMat m = identity;
    for (const auto& d : grp.digits) {
      const std::uint64_t digit = (idx / d.stride) % d.count;
      m(d.row, d.col) += static_cast<std::int64_t>(digit * d.step);
    }
    grp.elements.push_back(std::move(m));
  }
  grp.identity = 0;
  grp.inverse.resize(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const IntMat inv = delta_inverse(g, grp.elements[idx]);
    const std::int32_t k = grp.index_of(inv);
    if (k < 0) throw InternalMismatch("inverse left the enumerated set");
    grp.inverse[idx] = k;
  }
  return grp;
}

UcsChain ucs_oracle(const EnumeratedGroup& grp) {
  const std::int64_t n = grp.size();
  UcsChain chain;
  std::vector<char> cur(static_cast<size_t>(n), 0);
  cur[static_cast<size_t>(grp.identity)] = 1;
  chain.membership.push_back(cur);
  if (n == 1) {
    chain.cls = 0;
    return chain;
  }
  const auto colmod = column_moduli(grp.g);
  const int cap = static_cast<int>(grp.g.blocks()) * grp.g.top_exponent() *
                      static_cast<int>(grp.g.blocks()) +
                  2;
  while (true) {
    std::vector<char> next = cur;
    std::atomic<bool> grew{false};
    std::atomic<bool> corrupt{false};
    parallel_chunks(n, [&](std::int64_t lo, std::int64_t hi) {
      const std::int64_t r = grp.g.total_rank();
      IntMat xy(r, r), yx(r, r), c(r, r);
      for (std::int64_t x = lo; x < hi; ++x) {
        if (cur[static_cast<size_t>(x)]) continue;
        const IntMat& mx = grp.elements[static_cast<size_t>(x)];
        bool central = true;
        for (std::int64_t y = 0; y < n; ++y) {
          const IntMat& my = grp.elements[static_cast<size_t>(y)];
          residue_mul_into(grp.g, colmod, mx, my, xy);
          residue_mul_into(grp.g, colmod, my, mx, yx);
          const std::int32_t iyx = grp.index_of(yx);
          if (iyx < 0) {
            corrupt.store(true, std::memory_order_relaxed);
            return;
          }
          // commutator [x,y] = (yx)^{-1} (xy)
          residue_mul_into(grp.g, colmod,
                           grp.elements[static_cast<size_t>(grp.inverse[iyx])],
                           xy, c);
          const std::int32_t ic = grp.index_of(c);
          if (ic < 0 || !cur[static_cast<size_t>(ic)]) {
            central = false;
            break;
          }
        }
        if (central) {
          next[static_cast<size_t>(x)] = 1;
          grew.store(true, std::memory_order_relaxed);
        }
      }
    });
    if (corrupt.load()) {
      throw InternalMismatch("product left the enumerated set");
    }
    if (!grew.load()) {
      throw InternalMismatch("upper central series stalled in a finite p-group");
    }
    chain.membership.push_back(next);
    ++chain.cls;
    if (std::all_of(next.begin(), next.end(), [](char f) { return f != 0; })) {
      break;
    }
    cur = std::move(next);
    if (chain.cls > cap) {
      throw InternalMismatch("upper central series failed to terminate");
    }
  }
  return chain;
}

namespace {

/// Enumerate the elements of an exponent ideal (inside the radical shape).
std::vector<IntMat> enumerate_ideal(const GroupType& g, const ExpGrid& beta,
                                    std::uint64_t max_count) {
  const std::int64_t r = g.total_rank();
  struct Slot {
    std::int64_t row, col;
    std::uint64_t step, count;
  };
  std::vector<Slot> slots;
  std::uint64_t total = 1;
  for (std::int64_t a = 0; a < r; ++a) {
    const Index i = g.block_of(a);
    for (std::int64_t b = 0; b < r; ++b) {
      const Index j = g.block_of(b);
      const int free = g.exponent(j) - beta(i, j);
      if (free <= 0) continue;
      Slot s;
      s.row = a;
      s.col = b;
      s.step = pow_u64(g.p, static_cast<unsigned>(beta(i, j)));
      s.count = pow_u64(g.p, static_cast<unsigned>(free));
      if (total > max_count / s.count) {
        throw OrderExceedsGuard("OrderExceedsGuard: ideal too large to enumerate");
      }
      total *= s.count;
      slots.push_back(s);
    }
  }
  std::vector<IntMat> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    IntMat m = IntMat::Zero(r, r);
    std::uint64_t rest = idx;
    for (const auto& s : slots) {
      const std::uint64_t digit = rest % s.count;
      rest /= s.count;
      m(s.row, s.col) = static_cast<std::int64_t>(digit * s.step);
    }
    out.push_back(std::move(m));
  }
  return out;
}

int valuation(std::uint64_t v, std::uint64_t p, int cap) {
  if (v == 0) return cap;
  int e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

}  // namespace

ExponentMatrix ann_oracle(const GroupType& g, const ExponentMatrix& prev,
                          std::uint64_t max_order) {
  if (max_order == 0) max_order = kDefaultMaxOrder;
  if (!ideal_contains(radical_shape(g), prev)) {
    throw NotContainedInRadical("ann_oracle: prev is not inside the radical");
  }
  const ExponentMatrix rad = radical_shape(g);
  const std::vector<IntMat> jset = enumerate_ideal(g, rad.beta, max_order);
  const auto colmod = column_moduli(g);
  const std::int64_t n = static_cast<std::int64_t>(jset.size());
  std::vector<char> passing(static_cast<size_t>(n), 0);
  parallel_chunks(n, [&](std::int64_t lo, std::int64_t hi) {
    const std::int64_t r = g.total_rank();
    IntMat ab(r, r), ba(r, r);
    for (std::int64_t ai = lo; ai < hi; ++ai) {
      const IntMat& a = jset[static_cast<size_t>(ai)];
      bool ok = true;
      for (std::int64_t bi = 0; bi < n && ok; ++bi) {
        const IntMat& b = jset[static_cast<size_t>(bi)];
        residue_mul_into(g, colmod, a, b, ab);
        if (!is_in_ideal(g, ab, prev.beta)) {
          ok = false;
          break;
        }
        residue_mul_into(g, colmod, b, a, ba);
        if (!is_in_ideal(g, ba, prev.beta)) ok = false;
      }
      passing[static_cast<size_t>(ai)] = ok ? 1 : 0;
    }
  });

  // Read the exponent of each cell off the passing set, then verify the set
  // is exactly that ideal by cardinality.
  const Index s = g.blocks();
  ExpGrid beta(s, s);
  for (Index i = 0; i < s; ++i)
    for (Index j = 0; j < s; ++j) beta(i, j) = g.exponent(j);
  std::uint64_t count = 0;
  for (std::int64_t ai = 0; ai < n; ++ai) {
    if (!passing[static_cast<size_t>(ai)]) continue;
    ++count;
    const IntMat& a = jset[static_cast<size_t>(ai)];
    for (std::int64_t row = 0; row < a.rows(); ++row) {
      const Index i = g.block_of(row);
      for (std::int64_t col = 0; col < a.cols(); ++col) {
        const Index j = g.block_of(col);
        const int v = valuation(static_cast<std::uint64_t>(a(row, col)), g.p,
                                g.exponent(j));
        beta(i, j) = std::min(beta(i, j), v);
      }
    }
  }
  unsigned __int128 expect = 1;
  for (Index i = 0; i < s; ++i) {
    for (Index j = 0; j < s; ++j) {
      const unsigned free = static_cast<unsigned>(g.exponent(j) - beta(i, j));
      const unsigned cells = static_cast<unsigned>(g.rank(i) * g.rank(j));
      for (unsigned k = 0; k < free * cells; ++k) expect *= g.p;
    }
  }
  if (expect != count) {
    throw NotExponentShaped(
        "ann_oracle: annihilator set is not an exponent-matrix ideal");
  }
  return {g, std::move(beta)};
}

std::vector<ExponentMatrix> uas_via_ann_oracle(const GroupType& g,
                                               std::uint64_t max_order) {
  const ExponentMatrix rad = radical_shape(g);
  std::vector<ExponentMatrix> seq;
  ExponentMatrix cur = zero_ideal(g);
  while (!(cur == rad)) {
    ExponentMatrix next = ann_oracle(g, cur, max_order);
    if (next == cur) throw InternalMismatch("oracle annihilator chain stalled");
    seq.push_back(next);
    cur = std::move(next);
  }
  return seq;
}

OracleReport compare_report(const GroupType& g, std::uint64_t max_order) {
  OracleReport rep;
  rep.g = g;
  rep.applicability = classify_applicability(g);
  rep.order = delta_order(g);
  const EnumeratedGroup grp = enumerate_delta(g, max_order);
  const UcsChain chain = ucs_oracle(grp);
  rep.oracle_class = chain.cls;
  const NilpotencyClass pred = nilpotency_class(g);
  rep.predicted_class = pred.value;
  rep.uas_len = uas_length(g);
  rep.bound_ok = rep.oracle_class <= rep.uas_len;
  rep.abelian = rep.oracle_class <= 1;

  rep.agreement = rep.oracle_class == rep.predicted_class;
  rep.subsets_ok = true;
  const int tmax = std::min(rep.oracle_class, rep.predicted_class);
  for (int t = 1; t <= tmax; ++t) {
    const HypercenterDescription desc = hypercenter_description(g, t);
    StepComparison cmp;
    cmp.t = t;
    cmp.equal = true;
    cmp.predicted_subset_of_oracle = true;
    const auto& oracle_members = chain.membership[static_cast<size_t>(t)];
    for (std::int64_t x = 0; x < grp.size(); ++x) {
      const bool predicted =
          in_hypercenter(g, grp.elements[static_cast<size_t>(x)], desc);
      const bool oracle = oracle_members[static_cast<size_t>(x)] != 0;
      cmp.oracle_size += oracle ? 1 : 0;
      cmp.predicted_size += predicted ? 1 : 0;
      if (predicted != oracle) cmp.equal = false;
      if (predicted && !oracle) cmp.predicted_subset_of_oracle = false;
    }
    if (!cmp.equal) rep.agreement = false;
    if (!cmp.predicted_subset_of_oracle) rep.subsets_ok = false;
    rep.steps.push_back(cmp);
  }
  return rep;
}

}  // namespace deltanil
