#include "deltanil/residue.hpp"

#include <numeric>
#include <sstream>

namespace deltanil {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if (m <= (std::uint64_t{1} << 31)) return (a * b) % m;
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

std::vector<std::uint64_t> column_moduli(const GroupType& g) {
  std::vector<std::uint64_t> mods;
  mods.reserve(static_cast<size_t>(g.blocks()));
  for (Index j = 0; j < g.blocks(); ++j) mods.push_back(g.column_modulus(j));
  return mods;
}

IntMat residue_identity(const GroupType& g) {
  const std::int64_t r = g.total_rank();
  return IntMat::Identity(r, r);
}

bool residue_shape_ok(const GroupType& g, const IntMat& m) {
  const std::int64_t r = g.total_rank();
  if (m.rows() != r || m.cols() != r) return false;
  for (Index j = 0; j < g.blocks(); ++j) {
    const std::int64_t c0 = g.block_offset(j);
    const std::int64_t mod = static_cast<std::int64_t>(g.column_modulus(j));
    for (std::int64_t b = c0; b < c0 + g.rank(j); ++b) {
      for (std::int64_t a = 0; a < r; ++a) {
        const std::int64_t v = m(a, b);
        if (v < 0 || v >= mod) return false;
        const Index i = g.block_of(a);
        if (i < j) {
          const std::int64_t need = static_cast<std::int64_t>(
              pow_u64(g.p, static_cast<unsigned>(g.exponent(j) - g.exponent(i))));
          if (v % need != 0) return false;
        }
      }
    }
  }
  return true;
}

void require_residue_shape(const GroupType& g, const IntMat& m) {
  if (!residue_shape_ok(g, m)) {
    throw ShapeViolation("matrix violates the block divisibility shape");
  }
}

void residue_mul_into(const GroupType& g,
                      const std::vector<std::uint64_t>& colmod, const IntMat& a,
                      const IntMat& b, IntMat& out) {
  const std::int64_t r = a.rows();
  for (Index jb = 0; jb < g.blocks(); ++jb) {
    const std::uint64_t mod = colmod[static_cast<size_t>(jb)];
    const std::int64_t c0 = g.block_offset(jb);
    const std::int64_t c1 = c0 + g.rank(jb);
    for (std::int64_t col = c0; col < c1; ++col) {
      for (std::int64_t row = 0; row < r; ++row) {
        std::uint64_t acc = 0;
        for (std::int64_t k = 0; k < r; ++k) {
          const std::uint64_t x = static_cast<std::uint64_t>(a(row, k)) % mod;
          const std::uint64_t y = static_cast<std::uint64_t>(b(k, col));
          acc = (acc + mulmod(x, y % mod, mod)) % mod;
        }
        out(row, col) = static_cast<std::int64_t>(acc);
      }
    }
  }
}

IntMat residue_mul(const GroupType& g, const IntMat& a, const IntMat& b) {
  require_residue_shape(g, a);
  require_residue_shape(g, b);
  IntMat out(a.rows(), a.cols());
  residue_mul_into(g, column_moduli(g), a, b, out);
  return out;
}

std::vector<IntMat> elementary_endomorphisms(const GroupType& g) {
  const std::int64_t r = g.total_rank();
  std::vector<IntMat> out;
  for (Index i = 0; i < g.blocks(); ++i) {
    for (Index j = 0; j < g.blocks(); ++j) {
      std::uint64_t scalar = 1;
      if (i == j) {
        scalar = g.p;
      } else if (i < j) {
        scalar = pow_u64(g.p, static_cast<unsigned>(g.exponent(j) - g.exponent(i)));
      }
      const std::uint64_t mod = g.column_modulus(j);
      const std::int64_t v = static_cast<std::int64_t>(scalar % mod);
      for (std::int64_t k = 0; k < g.rank(i); ++k) {
        for (std::int64_t l = 0; l < g.rank(j); ++l) {
          IntMat e = IntMat::Zero(r, r);
          e(g.block_offset(i) + k, g.block_offset(j) + l) = v;
          out.push_back(std::move(e));
        }
      }
    }
  }
  return out;
}

bool is_in_ideal(const GroupType& g, const IntMat& m, const ExpGrid& beta) {
  const std::int64_t r = g.total_rank();
  if (m.rows() != r || m.cols() != r) return false;
  for (std::int64_t a = 0; a < r; ++a) {
    const Index i = g.block_of(a);
    for (std::int64_t b = 0; b < r; ++b) {
      const Index j = g.block_of(b);
      const std::uint64_t div =
          pow_u64(g.p, static_cast<unsigned>(beta(i, j)));
      if (static_cast<std::uint64_t>(m(a, b)) % div != 0) return false;
    }
  }
  return true;
}

bool in_delta(const GroupType& g, const IntMat& m) {
  if (m.rows() != g.total_rank() || m.cols() != g.total_rank()) return false;
  if (!residue_shape_ok(g, m)) return false;
  IntMat a = m - residue_identity(g);
  // The diagonal of m is 1 + (multiple of p), so no entry wraps below zero
  // unless m was outside 1 + J to begin with.
  for (std::int64_t k = 0; k < m.rows(); ++k) {
    if (a(k, k) < 0) return false;
  }
  return is_in_ideal(g, a, radical_shape(g).beta);
}

IntMat delta_inverse(const GroupType& g, const IntMat& u) {
  if (!in_delta(g, u)) throw NotInDelta("delta_inverse: not of the form 1 + a");
  const auto colmod = column_moduli(g);
  const std::int64_t r = g.total_rank();
  const IntMat a = u - residue_identity(g);
  IntMat acc = residue_identity(g);
  IntMat pow = a;
  IntMat scratch(r, r);
  const auto is_zero = [](const IntMat& m) { return (m.array() == 0).all(); };
  int sign = -1;
  const int cap = static_cast<int>(g.blocks()) * g.top_exponent() *
                      static_cast<int>(g.blocks()) +
                  2;
  for (int k = 0; k < cap && !is_zero(pow); ++k) {
    for (std::int64_t col = 0; col < r; ++col) {
      const std::int64_t mod =
          static_cast<std::int64_t>(colmod[static_cast<size_t>(g.block_of(col))]);
      for (std::int64_t row = 0; row < r; ++row) {
        std::int64_t v = acc(row, col) + sign * pow(row, col);
        v %= mod;
        if (v < 0) v += mod;
        acc(row, col) = v;
      }
    }
    residue_mul_into(g, colmod, pow, a, scratch);
    pow.swap(scratch);
    sign = -sign;
  }
  if (!is_zero(pow)) {
    throw InternalMismatch("delta_inverse: series did not terminate");
  }
  return acc;
}

bool in_hypercenter(const GroupType& g, const IntMat& m,
                    const HypercenterDescription& desc) {
  if (!in_delta(g, m)) throw NotInDelta("in_hypercenter: not in Delta(G)");
  const std::int64_t r = g.total_rank();
  const IntMat c = m - residue_identity(g);
  const std::int64_t ref = c(r - 1, r - 1);  // last diagonal entry, block s
  for (std::int64_t a = 0; a < r; ++a) {
    const Index i = g.block_of(a);
    for (std::int64_t b = 0; b < r; ++b) {
      const Index j = g.block_of(b);
      const std::uint64_t mod =
          pow_u64(g.p, static_cast<unsigned>(desc.cell_exp(i, j)));
      if (a == b) {
        const std::int64_t d = c(a, a) - ref;
        if ((d % static_cast<std::int64_t>(mod) + static_cast<std::int64_t>(mod)) %
                static_cast<std::int64_t>(mod) !=
            0) {
          return false;
        }
      } else if (static_cast<std::uint64_t>(c(a, b)) % mod != 0) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace deltanil
