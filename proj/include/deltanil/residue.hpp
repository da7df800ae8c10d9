#pragma once

#include <vector>

#include "deltanil/series.hpp"

namespace deltanil {

// Residue matrices are r x r IntMats over the block-column moduli p^{n_j}:
// the entry at (a,b) lives in Z/p^{n_j} where j is the block of column b,
// stored as the least non-negative residue. Cells above the diagonal carry
// the divisibility constraint p^{n_j - n_i} that makes the mixed-modulus
// product well defined.

IntMat residue_identity(const GroupType& g);

bool residue_shape_ok(const GroupType& g, const IntMat& m);

/// Throws ShapeViolation with a position hint.
void require_residue_shape(const GroupType& g, const IntMat& m);

/// Product of endomorphisms: integer matrix product with block column j
/// reduced mod p^{n_j}. Both inputs must satisfy the shape invariant.
IntMat residue_mul(const GroupType& g, const IntMat& a, const IntMat& b);

/// Allocation-free variant for hot loops; `out` must be r x r.
void residue_mul_into(const GroupType& g, const std::vector<std::uint64_t>& colmod,
                      const IntMat& a, const IntMat& b, IntMat& out);

std::vector<std::uint64_t> column_moduli(const GroupType& g);

/// One generator of the radical per matrix position: p on diagonal cells,
/// 1 on cells below the diagonal, p^{n_j - n_i} on cells above it.
std::vector<IntMat> elementary_endomorphisms(const GroupType& g);

/// Entrywise divisibility of m against the ideal p^{beta(i,j)} E_{ij}.
bool is_in_ideal(const GroupType& g, const IntMat& m, const ExpGrid& beta);

/// True iff m = 1 + a with a in the radical shape.
bool in_delta(const GroupType& g, const IntMat& m);

/// Inverse of u = 1 + a inside Delta(G), by the terminating alternating
/// series 1 - a + a^2 - ... (a is nilpotent). Throws NotInDelta.
IntMat delta_inverse(const GroupType& g, const IntMat& u);

/// Tests the three congruence rule families of desc against m - 1.
/// Throws NotInDelta when m is not in Delta(G).
bool in_hypercenter(const GroupType& g, const IntMat& m,
                    const HypercenterDescription& desc);

}  // namespace deltanil
