#pragma once

#include <cstdint>

#include "graphcodes/graph_metric.hpp"
#include "graphcodes/linear_code.hpp"

namespace graphcodes {

/// Symmetric tensor code with zeros on the diagonal, built on a Hamming-
/// metric base code: all matrices whose rows and columns are codewords of c,
/// that are symmetric and have zero diagonal. The basis is obtained by
/// putting c in systematic form G = [I | A], solving the linear system on
/// k x k parameter matrices X (X symmetric, diag(X) = 0, diag(A^T X A) = 0)
/// and emitting G^T X_i G with the systematic column permutation undone, so
/// the result is a subcode of the tensor code of c itself.
///
/// The dimension is at least binom(k+1, 2) - n; the returned code carries
/// the exact null-space dimension. A claimed relative distance (the base
/// code's, when known) can be attached.
GraphCode stczd_basis(const LinearCode& c,
                      std::optional<Rational> claimed_relative_distance = std::nullopt);

/// The guaranteed dimension lower bound binom(k+1, 2) - n (may be negative).
int64_t stczd_dimension_bound(int k, int n);

/// Strongly explicit subcode of stczd_basis(rs_generate(n, k, ctx)): the
/// evaluation tables of (X - Y)^2 * p on the n x n grid, where p ranges over
/// the symmetric monomial basis {X^a Y^b + X^b Y^a : 0 <= a < b <= k-3}
/// together with {X^i Y^i : 0 <= i <= k-3}. Dimension is exactly
/// binom(k-1, 2); k < 3 yields the zero code with an empty basis.
GraphCode stczd_rs_explicit(int n, int k, const FieldContext& ctx);

/// Single entry of basis element `index` of stczd_rs_explicit(n, k, ctx),
/// computed from the indices alone (the strong-explicitness contract).
uint32_t stczd_rs_explicit_entry(int n, int k, const FieldContext& ctx, int index, int row, int col);

/// Plain tensor product code: basis {g_i^T (x) g_j} over all generator row
/// pairs, dimension k^2. Elements are exactly the matrices whose rows and
/// columns lie in c. Directed, not symmetric.
GraphCode tensor_code(const LinearCode& c,
                      std::optional<Rational> claimed_relative_distance = std::nullopt);

}  // namespace graphcodes
