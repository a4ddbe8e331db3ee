#pragma once

#include <cstdint>
#include <vector>

#include "graphcodes/field.hpp"
#include "graphcodes/matrix_word.hpp"

namespace graphcodes::linalg {

/// Rank over F_q of a list of row vectors (coordinates as reduced bit
/// patterns). Rows may have any common length.
int rank(std::vector<std::vector<uint16_t>> rows, const FieldContext& ctx);

/// Indices of rows forming a maximal independent subset, scanned in order.
std::vector<int> independent_subset(const std::vector<std::vector<uint16_t>>& rows,
                                    const FieldContext& ctx);

/// Basis of the right null space of the given rows (solutions x with
/// rows * x = 0), as vectors of length ncols. Deterministic: free columns
/// in ascending order, each basis vector has a 1 in its free column.
std::vector<std::vector<uint16_t>> nullspace(std::vector<std::vector<uint16_t>> rows, int ncols,
                                             const FieldContext& ctx);

/// True iff v lies in the row space of rows.
bool in_row_space(const std::vector<std::vector<uint16_t>>& rows, const std::vector<uint16_t>& v,
                  const FieldContext& ctx);

/// Flattens a matrix word to a coordinate row (row-major).
std::vector<uint16_t> flatten(const MatrixWord& w);

/// Rank over F_2 of bit-packed rows (64 coordinates per word).
int rank_f2(std::vector<std::vector<uint64_t>> rows);

/// Packs a binary coordinate vector into 64-bit words.
std::vector<uint64_t> pack_bits(const std::vector<uint16_t>& v);

/// Incrementally maintained F_2 row basis over bit-packed vectors.
class IncrementalBasisF2 {
public:
    /// Reduces v against the basis; keeps it if independent. Returns true
    /// iff the vector was independent (rank grew).
    bool add(std::vector<uint64_t> v);
    int rank() const { return int(rows_.size()); }

private:
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<size_t> pivot_;  // bit position of each row's leading 1
};

}  // namespace graphcodes::linalg
