#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "graphcodes/field.hpp"

namespace graphcodes {

/// An n x n matrix over F_{2^t}, entries stored row-major as reduced bit
/// patterns. A graph word is a MatrixWord that is symmetric with zero
/// diagonal; over F_2 that is exactly an adjacency matrix.
class MatrixWord {
public:
    MatrixWord(FieldContext ctx, int n) : ctx_(ctx), n_(n), e_(size_t(n) * n, 0) {
        if (n < 1) throw std::invalid_argument("matrix side must be positive");
    }

    const FieldContext& ctx() const { return ctx_; }
    int n() const { return n_; }

    uint16_t at(int i, int j) const { return e_[size_t(i) * n_ + j]; }
    void set(int i, int j, uint32_t v) { e_[size_t(i) * n_ + j] = uint16_t(v); }

    const std::vector<uint16_t>& entries() const { return e_; }
    std::vector<uint16_t>& entries() { return e_; }

    bool is_zero() const;
    bool is_symmetric() const;
    bool has_zero_diagonal() const;
    bool is_graph_word() const { return is_symmetric() && has_zero_diagonal(); }

    MatrixWord transpose() const;

    /// Entrywise sum (XOR of coordinates); contexts and shapes must match.
    MatrixWord operator+(const MatrixWord& o) const;
    bool operator==(const MatrixWord&) const = default;

    /// In-place w += c * o for a scalar c of the same context.
    void add_scaled(const MatrixWord& o, uint32_t c);

    /// Row i and column j as plain coordinate vectors.
    std::vector<uint16_t> row(int i) const;
    std::vector<uint16_t> column(int j) const;

private:
    FieldContext ctx_;
    int n_;
    std::vector<uint16_t> e_;
};

void require_same_shape(const MatrixWord& a, const MatrixWord& b);

/// File format, bit exact:
///   line 1: "n=<n> q=<hex-modulus>"
///   then n lines of n lowercase-hex symbols separated by single spaces.
void write_matrix_word(std::ostream& os, const MatrixWord& w);
MatrixWord read_matrix_word(std::istream& is);

/// Binary graph words additionally export as 0-indexed "u v" edge lines.
void write_edge_list(std::ostream& os, const MatrixWord& w);

}  // namespace graphcodes
