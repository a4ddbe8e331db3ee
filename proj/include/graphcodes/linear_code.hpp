#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "graphcodes/field.hpp"
#include "graphcodes/report.hpp"

namespace graphcodes {

/// A Hamming-metric linear [n, k] code over F_{2^t}, given by a full-rank
/// generator matrix (row-major, reduced bit patterns). Immutable after
/// construction.
class LinearCode {
public:
    LinearCode(FieldContext ctx, int n, int k, std::vector<uint16_t> generator,
               std::vector<uint16_t> eval_points = {});

    const FieldContext& ctx() const { return ctx_; }
    int n() const { return n_; }
    int k() const { return k_; }
    uint16_t gen(int row, int col) const { return generator_[size_t(row) * n_ + col]; }
    const std::vector<uint16_t>& generator() const { return generator_; }
    const std::vector<uint16_t>& eval_points() const { return eval_points_; }

    /// Encodes a length-k message (reduced bit patterns) to a codeword.
    std::vector<uint16_t> encode(const std::vector<uint16_t>& message) const;

    /// Generator row as a vector.
    std::vector<uint16_t> row(int i) const;

private:
    FieldContext ctx_;
    int n_, k_;
    std::vector<uint16_t> generator_;
    std::vector<uint16_t> eval_points_;  // nonempty only for RS codes
};

/// Reed-Solomon code: row i of the generator is X^i evaluated on the first n
/// field elements in the canonical enumeration (bit patterns 0..n-1).
/// Minimum distance is exactly n - k + 1.
LinearCode rs_generate(int n, int k, const FieldContext& ctx);

/// Systematic form [I | A] reachable by row operations plus a recorded
/// column permutation. Column j of the systematic generator is column
/// col_perm[j] of the original.
struct SystematicForm {
    LinearCode code;
    std::vector<int> col_perm;
};
SystematicForm systematic_form(const LinearCode& c);

struct HammingDistanceOptions {
    uint64_t exact_budget = uint64_t(1) << 20;  // max codewords to enumerate
    bool allow_sampled = false;
    uint64_t samples = 0;
    uint64_t seed = 0;
};

/// Exact minimum distance by exhaustive codeword enumeration when q^k fits
/// the budget; otherwise (with allow_sampled) a sampled upper bound.
DistanceReport hamming_min_distance(const LinearCode& c, const HammingDistanceOptions& opt = {});

/// Wozencraft ensemble member: the binary [2k, k] code
/// {(x, index * x) : x in F_{2^k}} under the coordinate embedding of each
/// half. index must be a nonzero element of F_{2^k}.
LinearCode wozencraft_code(int k, uint32_t index);

/// Serialization: header "q=<hex-modulus> n=<n> k=<k>", then k lines of n
/// hex symbols.
void write_linear_code(std::ostream& os, const LinearCode& c);
LinearCode read_linear_code(std::istream& is);

}  // namespace graphcodes
