#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graphcodes/graph_metric.hpp"
#include "graphcodes/linear_code.hpp"
#include "graphcodes/random_codes.hpp"
#include "graphcodes/rational.hpp"

namespace graphcodes {

/// F_2-linear injective encoder from K-bit outer symbols to inner matrix
/// words: bit i of a symbol selects the i-th element of an F_2-expansion of
/// the inner code basis (basis element index major, field basis bit minor).
/// Encodes 0 to the zero matrix by construction.
class InnerEncoder {
public:
    /// Throws if the inner code has fewer than symbol_bits F_2 dimensions.
    InnerEncoder(const GraphCode& inner, int symbol_bits);

    int symbol_bits() const { return bits_; }
    int n() const { return n_; }
    const FieldContext& ctx() const { return ctx_; }
    const std::vector<MatrixWord>& bit_basis() const { return bit_basis_; }

    MatrixWord encode(uint32_t symbol) const;

private:
    FieldContext ctx_;
    int n_;
    int bits_;
    std::vector<MatrixWord> bit_basis_;
};

/// Symbol-position rule choosing the inner code for block (I, J); must be
/// symmetric in its arguments.
using InnerPick = std::function<int(int, int)>;

/// Symmetric concatenation: each outer entry (I, J) with I <= J is replaced
/// by its inner encoding and entry (J, I) by the transpose of that encoding,
/// so the composite stays symmetric with zero diagonal. Per-position inner
/// families are selected through `pick`. The result spans over F_2.
GraphCode symmetric_concatenate(const GraphCode& outer, const InnerEncoder& inner,
                                std::optional<Rational> claimed_relative_distance = std::nullopt);
GraphCode symmetric_concatenate(const GraphCode& outer, const std::vector<InnerEncoder>& family,
                                const InnerPick& pick,
                                std::optional<Rational> claimed_relative_distance = std::nullopt);

/// Metadata for one layer of a composite construction, enough to rebuild the
/// layer bit-exactly.
struct ConcatLayer {
    std::string family;
    int n = 0;
    std::string q;  // field context string
    int dimension = 0;
    int message_bits = 0;
    std::optional<uint64_t> seed;
    std::optional<int> certified_directed_distance;
    std::optional<int> claimed_directed_distance;
};

struct ConcatRsResult {
    GraphCode code;
    GraphCode outer;
    OptSearchResult inner;
    std::optional<DistanceReport> outer_certificate;
    /// d * D from the component certificates (certified lower bound on the
    /// composite directed distance).
    int certified_distance_lower = 0;
    std::vector<ConcatLayer> layers;
};

/// Opt(epsilon, n, k) composed onto STCZD(RS(N, floor(rho N), F_{2^k})).
/// Requires k < epsilon^2 n^2 - 2n and N <= 2^k. The composite claimed
/// relative distance is (1 - epsilon)(1 - rho).
ConcatRsResult concat_rs(const Rational& epsilon, int n, int k, int N, const Rational& rho,
                         uint64_t seed, uint64_t exact_budget = uint64_t(1) << 22);

struct TripleConcatResult {
    GraphCode code;
    int n1 = 0, n2 = 0, n3 = 0;
    OptSearchResult innermost;
    std::vector<ConcatLayer> layers;
    int certified_distance_lower = 0;
};

/// Opt(rho, N3) on TC(RS(N2)) on TC(RS(N1)) on the strongly explicit
/// STCZD(RS(N)) subcode, with layer sizes chosen deterministically:
///   N1 = least power of two with floor(rho N1)^2 log2(N1) >= log2(N),
///   N2 = least power of two with floor(rho N2)^2 log2(N2) >= log2(N1),
///   N3 = least integer with rho^2 N3^2 - 2 N3 > log2(N2).
/// N must be a power of two; infeasible chains report the failing layer.
TripleConcatResult triple_concat(const Rational& rho, int N, uint64_t seed,
                                 uint64_t exact_budget = uint64_t(1) << 22);

struct JustesenResult {
    GraphCode code;
    GraphCode outer;
    /// Exact directed distance and F_2 dimension of D^(I), I = 1..N.
    std::vector<int> inner_distance;
    std::vector<int> inner_dimension;
    /// Distance threshold ceil(H2^{-1}(1/2 - epsilon) * 2k) and the fraction
    /// of inner codes meeting it (reported, never asserted).
    int inner_distance_threshold = 0;
    double good_fraction = 0.0;
    std::vector<ConcatLayer> layers;
};

/// Justesen-like code: outer STCZD(RS(N, floor(rho N), F_{2^k})) with
/// N = 2^k - 1, entry (I, J) encoded under D^(min(I,J)) where
/// D^(I) = STCZD(wozencraft_code(k, I)), blocks below the diagonal
/// transposed.
JustesenResult justensen_like(const Rational& epsilon, int k, const Rational& rho,
                              uint64_t exact_budget = uint64_t(1) << 22);

}  // namespace graphcodes
