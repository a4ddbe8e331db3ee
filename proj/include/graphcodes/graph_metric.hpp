#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "graphcodes/field.hpp"
#include "graphcodes/matrix_word.hpp"
#include "graphcodes/rational.hpp"
#include "graphcodes/report.hpp"

namespace graphcodes {

/// Vertex sets certifying a distance value: deleting rows S and columns T
/// zeroes the word. S == T for the undirected metric.
struct CoverWitness {
    std::vector<int> rows;
    std::vector<int> cols;
};

/// Undirected graph distance: the exact minimum vertex cover size of the
/// support graph of g - h. Both words must be symmetric with zero diagonal
/// and share shape and context. Computed as n minus a maximum independent
/// set (branch and bound, n <= 64).
int graph_distance(const MatrixWord& g, const MatrixWord& h, CoverWitness* witness = nullptr);

/// Directed graph distance: the minimum d such that some S, T of size d
/// satisfy (a - b) restricted to rows outside S and columns outside T being
/// all-zero. Branch and bound on the lexicographically first uncovered
/// nonzero entry, row branch first.
int directed_graph_distance(const MatrixWord& a, const MatrixWord& b, CoverWitness* witness = nullptr);

/// Exact maximum independent set size of a binary graph word (n <= 64).
int independence_number(const MatrixWord& g, std::vector<int>* witness = nullptr);

/// Exact clique number: independence number of the complement.
int clique_number(const MatrixWord& g, std::vector<int>* witness = nullptr);

/// A linear space of matrix words given by a basis. The basis spans over the
/// scalar field, which is either the alphabet itself or F_2 (composite codes
/// built through bit-level identifications are F_2-spaces of matrices over a
/// larger alphabet).
class GraphCode {
public:
    GraphCode(FieldContext ctx, int n, std::vector<MatrixWord> basis, bool directed,
              bool symmetric_zero_diag,
              std::optional<Rational> claimed_relative_distance = std::nullopt);
    GraphCode(FieldContext ctx, FieldContext scalar, int n, std::vector<MatrixWord> basis,
              bool directed, bool symmetric_zero_diag,
              std::optional<Rational> claimed_relative_distance = std::nullopt);

    const FieldContext& ctx() const { return ctx_; }
    const FieldContext& scalar() const { return scalar_; }
    int n() const { return n_; }
    const std::vector<MatrixWord>& basis() const { return basis_; }
    bool directed() const { return directed_; }
    bool symmetric_zero_diag() const { return symmetric_zero_diag_; }
    const std::optional<Rational>& claimed_relative_distance() const { return claimed_; }

    /// Dimension over the scalar field.
    int dimension() const { return int(basis_.size()); }
    int dimension_bits() const { return dimension() * scalar_.t(); }

    /// log_q |C| / binom(n, 2) undirected, log_q |C| / n^2 directed.
    double rate() const;

    /// Codeword for scalar-field coefficients (one per basis element).
    MatrixWord codeword(const std::vector<uint32_t>& coeffs) const;

private:
    FieldContext ctx_;
    FieldContext scalar_;
    int n_;
    std::vector<MatrixWord> basis_;
    bool directed_;
    bool symmetric_zero_diag_;
    std::optional<Rational> claimed_;
};

struct CodeDistanceOptions {
    enum class Mode { Auto, Exact, Sampled };
    Mode mode = Mode::Auto;
    /// Maximum codeword count for exhaustive certification.
    uint64_t exact_budget = uint64_t(1) << 22;
    uint64_t samples = 1024;
    uint64_t seed = 0;
    /// Defaults to the code's directedness.
    std::optional<Metric> metric;
    /// Soft cap per oracle instance; exceeding it raises BudgetError.
    std::chrono::seconds oracle_soft_cap{60};
};

/// Distance of the code to its zero word (equals the pairwise minimum by
/// linearity). Exact mode enumerates every nonzero codeword and certifies
/// both bounds; sampled mode certifies an upper bound only.
DistanceReport code_distance(const GraphCode& c, const CodeDistanceOptions& opt = {});

/// Singleton-type upper bound check for graph codes: with d the exact
/// certified distance, dimension_bits <= binom(n - d + 1, 2) * log2(q).
/// Returns false only on a bug; throws on a sampled report.
bool singleton_check(const GraphCode& c, const DistanceReport& report);

}  // namespace graphcodes
