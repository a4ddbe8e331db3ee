#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graphcodes/graph_metric.hpp"

namespace graphcodes {

/// A polynomial sum of alpha_j X^j over odd exponents j >= 3, the message
/// space of the trace-graph construction.
class TracePolynomial {
public:
    /// coeffs: (exponent, coefficient) pairs; exponents must be odd and at
    /// least 3, coefficients reduced. Zero coefficients are dropped.
    TracePolynomial(FieldContext ctx, std::vector<std::pair<int, uint32_t>> coeffs);

    const FieldContext& ctx() const { return ctx_; }
    const std::vector<std::pair<int, uint32_t>>& coeffs() const { return coeffs_; }

    uint32_t evaluate(uint32_t x) const;

private:
    FieldContext ctx_;
    std::vector<std::pair<int, uint32_t>> coeffs_;  // sorted by exponent
};

/// Largest admissible degree for the code family over F_{2^t}:
/// max(3, floor(2^{t/2})).
int dualbch_max_degree(const FieldContext& ctx);

/// n x n binary graph word with rows and columns indexed by F_{2^t} in
/// canonical order, entry (x, y) = Tr(alpha (x+y)^3). Symmetric with zero
/// diagonal.
MatrixWord warmup_codeword(uint32_t alpha, const FieldContext& ctx);

/// Entry (x, y) = Tr(f(x+y)); strongly explicit.
MatrixWord dualbch_codeword(const TracePolynomial& f);

struct DualBchBasis {
    GraphCode code;            // F_2 code on n = 2^t vertices
    FieldContext field;        // the index field F_{2^t}
    int d = 0;
    int nominal_dimension = 0;  // t * #{odd j in [3, d]}
};

/// F_2-basis {M_{beta_i X^j}} over odd j in [3, d] and the polynomial basis
/// beta_i of F_{2^t}, rank-reduced: the kernel of f -> M_f is detected and
/// only independent codewords are kept.
DualBchBasis dualbch_basis(const FieldContext& ctx, int d);

/// Sum over all x in F_{2^t} of (-1)^{Tr(p(x))}, exact. Coefficient vector
/// indexed by exponent. Requires t <= 24.
long long character_sum(const std::vector<uint32_t>& poly, const FieldContext& ctx);

/// Replaces every monomial alpha X^{j 2^k} (j odd) by alpha^{1/2^k} X^j; the
/// constant term is kept. Preserves Tr(p(x)) pointwise, so character sums
/// are unchanged, and every nonconstant monomial of the result has odd
/// degree.
std::vector<uint32_t> odd_degree_reduction(const std::vector<uint32_t>& poly,
                                           const FieldContext& ctx);

struct WeilClassResult {
    int t = 0;
    int degree = 0;
    bool exhaustive = true;
    uint64_t count = 0;          // polynomials covered
    long long max_abs = 0;       // max |character sum| seen
    std::vector<uint32_t> worst;  // a polynomial attaining it
    double bound = 0.0;          // (degree - 1) * 2^{t/2}
    uint64_t violations = 0;     // sums exceeding the bound
    bool pass() const { return violations == 0; }
};

/// Exhaustive scan over all monic polynomials of the given odd degree with
/// arbitrary lower coefficients: |sum| <= (degree - 1) 2^{t/2} is checked
/// for every one. Requires t <= 6. Constant terms only flip the sign of the
/// sum, so they are folded analytically into the count. The scan splits the
/// leading free coefficient across up to `threads` workers; results are
/// independent of the worker count.
WeilClassResult weil_scan_exhaustive(const FieldContext& ctx, int degree, int threads = 1);

/// Same check on uniformly sampled monic polynomials of the given degree.
WeilClassResult weil_scan_sampled(const FieldContext& ctx, int degree, uint64_t samples,
                                  uint64_t seed);

}  // namespace graphcodes
