#include "graphcodes/dualbch.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "graphcodes/errors.hpp"
#include "graphcodes/linalg.hpp"
#include "graphcodes/rng.hpp"

namespace graphcodes {

TracePolynomial::TracePolynomial(FieldContext ctx, std::vector<std::pair<int, uint32_t>> coeffs)
    : ctx_(ctx) {
    std::sort(coeffs.begin(), coeffs.end());
    for (const auto& [exp, c] : coeffs) {
        if (exp < 3 || exp % 2 == 0) {
            throw std::invalid_argument("trace polynomial exponents must be odd and at least 3");
        }
        if (c >= ctx_.order()) throw std::invalid_argument("trace polynomial coefficient out of range");
        if (c == 0) continue;
        if (!coeffs_.empty() && coeffs_.back().first == exp) {
            throw std::invalid_argument("duplicate trace polynomial exponent");
        }
        coeffs_.emplace_back(exp, c);
    }
}

uint32_t TracePolynomial::evaluate(uint32_t x) const {
    uint32_t acc = 0;
    for (const auto& [exp, c] : coeffs_) {
        acc ^= ctx_.mul(c, ctx_.pow(x, uint64_t(exp)));
    }
    return acc;
}

int dualbch_max_degree(const FieldContext& ctx) {
    const int isq = int(std::floor(std::sqrt(double(ctx.order())) + 1e-9));
    return std::max(3, isq);
}

namespace {

// The entry at (x, y) depends on x + y only, so one pass over the field
// fills the whole matrix.
MatrixWord matrix_from_sum_table(const FieldContext& field, const std::vector<int>& bit_of_sum) {
    const int n = int(field.order());
    MatrixWord w(FieldContext::binary(), n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) w.set(x, y, bit_of_sum[size_t(x ^ y)]);
    }
    return w;
}

}  // namespace

MatrixWord warmup_codeword(uint32_t alpha, const FieldContext& ctx) {
    if (ctx.t() > 12) throw BudgetError("warmup codeword materialization capped at t = 12");
    const int n = int(ctx.order());
    std::vector<int> tab(n);
    for (int z = 0; z < n; ++z) {
        const uint32_t z3 = ctx.mul(uint32_t(z), ctx.mul(uint32_t(z), uint32_t(z)));
        tab[z] = ctx.trace(ctx.mul(alpha, z3));
    }
    return matrix_from_sum_table(ctx, tab);
}

MatrixWord dualbch_codeword(const TracePolynomial& f) {
    const auto& ctx = f.ctx();
    if (ctx.t() > 12) throw BudgetError("dual-BCH codeword materialization capped at t = 12");
    const int n = int(ctx.order());
    std::vector<int> tab(n);
    for (int z = 0; z < n; ++z) tab[z] = ctx.trace(f.evaluate(uint32_t(z)));
    return matrix_from_sum_table(ctx, tab);
}

DualBchBasis dualbch_basis(const FieldContext& ctx, int d) {
    if (d < 3 || d > dualbch_max_degree(ctx)) {
        throw std::invalid_argument("dual-BCH degree must satisfy 3 <= d <= max(3, floor(2^{t/2}))");
    }
    const int t = ctx.t();
    int odd_count = 0;
    std::vector<MatrixWord> basis;
    for (int j = 3; j <= d; j += 2) {
        ++odd_count;
        for (int i = 0; i < t; ++i) {
            TracePolynomial f(ctx, {{j, uint32_t(1) << i}});
            basis.push_back(dualbch_codeword(f));
        }
    }
    // Rank-reduce: the map f -> M_f can have a kernel at small t.
    linalg::IncrementalBasisF2 inc;
    std::vector<MatrixWord> kept;
    for (auto& m : basis) {
        if (inc.add(linalg::pack_bits(m.entries()))) kept.push_back(std::move(m));
    }
    GraphCode code(FieldContext::binary(), int(ctx.order()), std::move(kept), /*directed=*/false,
                   /*symmetric_zero_diag=*/true);
    return DualBchBasis{std::move(code), ctx, d, t * odd_count};
}

long long character_sum(const std::vector<uint32_t>& poly, const FieldContext& ctx) {
    if (ctx.t() > 24) throw std::invalid_argument("character sum domain capped at t = 24");
    long long sum = 0;
    const uint32_t q = ctx.order();
    for (uint32_t x = 0; x < q; ++x) {
        uint32_t acc = 0;  // Horner, highest degree first
        for (size_t i = poly.size(); i-- > 0;) {
            acc = ctx.mul(acc, x) ^ poly[i];
        }
        sum += ctx.trace(acc) ? -1 : 1;
    }
    return sum;
}

std::vector<uint32_t> odd_degree_reduction(const std::vector<uint32_t>& poly,
                                           const FieldContext& ctx) {
    std::vector<uint32_t> out(poly.size(), 0);
    if (!poly.empty()) out[0] = poly[0];
    for (size_t i = 1; i < poly.size(); ++i) {
        uint32_t c = poly[i];
        if (c == 0) continue;
        const int k = std::countr_zero(uint64_t(i));
        const size_t j = i >> k;
        for (int s = 0; s < k; ++s) c = ctx.sqrt(c);
        out[j] ^= c;
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

namespace {

// Sign-vector masks: bit x of mask[exp][c] is Tr(c * x^exp).
std::vector<std::vector<uint64_t>> sign_masks(const FieldContext& ctx, int degree) {
    const uint32_t q = ctx.order();
    std::vector<std::vector<uint64_t>> mask(size_t(degree) + 1, std::vector<uint64_t>(q, 0));
    for (uint32_t x = 0; x < q; ++x) {
        uint32_t p = 1;  // x^exp
        for (int exp = 0; exp <= degree; ++exp) {
            for (uint32_t c = 1; c < q; ++c) {
                if (ctx.trace(ctx.mul(c, p))) mask[exp][c] |= uint64_t(1) << x;
            }
            p = ctx.mul(p, x);
        }
    }
    return mask;
}

}  // namespace

namespace {

struct ScanChunk {
    long long max_abs = -1;
    uint64_t violations = 0;
    std::vector<uint32_t> worst;
};

// Enumerates digits 1..degree-1 with digit degree-1 restricted to
// [top_lo, top_hi); the sign vector is updated incrementally per coefficient
// bump (odometer order: low exponents fastest).
ScanChunk scan_top_range(const std::vector<std::vector<uint64_t>>& mask, uint32_t q, int degree,
                         long long bound_sq, uint32_t top_lo, uint32_t top_hi) {
    ScanChunk chunk;
    const int n = int(q);
    const uint64_t full = q == 64 ? ~uint64_t(0) : ((uint64_t(1) << q) - 1);
    std::vector<uint32_t> digit(size_t(degree), 0);

    const auto process = [&](uint64_t sign_bits) {
        const long long s = (long long)n - 2 * (long long)std::popcount(sign_bits & full);
        const long long a = s < 0 ? -s : s;
        if (s * s > bound_sq) ++chunk.violations;
        if (a > chunk.max_abs) {
            chunk.max_abs = a;
            chunk.worst.assign(digit.begin(), digit.end());
            chunk.worst.push_back(1);  // leading coefficient
        }
    };

    uint64_t inner = 1;  // q^{degree-2} states below the top digit
    for (int i = 1; i + 1 < degree; ++i) inner *= q;

    for (uint32_t top = top_lo; top < top_hi; ++top) {
        for (size_t i = 1; i + 1 < size_t(degree); ++i) digit[i] = 0;
        uint64_t v = mask[degree][1];
        if (degree >= 2) {
            digit[size_t(degree) - 1] = top;
            v ^= mask[size_t(degree) - 1][top];
        }
        process(v);
        for (uint64_t step = 1; step < inner; ++step) {
            size_t d = 1;
            while (true) {
                const uint32_t old = digit[d];
                const uint32_t nxt = uint32_t((old + 1) & (q - 1));
                digit[d] = nxt;
                v ^= mask[d][old ^ nxt];
                if (nxt != 0) break;
                ++d;
            }
            process(v);
        }
        if (degree < 2) break;  // no top digit to sweep
    }
    return chunk;
}

}  // namespace

WeilClassResult weil_scan_exhaustive(const FieldContext& ctx, int degree, int threads) {
    if (ctx.t() > 6) throw BudgetError("exhaustive scan requires 2^t <= 64; use the sampled mode");
    if (degree < 1 || degree % 2 == 0) throw std::invalid_argument("scan degree must be odd");
    if (threads < 1) throw std::invalid_argument("thread count must be positive");
    const uint32_t q = ctx.order();
    uint64_t combos = 1;  // q^{degree-1} lower-coefficient combinations
    for (int i = 1; i < degree; ++i) {
        combos *= q;
        if (combos > (uint64_t(1) << 36)) {
            throw BudgetError("exhaustive scan would exceed 2^36 states; use the sampled mode");
        }
    }

    const auto mask = sign_masks(ctx, degree);
    const long long bound_sq = (long long)(degree - 1) * (degree - 1) * int(q);

    // Chunk the top free coefficient; merging in range order keeps the
    // result identical to a sequential scan.
    std::vector<std::pair<uint32_t, uint32_t>> ranges;
    if (degree < 2 || threads == 1) {
        ranges.emplace_back(0, degree < 2 ? 1 : q);
    } else {
        const uint32_t workers = std::min<uint32_t>(uint32_t(threads), q);
        for (uint32_t w = 0; w < workers; ++w) {
            const uint32_t lo = q * w / workers, hi = q * (w + 1) / workers;
            if (lo < hi) ranges.emplace_back(lo, hi);
        }
    }
    std::vector<ScanChunk> chunks(ranges.size());
    if (ranges.size() == 1) {
        chunks[0] = scan_top_range(mask, q, degree, bound_sq, ranges[0].first, ranges[0].second);
    } else {
        std::vector<std::thread> pool;
        for (size_t i = 0; i < ranges.size(); ++i) {
            pool.emplace_back([&, i] {
                chunks[i] = scan_top_range(mask, q, degree, bound_sq, ranges[i].first,
                                           ranges[i].second);
            });
        }
        for (auto& th : pool) th.join();
    }

    WeilClassResult res;
    res.t = ctx.t();
    res.degree = degree;
    res.exhaustive = true;
    res.bound = double(degree - 1) * std::sqrt(double(q));
    for (const auto& c : chunks) {
        res.violations += c.violations;
        if (c.max_abs > res.max_abs || res.worst.empty()) {
            res.max_abs = c.max_abs;
            res.worst = c.worst;
        }
    }
    // Constant terms only flip the sign of the sum, so each enumerated
    // polynomial stands for q constant shifts with identical |sum|.
    res.count = combos * q;
    return res;
}

WeilClassResult weil_scan_sampled(const FieldContext& ctx, int degree, uint64_t samples,
                                  uint64_t seed) {
    if (degree < 1 || degree % 2 == 0) throw std::invalid_argument("scan degree must be odd");
    if (samples == 0) throw std::invalid_argument("sampled scan requires a positive sample count");
    const uint64_t q = ctx.order();
    const long long bound_sq = (long long)(degree - 1) * (degree - 1) * (long long)q;

    WeilClassResult res;
    res.t = ctx.t();
    res.degree = degree;
    res.exhaustive = false;
    res.bound = double(degree - 1) * std::sqrt(double(q));
    res.count = samples;

    SplitMix64 rng(seed);
    long long max_abs = -1;
    for (uint64_t s = 0; s < samples; ++s) {
        std::vector<uint32_t> poly(size_t(degree) + 1, 0);
        poly[size_t(degree)] = 1;
        for (int i = 0; i < degree; ++i) poly[size_t(i)] = uint32_t(rng.below(q));
        const long long v = character_sum(poly, ctx);
        const long long a = v < 0 ? -v : v;
        if (v * v > bound_sq) ++res.violations;
        if (a > max_abs) {
            max_abs = a;
            res.worst = poly;
        }
    }
    res.max_abs = max_abs;
    return res;
}

}  // namespace graphcodes
