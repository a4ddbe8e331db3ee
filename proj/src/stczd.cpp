#include "graphcodes/stczd.hpp"

#include <stdexcept>

#include "graphcodes/linalg.hpp"

namespace graphcodes {

namespace {

// Index of unknown X_{uv}, u < v, in the flattened strict upper triangle.
int pair_index(int u, int v, int k) {
    // offset of row u = sum_{r<u} (k-1-r)
    return u * (k - 1) - u * (u - 1) / 2 + (v - u - 1);
}

}  // namespace

int64_t stczd_dimension_bound(int k, int n) {
    return int64_t(k + 1) * k / 2 - n;
}

GraphCode stczd_basis(const LinearCode& c, std::optional<Rational> claimed) {
    const auto& ctx = c.ctx();
    const int n = c.n(), k = c.k();
    const SystematicForm sf = systematic_form(c);
    const LinearCode& g = sf.code;

    // Linear system on the strict upper triangle of X (X symmetric with zero
    // diagonal): each diagonal entry of A^T X A must vanish, one constraint
    // per non-systematic column.
    const int unknowns = k * (k - 1) / 2;
    std::vector<std::vector<uint16_t>> constraints;
    for (int j = 0; j < n - k; ++j) {
        std::vector<uint16_t> row(unknowns, 0);
        for (int u = 0; u < k; ++u) {
            const uint32_t au = g.gen(u, k + j);
            if (au == 0) continue;
            for (int v = u + 1; v < k; ++v) {
                const uint32_t av = g.gen(v, k + j);
                if (av == 0) continue;
                const uint32_t coeff = ctx.add(ctx.mul(au, av), ctx.mul(av, au));
                row[pair_index(u, v, k)] ^= uint16_t(coeff);
            }
        }
        constraints.push_back(std::move(row));
    }
    const auto solutions = linalg::nullspace(std::move(constraints), unknowns, ctx);

    std::vector<MatrixWord> basis;
    basis.reserve(solutions.size());
    for (const auto& sol : solutions) {
        // Reassemble X from the solution vector.
        std::vector<uint16_t> x(size_t(k) * k, 0);
        for (int u = 0; u < k; ++u) {
            for (int v = u + 1; v < k; ++v) {
                const uint16_t val = sol[pair_index(u, v, k)];
                x[size_t(u) * k + v] = val;
                x[size_t(v) * k + u] = val;
            }
        }
        // P = X * G, then M' = G^T * P, in systematic column order.
        std::vector<uint16_t> p(size_t(k) * n, 0);
        for (int u = 0; u < k; ++u) {
            for (int v = 0; v < k; ++v) {
                const uint32_t xv = x[size_t(u) * k + v];
                if (xv == 0) continue;
                for (int j = 0; j < n; ++j) {
                    p[size_t(u) * n + j] ^= uint16_t(ctx.mul(xv, g.gen(v, j)));
                }
            }
        }
        MatrixWord m(ctx, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                uint32_t acc = 0;
                for (int u = 0; u < k; ++u) acc ^= ctx.mul(g.gen(u, i), p[size_t(u) * n + j]);
                // Undo the systematic column permutation so that rows and
                // columns are codewords of the original c.
                m.set(sf.col_perm[i], sf.col_perm[j], acc);
            }
        }
        basis.push_back(std::move(m));
    }
    return GraphCode(ctx, n, std::move(basis), /*directed=*/false, /*symmetric_zero_diag=*/true,
                     std::move(claimed));
}

namespace {

// Monomial (a, b) of basis element `index`: the symmetric pairs and powers
// enumerated as a <= b <= k-3, a-major.
std::pair<int, int> explicit_monomial(int k, int index) {
    int idx = index;
    for (int a = 0; a + 3 <= k; ++a) {
        const int rowlen = (k - 3) - a + 1;
        if (idx < rowlen) return {a, a + idx};
        idx -= rowlen;
    }
    throw std::invalid_argument("explicit basis index out of range");
}

}  // namespace

uint32_t stczd_rs_explicit_entry(int n, int k, const FieldContext& ctx, int index, int row, int col) {
    if (row < 0 || row >= n || col < 0 || col >= n) throw std::invalid_argument("entry out of range");
    const auto [a, b] = explicit_monomial(k, index);
    const uint32_t x = uint32_t(row), y = uint32_t(col);
    const uint32_t s = ctx.add(x, y);
    const uint32_t s2 = ctx.mul(s, s);
    const uint32_t xa_yb = ctx.mul(ctx.pow(x, uint64_t(a)), ctx.pow(y, uint64_t(b)));
    if (a == b) return ctx.mul(s2, xa_yb);
    const uint32_t xb_ya = ctx.mul(ctx.pow(x, uint64_t(b)), ctx.pow(y, uint64_t(a)));
    return ctx.mul(s2, ctx.add(xa_yb, xb_ya));
}

GraphCode stczd_rs_explicit(int n, int k, const FieldContext& ctx) {
    if (n > int(ctx.order())) throw std::invalid_argument("explicit subcode requires n <= q");
    if (k > n) throw std::invalid_argument("explicit subcode requires k <= n");
    const int dim = k >= 3 ? (k - 2) * (k - 1) / 2 : 0;
    std::vector<MatrixWord> basis;
    basis.reserve(dim);
    for (int e = 0; e < dim; ++e) {
        MatrixWord m(ctx, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m.set(i, j, stczd_rs_explicit_entry(n, k, ctx, e, i, j));
        }
        basis.push_back(std::move(m));
    }
    return GraphCode(ctx, n, std::move(basis), /*directed=*/false, /*symmetric_zero_diag=*/true,
                     Rational(n - k + 1, n));
}

GraphCode tensor_code(const LinearCode& c, std::optional<Rational> claimed) {
    const auto& ctx = c.ctx();
    const int n = c.n(), k = c.k();
    std::vector<MatrixWord> basis;
    basis.reserve(size_t(k) * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            MatrixWord m(ctx, n);
            for (int u = 0; u < n; ++u) {
                const uint32_t gu = c.gen(i, u);
                if (gu == 0) continue;
                for (int v = 0; v < n; ++v) m.set(u, v, ctx.mul(gu, c.gen(j, v)));
            }
            basis.push_back(std::move(m));
        }
    }
    return GraphCode(ctx, n, std::move(basis), /*directed=*/true, /*symmetric_zero_diag=*/false,
                     std::move(claimed));
}

}  // namespace graphcodes
