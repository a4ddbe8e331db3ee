#include "graphcodes/linear_code.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "graphcodes/linalg.hpp"
#include "graphcodes/rng.hpp"

namespace graphcodes {

namespace {

std::vector<std::vector<uint16_t>> generator_rows(const LinearCode& c) {
    std::vector<std::vector<uint16_t>> rows;
    rows.reserve(c.k());
    for (int i = 0; i < c.k(); ++i) rows.push_back(c.row(i));
    return rows;
}

int weight(const std::vector<uint16_t>& v) {
    int w = 0;
    for (uint16_t x : v)
        if (x) ++w;
    return w;
}

}  // namespace

LinearCode::LinearCode(FieldContext ctx, int n, int k, std::vector<uint16_t> generator,
                       std::vector<uint16_t> eval_points)
    : ctx_(ctx), n_(n), k_(k), generator_(std::move(generator)), eval_points_(std::move(eval_points)) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("bad code parameters");
    if (generator_.size() != size_t(n) * k) throw std::invalid_argument("generator shape mismatch");
    std::vector<std::vector<uint16_t>> rows;
    for (int i = 0; i < k; ++i)
        rows.emplace_back(generator_.begin() + size_t(i) * n, generator_.begin() + size_t(i + 1) * n);
    if (linalg::rank(rows, ctx_) != k) throw std::invalid_argument("generator is rank deficient");
    if (!eval_points_.empty()) {
        if (int(eval_points_.size()) != n) throw std::invalid_argument("eval point count mismatch");
        auto sorted = eval_points_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("eval points must be pairwise distinct");
        }
    }
}

std::vector<uint16_t> LinearCode::encode(const std::vector<uint16_t>& message) const {
    if (int(message.size()) != k_) throw std::invalid_argument("message length mismatch");
    std::vector<uint16_t> w(n_, 0);
    for (int i = 0; i < k_; ++i) {
        const uint32_t m = message[i];
        if (m == 0) continue;
        for (int j = 0; j < n_; ++j) w[j] ^= uint16_t(ctx_.mul(m, gen(i, j)));
    }
    return w;
}

std::vector<uint16_t> LinearCode::row(int i) const {
    return std::vector<uint16_t>(generator_.begin() + size_t(i) * n_,
                                 generator_.begin() + size_t(i + 1) * n_);
}

LinearCode rs_generate(int n, int k, const FieldContext& ctx) {
    if (n > int(ctx.order())) throw std::invalid_argument("RS requires n <= q");
    if (k < 1 || k > n) throw std::invalid_argument("RS requires 1 <= k <= n");
    std::vector<uint16_t> pts(n);
    for (int j = 0; j < n; ++j) pts[j] = uint16_t(j);
    std::vector<uint16_t> gen(size_t(k) * n);
    for (int j = 0; j < n; ++j) {
        uint32_t p = 1;  // pts[j]^i
        for (int i = 0; i < k; ++i) {
            gen[size_t(i) * n + j] = uint16_t(p);
            p = ctx.mul(p, pts[j]);
        }
    }
    return LinearCode(ctx, n, k, std::move(gen), std::move(pts));
}

SystematicForm systematic_form(const LinearCode& c) {
    const auto& ctx = c.ctx();
    const int n = c.n(), k = c.k();
    auto rows = generator_rows(c);

    // Gauss-Jordan with column pivot tracking.
    std::vector<int> pivot_cols;
    int r = 0;
    for (int col = 0; col < n && r < k; ++col) {
        int p = r;
        while (p < k && rows[p][col] == 0) ++p;
        if (p == k) continue;
        std::swap(rows[r], rows[p]);
        const uint32_t s = ctx.inv(rows[r][col]);
        if (s != 1)
            for (int j = 0; j < n; ++j) rows[r][j] = uint16_t(ctx.mul(s, rows[r][j]));
        for (int i = 0; i < k; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const uint32_t f = rows[i][col];
            for (int j = 0; j < n; ++j) rows[i][j] ^= uint16_t(ctx.mul(f, rows[r][j]));
        }
        pivot_cols.push_back(col);
        ++r;
    }
    if (r < k) throw std::invalid_argument("systematic form of a rank-deficient generator");

    std::vector<int> col_perm = pivot_cols;
    std::vector<char> is_pivot(n, 0);
    for (int col : pivot_cols) is_pivot[col] = 1;
    for (int col = 0; col < n; ++col)
        if (!is_pivot[col]) col_perm.push_back(col);

    std::vector<uint16_t> gen(size_t(k) * n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) gen[size_t(i) * n + j] = rows[i][col_perm[j]];
    return SystematicForm{LinearCode(ctx, n, k, std::move(gen)), std::move(col_perm)};
}

DistanceReport hamming_min_distance(const LinearCode& c, const HammingDistanceOptions& opt) {
    const auto& ctx = c.ctx();
    const int k = c.k();
    const uint64_t q = ctx.order();

    // q^k, saturating.
    uint64_t total = 1;
    bool over = false;
    for (int i = 0; i < k && !over; ++i) {
        over = total > opt.exact_budget / q;
        if (!over) total *= q;
    }
    if (over) total = opt.exact_budget + 1;

    DistanceReport rep;
    rep.metric = Metric::Hamming;

    if (total <= opt.exact_budget) {
        // Odometer enumeration with incremental codeword updates: bumping
        // message digit i by delta adds delta * row_i to the word.
        std::vector<uint16_t> msg(k, 0);
        std::vector<uint16_t> word(c.n(), 0);
        int best = c.n() + 1;
        std::vector<uint16_t> best_msg;
        const auto rows = generator_rows(c);
        for (uint64_t idx = 1; idx < total; ++idx) {
            int d = 0;
            while (true) {
                const uint32_t old = msg[d];
                const uint32_t nxt = (old + 1) % q;
                msg[d] = uint16_t(nxt);
                const uint32_t delta = old ^ nxt;
                for (int j = 0; j < c.n(); ++j) word[j] ^= uint16_t(ctx.mul(delta, rows[d][j]));
                if (nxt != 0) break;
                ++d;
            }
            const int w = weight(word);
            if (w < best) {
                best = w;
                best_msg = msg;
            }
        }
        rep.mode = DistanceReport::Mode::Exact;
        rep.value = best;
        rep.witness_message.assign(best_msg.begin(), best_msg.end());
        return rep;
    }

    if (!opt.allow_sampled) {
        throw std::invalid_argument("q^k exceeds the exact enumeration budget; sampled mode required");
    }
    if (opt.samples == 0) throw std::invalid_argument("sampled mode requires a positive sample count");
    SplitMix64 rng(opt.seed);
    int best = c.n() + 1;
    std::vector<uint16_t> best_msg;
    for (uint64_t s = 0; s < opt.samples; ++s) {
        std::vector<uint16_t> msg(k);
        bool nonzero = false;
        while (!nonzero) {
            for (int i = 0; i < k; ++i) {
                msg[i] = uint16_t(rng.below(q));
                nonzero |= msg[i] != 0;
            }
        }
        const int w = weight(c.encode(msg));
        if (w < best) {
            best = w;
            best_msg = msg;
        }
    }
    rep.mode = DistanceReport::Mode::Sampled;
    rep.value = best;
    rep.witness_message.assign(best_msg.begin(), best_msg.end());
    rep.samples = opt.samples;
    rep.seed = opt.seed;
    return rep;
}

LinearCode wozencraft_code(int k, uint32_t index) {
    if (k < 1 || k > 16) throw std::invalid_argument("wozencraft: k must be in 1..16");
    FieldContext fk(k);
    if (index == 0 || index >= fk.order()) throw std::invalid_argument("wozencraft: index must be a nonzero field element");
    FieldContext f2 = FieldContext::binary();
    const int n = 2 * k;
    std::vector<uint16_t> gen(size_t(k) * n, 0);
    for (int i = 0; i < k; ++i) {
        const uint32_t basis = uint32_t(1) << i;        // X^i
        const uint32_t prod = fk.mul(index, basis);     // index * X^i
        gen[size_t(i) * n + i] = 1;
        for (int j = 0; j < k; ++j) gen[size_t(i) * n + k + j] = uint16_t((prod >> j) & 1u);
    }
    return LinearCode(f2, n, k, std::move(gen));
}

void write_linear_code(std::ostream& os, const LinearCode& c) {
    os << "q=" << element_hex(c.ctx().modulus()) << " n=" << c.n() << " k=" << c.k() << "\n";
    for (int i = 0; i < c.k(); ++i) {
        for (int j = 0; j < c.n(); ++j) {
            if (j) os << ' ';
            os << element_hex(c.gen(i, j));
        }
        os << "\n";
    }
}

LinearCode read_linear_code(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::invalid_argument("missing code header");
    uint32_t mod = 0;
    int n = 0, k = 0;
    if (std::sscanf(header.c_str(), "q=%x n=%d k=%d", &mod, &n, &k) != 3) {
        throw std::invalid_argument("bad code header: " + header);
    }
    int t = 0;
    for (uint32_t m = mod; m > 1; m >>= 1) ++t;
    FieldContext ctx(t, mod);
    std::vector<uint16_t> gen(size_t(k) * n);
    for (int i = 0; i < k; ++i) {
        std::string line;
        if (!std::getline(is, line)) throw std::invalid_argument("truncated generator");
        std::istringstream ls(line);
        std::string tok;
        for (int j = 0; j < n; ++j) {
            if (!(ls >> tok)) throw std::invalid_argument("short generator row");
            gen[size_t(i) * n + j] = uint16_t(parse_element_hex(tok, ctx));
        }
    }
    return LinearCode(ctx, n, k, std::move(gen));
}

}  // namespace graphcodes
