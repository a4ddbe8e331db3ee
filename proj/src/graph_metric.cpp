#include "graphcodes/graph_metric.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "graphcodes/errors.hpp"
#include "graphcodes/linalg.hpp"
#include "graphcodes/rng.hpp"

namespace graphcodes {

namespace {

using Clock = std::chrono::steady_clock;

// Exact maximum clique on at most 64 vertices: branch and bound with a
// greedy-coloring upper bound, candidates processed in reverse color order.
class MaxCliqueSolver {
public:
    MaxCliqueSolver(const std::vector<uint64_t>& adj, int n, Clock::time_point deadline)
        : adj_(adj), n_(n), deadline_(deadline) {}

    // Searches only for cliques strictly larger than `seed`; the return value
    // is max(seed, clique number). The witness is filled only on improvement,
    // so a caller passing a seed can cheaply test "is the optimum > seed".
    int solve(int seed, uint64_t* witness = nullptr) {
        best_ = seed;
        improved_ = false;
        const uint64_t all = n_ == 64 ? ~uint64_t(0) : ((uint64_t(1) << n_) - 1);
        expand(all, 0, 0);
        if (witness != nullptr && improved_) *witness = best_set_;
        return best_;
    }

    bool improved() const { return improved_; }

private:
    void expand(uint64_t cand, uint64_t cur, int cur_size) {
        if ((++nodes_ & 0x1fffu) == 0 && Clock::now() > deadline_) {
            throw BudgetError("independent-set oracle exceeded its soft time cap");
        }
        if (cand == 0) {
            if (cur_size > best_) {
                best_ = cur_size;
                best_set_ = cur;
                improved_ = true;
            }
            return;
        }
        int order_v[64];
        int order_c[64];
        int m = 0;
        uint64_t uncolored = cand;
        int color = 0;
        while (uncolored) {
            ++color;
            uint64_t avail = uncolored;
            while (avail) {
                const int v = std::countr_zero(avail);
                order_v[m] = v;
                order_c[m] = color;
                ++m;
                uncolored &= ~(uint64_t(1) << v);
                avail &= ~adj_[v];
                avail &= ~(uint64_t(1) << v);
            }
        }
        uint64_t rem = cand;
        for (int i = m - 1; i >= 0; --i) {
            if (cur_size + order_c[i] <= best_) return;
            const int v = order_v[i];
            expand(rem & adj_[v], cur | (uint64_t(1) << v), cur_size + 1);
            rem &= ~(uint64_t(1) << v);
        }
    }

    const std::vector<uint64_t>& adj_;
    int n_;
    Clock::time_point deadline_;
    int best_ = 0;
    uint64_t best_set_ = 0;
    bool improved_ = false;
    uint64_t nodes_ = 0;
};

// Support-graph adjacency masks of the off-diagonal nonzero pattern.
std::vector<uint64_t> support_adjacency(const MatrixWord& w) {
    const int n = w.n();
    if (n > 64) throw BudgetError("exact undirected oracle capped at 64 vertices");
    std::vector<uint64_t> adj(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (w.at(i, j) != 0) {
                adj[i] |= uint64_t(1) << j;
                adj[j] |= uint64_t(1) << i;
            }
        }
    }
    return adj;
}

std::vector<uint64_t> complement_adjacency(const std::vector<uint64_t>& adj) {
    const int n = int(adj.size());
    const uint64_t all = n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    std::vector<uint64_t> comp(n);
    for (int i = 0; i < n; ++i) comp[i] = (~adj[i]) & all & ~(uint64_t(1) << i);
    return comp;
}

std::vector<int> mask_to_list(uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// Max independent set = max clique of the complement. Same seed semantics.
int mis_seeded(const std::vector<uint64_t>& adj, int seed, uint64_t* witness,
               Clock::time_point deadline, bool* improved = nullptr) {
    const auto comp = complement_adjacency(adj);
    MaxCliqueSolver solver(comp, int(adj.size()), deadline);
    const int r = solver.solve(seed, witness);
    if (improved != nullptr) *improved = solver.improved();
    return r;
}

// Bounded vertex-cover value of the support graph: exact if < ub, else ub.
int vertex_cover_bounded(const MatrixWord& w, int ub, CoverWitness* witness,
                         Clock::time_point deadline) {
    const int n = w.n();
    const auto adj = support_adjacency(w);
    uint64_t set = 0;
    bool improved = false;
    const int mis = mis_seeded(adj, n - ub, witness != nullptr ? &set : nullptr, deadline, &improved);
    if (mis == n - ub && !improved) return ub;
    if (witness != nullptr) {
        witness->rows.clear();
        for (int v = 0; v < n; ++v) {
            if (!(set & (uint64_t(1) << v))) witness->rows.push_back(v);
        }
        witness->cols = witness->rows;
    }
    return n - mis;
}

// The directed distance of a word equals n minus the largest balanced
// all-zero submatrix (row set R, column set C, |R| = |C|): deleting the
// complements of R and C is a cover, and vice versa. The solver maximizes
// min(|R|, |C|) by branching over rows in a fixed order, maintaining the
// intersection of zero-column masks, with the bound min(r + remaining, |C|).
class ZeroBoxSolver {
public:
    ZeroBoxSolver(const MatrixWord& w, Clock::time_point deadline)
        : n_(w.n()), words_((n_ + 63) / 64), deadline_(deadline) {
        zrow_.assign(n_, std::vector<uint64_t>(words_, 0));
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (w.at(i, j) == 0) zrow_[i][j / 64] |= uint64_t(1) << (j % 64);
            }
        }
        if (n_ % 64 != 0) {
            // mask off the bits beyond column n-1
            for (int i = 0; i < n_; ++i) zrow_[i][words_ - 1] &= (uint64_t(1) << (n_ % 64)) - 1;
        }
        // rows with many zero columns first
        order_.resize(n_);
        for (int i = 0; i < n_; ++i) order_[i] = i;
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return count(zrow_[a]) > count(zrow_[b]);
        });
    }

    // Searches for balanced zero boxes strictly larger than `seed`; returns
    // max(seed, beta). The witness (box rows/cols) is filled on improvement.
    int solve(int seed, std::vector<int>* box_rows, std::vector<int>* box_cols) {
        best_ = seed;
        improved_ = false;
        box_rows_ = box_rows;
        box_cols_ = box_cols;
        std::vector<uint64_t> all(words_, ~uint64_t(0));
        if (n_ % 64 != 0) all[words_ - 1] = (uint64_t(1) << (n_ % 64)) - 1;
        std::vector<int> rows;
        greedy_seed(all);
        rec(0, rows, all);
        return best_;
    }

    bool improved() const { return improved_; }

private:
    static int count(const std::vector<uint64_t>& m) {
        int c = 0;
        for (uint64_t w : m) c += std::popcount(w);
        return c;
    }

    void record(const std::vector<int>& rows, const std::vector<uint64_t>& cols, int val) {
        best_ = val;
        improved_ = true;
        if (box_rows_ == nullptr) return;
        box_rows_->assign(rows.begin(), rows.begin() + std::min<size_t>(rows.size(), size_t(val)));
        box_cols_->clear();
        for (int j = 0; j < n_ && int(box_cols_->size()) < val; ++j) {
            if (cols[j / 64] & (uint64_t(1) << (j % 64))) box_cols_->push_back(j);
        }
    }

    // Initial incumbent: repeatedly add the row keeping the most zero
    // columns, recording the best balanced value along the way.
    void greedy_seed(const std::vector<uint64_t>& all) {
        std::vector<uint64_t> cols = all;
        std::vector<int> rows;
        std::vector<char> used(n_, 0);
        for (int step = 0; step < n_; ++step) {
            int pick = -1, pick_c = -1;
            for (int i = 0; i < n_; ++i) {
                if (used[i]) continue;
                std::vector<uint64_t> inter(words_);
                for (int w = 0; w < words_; ++w) inter[w] = cols[w] & zrow_[i][w];
                const int c = count(inter);
                if (c > pick_c) {
                    pick = i;
                    pick_c = c;
                }
            }
            if (pick < 0 || pick_c == 0) break;
            used[pick] = 1;
            rows.push_back(pick);
            for (int w = 0; w < words_; ++w) cols[w] &= zrow_[pick][w];
            const int val = std::min(int(rows.size()), pick_c);
            if (val > best_) record(rows, cols, val);
        }
    }

    void rec(int idx, std::vector<int>& rows, const std::vector<uint64_t>& cols) {
        if ((++nodes_ & 0xfffu) == 0 && Clock::now() > deadline_) {
            throw BudgetError("directed-distance oracle exceeded its soft time cap");
        }
        const int c = count(cols);
        const int r = int(rows.size());
        if (std::min(r, c) > best_) record(rows, cols, std::min(r, c));
        if (idx == n_) return;
        if (std::min(r + (n_ - idx), c) <= best_) return;

        const int row = order_[idx];
        std::vector<uint64_t> inter(words_);
        bool nonempty = false;
        for (int w = 0; w < words_; ++w) {
            inter[w] = cols[w] & zrow_[row][w];
            nonempty |= inter[w] != 0;
        }
        if (nonempty) {
            rows.push_back(row);
            rec(idx + 1, rows, inter);
            rows.pop_back();
        }
        rec(idx + 1, rows, cols);
    }

    int n_;
    int words_;
    Clock::time_point deadline_;
    std::vector<std::vector<uint64_t>> zrow_;
    std::vector<int> order_;
    int best_ = 0;
    bool improved_ = false;
    uint64_t nodes_ = 0;
    std::vector<int>* box_rows_ = nullptr;
    std::vector<int>* box_cols_ = nullptr;
};

// Bounded directed distance: exact if < ub, else ub. The witness cover is
// the complement of the certifying balanced zero box.
int directed_distance_bounded(const MatrixWord& w, int ub, CoverWitness* witness,
                              Clock::time_point deadline) {
    const int n = w.n();
    ZeroBoxSolver solver(w, deadline);
    std::vector<int> box_rows, box_cols;
    const int beta = solver.solve(n - ub, witness != nullptr ? &box_rows : nullptr,
                                  witness != nullptr ? &box_cols : nullptr);
    if (!solver.improved()) return ub;
    if (witness != nullptr) {
        witness->rows.clear();
        witness->cols.clear();
        std::vector<char> in_r(n, 0), in_c(n, 0);
        for (int i : box_rows) in_r[i] = 1;
        for (int j : box_cols) in_c[j] = 1;
        for (int i = 0; i < n; ++i) {
            if (!in_r[i]) witness->rows.push_back(i);
            if (!in_c[i]) witness->cols.push_back(i);
        }
    }
    return n - beta;
}

void pad_witness(CoverWitness* w, int d, int n) {
    if (w == nullptr) return;
    auto pad = [&](std::vector<int>& v) {
        std::vector<char> used(n, 0);
        for (int x : v) used[x] = 1;
        for (int x = 0; int(v.size()) < d && x < n; ++x) {
            if (!used[x]) {
                v.push_back(x);
                used[x] = 1;
            }
        }
        std::sort(v.begin(), v.end());
    };
    pad(w->rows);
    pad(w->cols);
}

Clock::time_point default_deadline() { return Clock::now() + std::chrono::seconds(60); }

void require_graph_word(const MatrixWord& w, const char* what) {
    if (!w.is_graph_word()) {
        throw std::invalid_argument(std::string(what) + " requires symmetric zero-diagonal words");
    }
}

}  // namespace

int graph_distance(const MatrixWord& g, const MatrixWord& h, CoverWitness* witness) {
    require_same_shape(g, h);
    require_graph_word(g, "graph_distance");
    require_graph_word(h, "graph_distance");
    const MatrixWord diff = g + h;  // characteristic 2
    const int d = vertex_cover_bounded(diff, g.n() + 1, witness, default_deadline());
    if (witness != nullptr) pad_witness(witness, d, g.n());
    return d;
}

int directed_graph_distance(const MatrixWord& a, const MatrixWord& b, CoverWitness* witness) {
    require_same_shape(a, b);
    const MatrixWord diff = a + b;
    const int d = directed_distance_bounded(diff, a.n() + 1, witness, default_deadline());
    if (witness != nullptr) pad_witness(witness, d, a.n());
    return d;
}

int independence_number(const MatrixWord& g, std::vector<int>* witness) {
    if (g.ctx().t() != 1) throw std::invalid_argument("independence_number requires a binary graph");
    require_graph_word(g, "independence_number");
    uint64_t set = 0;
    const int r = mis_seeded(support_adjacency(g), -1, &set, default_deadline());
    if (witness != nullptr) *witness = mask_to_list(set);
    return r;
}

int clique_number(const MatrixWord& g, std::vector<int>* witness) {
    if (g.ctx().t() != 1) throw std::invalid_argument("clique_number requires a binary graph");
    require_graph_word(g, "clique_number");
    const auto adj = support_adjacency(g);
    MaxCliqueSolver solver(adj, g.n(), default_deadline());
    uint64_t set = 0;
    const int r = solver.solve(-1, &set);
    if (witness != nullptr) *witness = mask_to_list(set);
    return r;
}

GraphCode::GraphCode(FieldContext ctx, int n, std::vector<MatrixWord> basis, bool directed,
                     bool symmetric_zero_diag, std::optional<Rational> claimed)
    : GraphCode(ctx, ctx, n, std::move(basis), directed, symmetric_zero_diag, std::move(claimed)) {}

GraphCode::GraphCode(FieldContext ctx, FieldContext scalar, int n, std::vector<MatrixWord> basis,
                     bool directed, bool symmetric_zero_diag, std::optional<Rational> claimed)
    : ctx_(ctx),
      scalar_(scalar),
      n_(n),
      basis_(std::move(basis)),
      directed_(directed),
      symmetric_zero_diag_(symmetric_zero_diag),
      claimed_(std::move(claimed)) {
    if (!(scalar_ == ctx_) && scalar_.t() != 1) {
        throw std::invalid_argument("scalar field must be the alphabet itself or F_2");
    }
    for (const auto& b : basis_) {
        if (b.n() != n_ || !(b.ctx() == ctx_)) throw std::invalid_argument("basis element shape mismatch");
        if (symmetric_zero_diag_ && !b.is_graph_word()) {
            throw std::invalid_argument("symmetric zero-diagonal code with a non-graph basis element");
        }
    }
    // Basis independence over the scalar field.
    if (scalar_.t() == 1) {
        linalg::IncrementalBasisF2 inc;
        for (const auto& b : basis_) {
            std::vector<uint64_t> packed((b.entries().size() * ctx_.t() + 63) / 64, 0);
            size_t bit = 0;
            for (uint16_t e : b.entries()) {
                for (int k = 0; k < ctx_.t(); ++k, ++bit) {
                    if ((e >> k) & 1u) packed[bit / 64] |= uint64_t(1) << (bit % 64);
                }
            }
            if (!inc.add(std::move(packed))) {
                throw std::invalid_argument("basis elements are linearly dependent");
            }
        }
    } else {
        std::vector<std::vector<uint16_t>> rows;
        rows.reserve(basis_.size());
        for (const auto& b : basis_) rows.push_back(linalg::flatten(b));
        if (linalg::rank(std::move(rows), ctx_) != int(basis_.size())) {
            throw std::invalid_argument("basis elements are linearly dependent");
        }
    }
}

double GraphCode::rate() const {
    const double qary_dim = double(dimension_bits()) / double(ctx_.t());
    const double positions = directed_ ? double(n_) * n_ : double(n_) * (n_ - 1) / 2.0;
    return qary_dim / positions;
}

MatrixWord GraphCode::codeword(const std::vector<uint32_t>& coeffs) const {
    if (coeffs.size() != basis_.size()) throw std::invalid_argument("coefficient count mismatch");
    MatrixWord w(ctx_, n_);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= scalar_.order()) throw std::invalid_argument("coefficient out of scalar range");
        w.add_scaled(basis_[i], coeffs[i]);
    }
    return w;
}

DistanceReport code_distance(const GraphCode& c, const CodeDistanceOptions& opt) {
    if (c.dimension() == 0) {
        throw std::invalid_argument("distance of a zero-dimensional code is undefined");
    }
    const Metric metric =
        opt.metric.value_or(c.directed() ? Metric::DirectedGraph : Metric::Graph);
    if (metric == Metric::Hamming) throw std::invalid_argument("code_distance is a graph-metric oracle");
    if (metric == Metric::Graph && !c.symmetric_zero_diag()) {
        throw std::invalid_argument("undirected metric requires a symmetric zero-diagonal code");
    }

    const uint64_t q = c.scalar().order();
    const int dim = c.dimension();
    uint64_t total = 1;
    bool overflow = false;
    for (int i = 0; i < dim; ++i) {
        if (total > opt.exact_budget / q) {
            overflow = true;
            break;
        }
        total *= q;
    }
    const bool exact = opt.mode == CodeDistanceOptions::Mode::Exact ||
                       (opt.mode == CodeDistanceOptions::Mode::Auto && !overflow && total <= opt.exact_budget);
    if (exact && (overflow || total > opt.exact_budget)) {
        throw BudgetError("exact code distance would enumerate more codewords than the budget allows");
    }

    const auto deadline_for = [&] { return Clock::now() + opt.oracle_soft_cap; };
    const auto bounded_distance = [&](const MatrixWord& w, int ub, CoverWitness* witness) {
        if (metric == Metric::Graph) return vertex_cover_bounded(w, ub, witness, deadline_for());
        return directed_distance_bounded(w, ub, witness, deadline_for());
    };

    DistanceReport rep;
    rep.metric = metric;

    int best = c.n() + 1;
    std::vector<uint32_t> best_msg;

    if (exact) {
        std::vector<uint32_t> msg(dim, 0);
        MatrixWord word(c.ctx(), c.n());
        for (uint64_t idx = 1; idx < total; ++idx) {
            int d = 0;
            while (true) {
                const uint32_t old = msg[d];
                const uint32_t nxt = uint32_t((old + 1) % q);
                msg[d] = nxt;
                word.add_scaled(c.basis()[d], old ^ nxt);
                if (nxt != 0) break;
                ++d;
            }
            const int dist = bounded_distance(word, best, nullptr);
            if (dist < best) {
                best = dist;
                best_msg = msg;
            }
        }
        rep.mode = DistanceReport::Mode::Exact;
    } else {
        if (opt.samples == 0) throw std::invalid_argument("sampled mode requires a positive sample count");
        SplitMix64 rng(opt.seed);
        for (uint64_t s = 0; s < opt.samples; ++s) {
            std::vector<uint32_t> msg(dim);
            bool nonzero = false;
            while (!nonzero) {
                for (int i = 0; i < dim; ++i) {
                    msg[i] = uint32_t(rng.below(q));
                    nonzero |= msg[i] != 0;
                }
            }
            const MatrixWord word = c.codeword(msg);
            const int dist = bounded_distance(word, best, nullptr);
            if (dist < best) {
                best = dist;
                best_msg = msg;
            }
        }
        rep.mode = DistanceReport::Mode::Sampled;
        rep.samples = opt.samples;
        rep.seed = opt.seed;
    }

    // Re-derive the witness for the minimizing codeword.
    const MatrixWord winner = c.codeword(best_msg);
    CoverWitness witness;
    const int check = bounded_distance(winner, best + 1, &witness);
    if (check != best) throw std::logic_error("distance witness recomputation disagrees with the scan");
    pad_witness(&witness, best, c.n());

    rep.value = best;
    rep.witness_message = best_msg;
    rep.witness_rows = witness.rows;
    rep.witness_cols = witness.cols;
    return rep;
}

bool singleton_check(const GraphCode& c, const DistanceReport& report) {
    if (!report.exact()) {
        throw std::invalid_argument("singleton check requires an exactly certified report");
    }
    const int64_t m = c.n() - report.value + 1;
    const int64_t bound = m * (m - 1) / 2 * c.ctx().t();
    return int64_t(c.dimension_bits()) <= bound;
}

}  // namespace graphcodes
