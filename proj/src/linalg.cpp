#include "graphcodes/linalg.hpp"

#include <bit>
#include <stdexcept>

namespace graphcodes::linalg {

namespace {

// Row-echelon elimination in place; returns pivot (row, col) pairs.
std::vector<std::pair<int, int>> eliminate(std::vector<std::vector<uint16_t>>& rows,
                                           const FieldContext& ctx) {
    std::vector<std::pair<int, int>> pivots;
    if (rows.empty()) return pivots;
    const size_t ncols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const uint32_t s = ctx.inv(rows[r][c]);
        if (s != 1) {
            for (size_t j = c; j < ncols; ++j) rows[r][j] = uint16_t(ctx.mul(s, rows[r][j]));
        }
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const uint32_t f = rows[i][c];
            for (size_t j = c; j < ncols; ++j) {
                rows[i][j] = uint16_t(rows[i][j] ^ ctx.mul(f, rows[r][j]));
            }
        }
        pivots.emplace_back(int(r), int(c));
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(std::vector<std::vector<uint16_t>> rows, const FieldContext& ctx) {
    return int(eliminate(rows, ctx).size());
}

std::vector<int> independent_subset(const std::vector<std::vector<uint16_t>>& rows,
                                    const FieldContext& ctx) {
    std::vector<int> kept;
    std::vector<std::vector<uint16_t>> echelon;
    for (size_t i = 0; i < rows.size(); ++i) {
        echelon.push_back(rows[i]);
        if (int(eliminate(echelon, ctx).size()) == int(echelon.size())) {
            kept.push_back(int(i));
        } else {
            echelon.pop_back();
        }
    }
    return kept;
}

std::vector<std::vector<uint16_t>> nullspace(std::vector<std::vector<uint16_t>> rows, int ncols,
                                             const FieldContext& ctx) {
    for (const auto& r : rows) {
        if (int(r.size()) != ncols) throw std::invalid_argument("nullspace: ragged rows");
    }
    const auto pivots = eliminate(rows, ctx);
    std::vector<int> pivot_of_col(ncols, -1);
    for (const auto& [pr, pc] : pivots) pivot_of_col[pc] = pr;

    std::vector<std::vector<uint16_t>> basis;
    for (int c = 0; c < ncols; ++c) {
        if (pivot_of_col[c] != -1) continue;
        std::vector<uint16_t> v(ncols, 0);
        v[c] = 1;
        for (const auto& [pr, pc] : pivots) {
            // pivot row reads: x_pc + sum over free columns = 0
            v[pc] = rows[pr][c];  // -rows[pr][c] in characteristic 2
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_space(const std::vector<std::vector<uint16_t>>& rows, const std::vector<uint16_t>& v,
                  const FieldContext& ctx) {
    auto copy = rows;
    const int base = int(eliminate(copy, ctx).size());
    copy.push_back(v);
    return int(eliminate(copy, ctx).size()) == base;
}

std::vector<uint16_t> flatten(const MatrixWord& w) { return w.entries(); }

int rank_f2(std::vector<std::vector<uint64_t>> rows) {
    if (rows.empty()) return 0;
    const size_t nwords = rows[0].size();
    int rank = 0;
    size_t r = 0;
    for (size_t w = 0; w < nwords && r < rows.size(); ++w) {
        for (int b = 0; b < 64 && r < rows.size(); ++b) {
            const uint64_t mask = uint64_t(1) << b;
            size_t p = r;
            while (p < rows.size() && !(rows[p][w] & mask)) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[r], rows[p]);
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i != r && (rows[i][w] & mask)) {
                    for (size_t j = w; j < nwords; ++j) rows[i][j] ^= rows[r][j];
                }
            }
            ++r;
            ++rank;
        }
    }
    return rank;
}

std::vector<uint64_t> pack_bits(const std::vector<uint16_t>& v) {
    std::vector<uint64_t> out((v.size() + 63) / 64, 0);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] & 1u) out[i / 64] |= uint64_t(1) << (i % 64);
    }
    return out;
}

namespace {

size_t leading_bit(const std::vector<uint64_t>& v) {
    for (size_t w = 0; w < v.size(); ++w) {
        if (v[w] != 0) return w * 64 + size_t(std::countr_zero(v[w]));
    }
    return SIZE_MAX;
}

}  // namespace

bool IncrementalBasisF2::add(std::vector<uint64_t> v) {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const size_t p = pivot_[r];
        if (v[p / 64] & (uint64_t(1) << (p % 64))) {
            for (size_t w = 0; w < v.size(); ++w) v[w] ^= rows_[r][w];
        }
    }
    const size_t p = leading_bit(v);
    if (p == SIZE_MAX) return false;
    rows_.push_back(std::move(v));
    pivot_.push_back(p);
    return true;
}

}  // namespace graphcodes::linalg
