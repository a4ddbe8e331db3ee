#include "graphcodes/matrix_word.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace graphcodes {

bool MatrixWord::is_zero() const {
    for (uint16_t v : e_)
        if (v != 0) return false;
    return true;
}

bool MatrixWord::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool MatrixWord::has_zero_diagonal() const {
    for (int i = 0; i < n_; ++i)
        if (at(i, i) != 0) return false;
    return true;
}

MatrixWord MatrixWord::transpose() const {
    MatrixWord r(ctx_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.set(j, i, at(i, j));
    return r;
}

MatrixWord MatrixWord::operator+(const MatrixWord& o) const {
    require_same_shape(*this, o);
    MatrixWord r(ctx_, n_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] ^ o.e_[i];
    return r;
}

void MatrixWord::add_scaled(const MatrixWord& o, uint32_t c) {
    require_same_shape(*this, o);
    if (c == 0) return;
    if (c == 1) {
        for (size_t i = 0; i < e_.size(); ++i) e_[i] ^= o.e_[i];
        return;
    }
    for (size_t i = 0; i < e_.size(); ++i) e_[i] ^= uint16_t(ctx_.mul(c, o.e_[i]));
}

std::vector<uint16_t> MatrixWord::row(int i) const {
    return std::vector<uint16_t>(e_.begin() + size_t(i) * n_, e_.begin() + size_t(i + 1) * n_);
}

std::vector<uint16_t> MatrixWord::column(int j) const {
    std::vector<uint16_t> c(n_);
    for (int i = 0; i < n_; ++i) c[i] = at(i, j);
    return c;
}

void require_same_shape(const MatrixWord& a, const MatrixWord& b) {
    if (!(a.ctx() == b.ctx())) throw std::invalid_argument("matrix words from different field contexts");
    if (a.n() != b.n()) throw std::invalid_argument("matrix words of different side lengths");
}

void write_matrix_word(std::ostream& os, const MatrixWord& w) {
    os << "n=" << w.n() << " q=" << element_hex(w.ctx().modulus()) << "\n";
    for (int i = 0; i < w.n(); ++i) {
        for (int j = 0; j < w.n(); ++j) {
            if (j) os << ' ';
            os << element_hex(w.at(i, j));
        }
        os << "\n";
    }
}

MatrixWord read_matrix_word(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::invalid_argument("missing matrix header");
    int n = 0;
    uint32_t mod = 0;
    if (std::sscanf(header.c_str(), "n=%d q=%x", &n, &mod) != 2) {
        throw std::invalid_argument("bad matrix header: " + header);
    }
    int t = 0;
    for (uint32_t m = mod; m > 1; m >>= 1) ++t;
    FieldContext ctx(t, mod);
    MatrixWord w(ctx, n);
    for (int i = 0; i < n; ++i) {
        std::string line;
        if (!std::getline(is, line)) throw std::invalid_argument("truncated matrix body");
        std::istringstream ls(line);
        std::string tok;
        for (int j = 0; j < n; ++j) {
            if (!(ls >> tok)) throw std::invalid_argument("short matrix row");
            w.set(i, j, parse_element_hex(tok, ctx));
        }
        if (ls >> tok) throw std::invalid_argument("long matrix row");
    }
    return w;
}

void write_edge_list(std::ostream& os, const MatrixWord& w) {
    if (w.ctx().t() != 1) throw std::invalid_argument("edge lists require a binary graph word");
    if (!w.is_graph_word()) throw std::invalid_argument("edge lists require a symmetric zero-diagonal word");
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j)
            if (w.at(i, j)) os << i << ' ' << j << "\n";
}

}  // namespace graphcodes
