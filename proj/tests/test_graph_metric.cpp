#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "graphcodes/errors.hpp"
#include "graphcodes/graph_metric.hpp"
#include "graphcodes/rng.hpp"
#include "oracles.hpp"

using namespace graphcodes;
using namespace testoracles;

namespace {

MatrixWord random_graph(int n, SplitMix64& rng) {
    MatrixWord w(FieldContext::binary(), n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int b = int(rng.next() & 1);
            w.set(i, j, b);
            w.set(j, i, b);
        }
    }
    return w;
}

MatrixWord random_matrix(int n, SplitMix64& rng) {
    MatrixWord w(FieldContext::binary(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w.set(i, j, int(rng.next() & 1));
    return w;
}

bool cover_zeroes(const MatrixWord& d, const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<char> r(d.n(), 0), c(d.n(), 0);
    for (int i : rows) r[i] = 1;
    for (int j : cols) c[j] = 1;
    for (int i = 0; i < d.n(); ++i)
        for (int j = 0; j < d.n(); ++j)
            if (!r[i] && !c[j] && d.at(i, j) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("graph distance basics, frozen") {
    auto k3 = graph_from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    MatrixWord empty3(FieldContext::binary(), 3);
    CHECK(graph_distance(k3, k3) == 0);
    CHECK(graph_distance(k3, empty3) == 2);  // vertex cover of a triangle

    auto matching = graph_from_edges(4, {{0, 1}, {2, 3}});
    MatrixWord empty4(FieldContext::binary(), 4);
    CHECK(subset_scan_graph_distance(matching, empty4) == 2);  // oracle
    CHECK(graph_distance(matching, empty4) == 2);
}

TEST_CASE("graph distance witness certifies the cover") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_graph(9, rng);
        auto h = random_graph(9, rng);
        CoverWitness w;
        const int d = graph_distance(g, h, &w);
        CHECK(w.rows == w.cols);
        CHECK(int(w.rows.size()) == d);
        CHECK(cover_zeroes(g + h, w.rows, w.cols));
    }
}

TEST_CASE("graph distance rejects malformed inputs") {
    MatrixWord sym(FieldContext::binary(), 3);
    MatrixWord asym(FieldContext::binary(), 3);
    asym.set(0, 1, 1);
    CHECK_THROWS_AS(graph_distance(sym, asym), std::invalid_argument);
    MatrixWord other(FieldContext(2), 3);
    CHECK_THROWS_AS(graph_distance(sym, other), std::invalid_argument);
    MatrixWord bigger(FieldContext::binary(), 4);
    CHECK_THROWS_AS(graph_distance(sym, bigger), std::invalid_argument);
}

TEST_CASE("directed distance basics, frozen") {
    MatrixWord a(FieldContext::binary(), 4);
    MatrixWord zero(FieldContext::binary(), 4);
    CHECK(directed_graph_distance(a, zero) == 0);
    a.set(1, 2, 1);  // a single nonzero entry: one row suffices
    CHECK(directed_graph_distance(a, zero) == 1);

    auto matching = graph_from_edges(4, {{0, 1}, {2, 3}});
    CHECK(subset_scan_directed_distance(matching, zero) == 2);  // oracle: no size-1 pair works
    CHECK(directed_graph_distance(matching, zero) == 2);
}

TEST_CASE("directed distance agrees with the definitional oracle on random words") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_matrix(5, rng);
        auto b = random_matrix(5, rng);
        CoverWitness w;
        const int d = directed_graph_distance(a, b, &w);
        CHECK(d == subset_scan_directed_distance(a, b));
        CHECK(int(w.rows.size()) == d);
        CHECK(int(w.cols.size()) == d);
        CHECK(cover_zeroes(a + b, w.rows, w.cols));
    }
}

TEST_CASE("independence and clique numbers, frozen") {
    MatrixWord empty5(FieldContext::binary(), 5);
    CHECK(independence_number(empty5) == 5);
    CHECK(clique_number(empty5) == 1);

    auto k4 = complete_graph(4);
    CHECK(independence_number(k4) == 1);
    CHECK(clique_number(k4) == 4);

    auto c5 = graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(brute_force_mis(adjacency_of(c5)) == 2);  // oracle over all 32 subsets
    CHECK(independence_number(c5) == 2);
    CHECK(clique_number(c5) == 2);  // complement of C5 is C5

    MatrixWord f4graph(FieldContext(2), 3);
    CHECK_THROWS_AS(independence_number(f4graph), std::invalid_argument);
}

TEST_CASE("MIS solver matches subset enumeration on random graphs") {
    SplitMix64 rng(17);
    for (int n : {6, 10, 14}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto g = random_graph(n, rng);
            std::vector<int> witness;
            const int a = independence_number(g, &witness);
            CHECK(a == brute_force_mis(adjacency_of(g)));
            CHECK(int(witness.size()) == a);
            for (int u : witness)
                for (int v : witness) CHECK((u == v || g.at(u, v) == 0));
        }
    }
}

TEST_CASE("metric axioms on random triples, n <= 10") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + int(rng.next() % 7);
        auto g = random_graph(n, rng), h = random_graph(n, rng), f = random_graph(n, rng);
        const int gh = graph_distance(g, h);
        CHECK(gh == graph_distance(h, g));
        CHECK(graph_distance(g, g) == 0);
        if (!(g == h)) CHECK(gh >= 1);
        CHECK(gh <= graph_distance(g, f) + graph_distance(f, h));
    }
}

TEST_CASE("characterization equivalence: cover value equals induced-subgraph scan, n <= 8") {
    SplitMix64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + int(rng.next() % 5);
        auto g = random_graph(n, rng), h = random_graph(n, rng);
        CHECK(graph_distance(g, h) == subset_scan_graph_distance(g, h));
        // transforming the difference to the empty graph is the same scan
        MatrixWord zero(FieldContext::binary(), n);
        CHECK(graph_distance(g, h) == subset_scan_graph_distance(g + h, zero));
    }
}

TEST_CASE("directed distance is dominated by undirected distance") {
    // exhaustive over all graphs on 4 vertices (differences suffice by linearity)
    MatrixWord zero(FieldContext::binary(), 4);
    for (uint32_t bits = 0; bits < 64; ++bits) {
        MatrixWord g(FieldContext::binary(), 4);
        int e = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j, ++e) {
                const int b = int((bits >> e) & 1);
                g.set(i, j, b);
                g.set(j, i, b);
            }
        CHECK(directed_graph_distance(g, zero) <= graph_distance(g, zero));
    }
    // randomized up to n = 12
    SplitMix64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 6 + int(rng.next() % 7);
        auto g = random_graph(n, rng), h = random_graph(n, rng);
        CHECK(directed_graph_distance(g, h) <= graph_distance(g, h));
    }
}

TEST_CASE("duality with independence and clique numbers") {
    // exhaustive over all graphs on 4 vertices, randomized at n = 8
    for (uint32_t bits = 0; bits < 64; ++bits) {
        MatrixWord g(FieldContext::binary(), 4);
        int e = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j, ++e) {
                const int b = int((bits >> e) & 1);
                g.set(i, j, b);
                g.set(j, i, b);
            }
        MatrixWord zero(FieldContext::binary(), 4);
        CHECK(graph_distance(g, zero) == 4 - independence_number(g));
        CHECK(graph_distance(g, complete_graph(4)) == 4 - clique_number(g));
    }
    SplitMix64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_graph(8, rng);
        MatrixWord zero(FieldContext::binary(), 8);
        CHECK(graph_distance(g, zero) == 8 - independence_number(g));
        CHECK(graph_distance(g, complete_graph(8)) == 8 - clique_number(g));
    }
}

TEST_CASE("transpose symmetry of the directed metric") {
    SplitMix64 rng(41);
    MatrixWord zero(FieldContext::binary(), 7);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_matrix(7, rng);
        CHECK(directed_graph_distance(a, zero) == directed_graph_distance(a.transpose(), zero));
    }
}

TEST_CASE("code distance of tiny codes") {
    auto k3 = graph_from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    GraphCode code(FieldContext::binary(), 3, {k3}, false, true);
    auto rep = code_distance(code);
    CHECK(rep.mode == DistanceReport::Mode::Exact);
    CHECK(rep.value == 2);
    CHECK(rep.witness_message == std::vector<uint32_t>{1});

    auto edge = graph_from_edges(4, {{1, 2}});
    GraphCode single(FieldContext::binary(), 4, {edge}, false, true);
    CHECK(code_distance(single).value == 1);

    CHECK_THROWS_AS(
        code_distance(GraphCode(FieldContext::binary(), 3, {}, false, true)),
        std::invalid_argument);
}

TEST_CASE("code distance exact scan equals per-word minimum") {
    SplitMix64 rng(43);
    std::vector<MatrixWord> basis;
    for (int i = 0; i < 4; ++i) basis.push_back(random_graph(8, rng));
    GraphCode code(FieldContext::binary(), 8, basis, false, true);
    auto rep = code_distance(code);

    int oracle = 9;
    MatrixWord zero(FieldContext::binary(), 8);
    for (uint32_t m = 1; m < 16; ++m) {
        MatrixWord w(FieldContext::binary(), 8);
        for (int i = 0; i < 4; ++i)
            if ((m >> i) & 1) w.add_scaled(basis[i], 1);
        oracle = std::min(oracle, subset_scan_graph_distance(w, zero));
    }
    CHECK(rep.value == oracle);
}

TEST_CASE("sampled mode never undercuts the exact distance and claims no lower bound") {
    SplitMix64 rng(47);
    std::vector<MatrixWord> basis;
    for (int i = 0; i < 5; ++i) basis.push_back(random_graph(10, rng));
    GraphCode code(FieldContext::binary(), 10, basis, false, true);
    const int exact = code_distance(code).value;

    CodeDistanceOptions opt;
    opt.mode = CodeDistanceOptions::Mode::Sampled;
    opt.samples = 40;
    opt.seed = 99;
    auto rep = code_distance(code, opt);
    CHECK(rep.mode == DistanceReport::Mode::Sampled);
    CHECK(rep.value >= exact);
    CHECK(rep.samples == 40);

    opt.samples = 0;
    CHECK_THROWS_AS(code_distance(code, opt), std::invalid_argument);
}

TEST_CASE("exact mode over budget raises the budget error") {
    SplitMix64 rng(53);
    std::vector<MatrixWord> basis;
    for (int i = 0; i < 8; ++i) basis.push_back(random_graph(8, rng));
    GraphCode code(FieldContext::binary(), 8, basis, false, true);
    CodeDistanceOptions opt;
    opt.mode = CodeDistanceOptions::Mode::Exact;
    opt.exact_budget = 100;  // 2^8 = 256 > 100
    CHECK_THROWS_AS(code_distance(code, opt), BudgetError);
}

TEST_CASE("singleton check") {
    auto k3 = graph_from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    GraphCode code(FieldContext::binary(), 3, {k3}, false, true);
    auto rep = code_distance(code);
    CHECK(rep.value == 2);
    CHECK(singleton_check(code, rep));  // 1 <= binom(2,2) = 1

    // d = 1: the bound is binom(n, 2), trivially satisfied by any code
    auto edge = graph_from_edges(4, {{1, 2}});
    GraphCode single(FieldContext::binary(), 4, {edge}, false, true);
    CHECK(singleton_check(single, code_distance(single)));

    DistanceReport sampled;
    sampled.mode = DistanceReport::Mode::Sampled;
    CHECK_THROWS_AS(singleton_check(code, sampled), std::invalid_argument);
}

TEST_CASE("graph code shape validation") {
    auto k3 = graph_from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    MatrixWord notsym(FieldContext::binary(), 3);
    notsym.set(0, 1, 1);
    CHECK_THROWS_AS(GraphCode(FieldContext::binary(), 3, {notsym}, false, true),
                    std::invalid_argument);
    // dependent basis
    CHECK_THROWS_AS(GraphCode(FieldContext::binary(), 3, {k3, k3}, false, true),
                    std::invalid_argument);
}
