#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "graphcodes/random_codes.hpp"

using namespace graphcodes;

TEST_CASE("binary entropy, frozen values") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    // evaluated numerically: -0.11 log2(0.11) - 0.89 log2(0.89)
    CHECK(binary_entropy(0.11) == doctest::Approx(0.49992).epsilon(1e-4));
    CHECK_THROWS_AS(binary_entropy(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(binary_entropy(1.1), std::invalid_argument);
}

TEST_CASE("entropy inverse round trips on [0, 1/2]") {
    for (double y : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
        const double x = inverse_binary_entropy(y);
        CHECK(x >= 0.0);
        CHECK(x <= 0.5);
        CHECK(binary_entropy(x) == doctest::Approx(y).epsilon(1e-9));
    }
}

TEST_CASE("dimension formula: n = 14, delta = 1/2 gives k = 5") {
    CHECK(random_graph_code_dimension(14, Rational(1, 2)) == 5);
    // binom(7,2) - 14 - 2 = 21 - 16
}

TEST_CASE("random graph code construction is certified and deterministic") {
    RandomGraphCodeParams p;
    p.n = 14;
    p.delta = Rational(1, 2);
    p.seed = 1;
    auto r1 = sample_random_graph_code(p);
    CHECK(r1.code.dimension() == 5);
    CHECK(r1.certificate.mode == DistanceReport::Mode::Exact);
    CHECK(r1.certificate.value > 7);  // strictly greater than delta n
    CHECK(r1.attempts >= 1);
    CHECK(!r1.transcript.empty());

    auto r2 = sample_random_graph_code(p);
    CHECK(r1.code.basis().size() == r2.code.basis().size());
    for (size_t i = 0; i < r1.code.basis().size(); ++i) {
        CHECK(r1.code.basis()[i] == r2.code.basis()[i]);
    }

    p.seed = 2;
    auto r3 = sample_random_graph_code(p);
    CHECK(r3.certificate.value > 7);
}

TEST_CASE("random graph code rejects the vacuous regime") {
    RandomGraphCodeParams p;
    p.n = 10;
    p.delta = Rational(9, 10);
    CHECK_THROWS_AS(sample_random_graph_code(p), std::invalid_argument);
}

TEST_CASE("opt directed search: certificate meets (1 - eps) n") {
    OptSearchParams p;
    p.epsilon = Rational(1, 2);
    p.n = 12;
    p.k = 8;
    p.seed = 3;
    auto r = search_opt_directed(p);
    CHECK(r.code.dimension() == 8);
    CHECK(r.code.directed());
    CHECK(r.certificate.mode == DistanceReport::Mode::Exact);
    CHECK(r.certificate.value >= 6);
    CHECK(r.attempts >= 1);

    auto r2 = search_opt_directed(p);
    for (size_t i = 0; i < r.code.basis().size(); ++i) {
        CHECK(r.code.basis()[i] == r2.code.basis()[i]);
    }
}

TEST_CASE("opt distance target is the ceiling of (1 - eps) n") {
    CHECK(opt_distance_target(Rational(1, 2), 12) == 6);
    CHECK(opt_distance_target(Rational(1, 2), 9) == 5);  // 4.5 rounds up
    CHECK(opt_distance_target(Rational(1, 4), 8) == 6);
}

TEST_CASE("opt search precondition k < eps^2 n^2 - 2n") {
    OptSearchParams p;
    p.epsilon = Rational(1, 2);
    p.n = 12;
    p.k = 12;  // cap is exactly 12, so k = 12 is rejected
    CHECK_THROWS_AS(search_opt_directed(p), std::invalid_argument);
    p.n = 4;
    p.k = 1;  // cap is 4 - 8 < 0
    CHECK_THROWS_AS(search_opt_directed(p), std::invalid_argument);
}
