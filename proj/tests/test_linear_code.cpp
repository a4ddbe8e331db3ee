#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <map>
#include <sstream>

#include "graphcodes/linear_code.hpp"

using namespace graphcodes;

namespace {

LinearCode even_weight_32() {
    // [3,2] binary even-weight code
    return LinearCode(FieldContext::binary(), 3, 2, {1, 1, 0, 0, 1, 1});
}

LinearCode repetition_31() { return LinearCode(FieldContext::binary(), 3, 1, {1, 1, 1}); }

// Weight multiset by full enumeration over messages, straight from encode().
std::map<int, int> weight_distribution(const LinearCode& c) {
    const uint64_t q = c.ctx().order();
    uint64_t total = 1;
    for (int i = 0; i < c.k(); ++i) total *= q;
    std::map<int, int> dist;
    for (uint64_t idx = 0; idx < total; ++idx) {
        std::vector<uint16_t> msg(c.k());
        uint64_t v = idx;
        for (int i = 0; i < c.k(); ++i) {
            msg[i] = uint16_t(v % q);
            v /= q;
        }
        int w = 0;
        for (uint16_t x : c.encode(msg))
            if (x) ++w;
        ++dist[w];
    }
    return dist;
}

}  // namespace

TEST_CASE("RS(4,2) over F_4: evaluation encoding, frozen by hand") {
    FieldContext f4(2);
    LinearCode rs = rs_generate(4, 2, f4);
    // rows: X^0 and X^1 on points 0,1,w,w+1
    CHECK(rs.row(0) == std::vector<uint16_t>{1, 1, 1, 1});
    CHECK(rs.row(1) == std::vector<uint16_t>{0, 1, 2, 3});
    // message (1, w): p(x) = 1 + w x evaluates to 1, 1+w, 1+w^2 = w, 1+w^3 = 0
    CHECK(rs.encode({1, 2}) == std::vector<uint16_t>{1, 3, 2, 0});
}

TEST_CASE("rs_generate rejects n > q and bad k") {
    FieldContext f4(2);
    CHECK_THROWS_AS(rs_generate(5, 2, f4), std::invalid_argument);
    CHECK_THROWS_AS(rs_generate(4, 0, f4), std::invalid_argument);
    CHECK_THROWS_AS(rs_generate(4, 5, f4), std::invalid_argument);
    // k = n is the full space, distance 1
    LinearCode full = rs_generate(4, 4, f4);
    CHECK(hamming_min_distance(full).value == 1);
}

TEST_CASE("exact minimum distances of tiny codes") {
    CHECK(hamming_min_distance(repetition_31()).value == 3);
    CHECK(hamming_min_distance(even_weight_32()).value == 2);  // words 110, 011, 101
    FieldContext f4(2);
    CHECK(hamming_min_distance(rs_generate(4, 2, f4)).value == 3);
}

TEST_CASE("MDS sweep: RS distance is exactly n - k + 1") {
    FieldContext f16(4);
    for (int n = 1; n <= 16; ++n) {
        for (int k = 1; k <= n && (uint64_t(1) << (4 * k)) <= (uint64_t(1) << 16); ++k) {
            auto rep = hamming_min_distance(rs_generate(n, k, f16));
            CHECK(rep.value == n - k + 1);
        }
    }
    FieldContext f4(2);
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= n; ++k) {
            CHECK(hamming_min_distance(rs_generate(n, k, f4)).value == n - k + 1);
        }
    }
}

TEST_CASE("distance enumeration budget and sampled mode") {
    FieldContext f16(4);
    LinearCode rs = rs_generate(16, 8, f16);  // 16^8 = 2^32 codewords
    CHECK_THROWS_AS(hamming_min_distance(rs), std::invalid_argument);
    HammingDistanceOptions opt;
    opt.allow_sampled = true;
    opt.samples = 200;
    opt.seed = 7;
    auto rep = hamming_min_distance(rs, opt);
    CHECK(rep.mode == DistanceReport::Mode::Sampled);
    CHECK(rep.value >= 9);  // upper bound can never undercut the true (MDS) distance
    opt.samples = 0;
    CHECK_THROWS_AS(hamming_min_distance(rs, opt), std::invalid_argument);
}

TEST_CASE("systematic form: identity permutation when already systematic") {
    LinearCode c(FieldContext::binary(), 4, 2, {1, 0, 1, 1, 0, 1, 0, 1});
    auto sf = systematic_form(c);
    CHECK(sf.col_perm == std::vector<int>{0, 1, 2, 3});
    CHECK(sf.code.generator() == c.generator());
}

TEST_CASE("systematic form of RS(4,2) over F_4 has nonzero A block") {
    FieldContext f4(2);
    auto sf = systematic_form(rs_generate(4, 2, f4));
    CHECK(sf.code.gen(0, 0) == 1);
    CHECK(sf.code.gen(0, 1) == 0);
    CHECK(sf.code.gen(1, 0) == 0);
    CHECK(sf.code.gen(1, 1) == 1);
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 4; ++j) CHECK(sf.code.gen(i, j) != 0);
}

TEST_CASE("systematic form preserves the weight distribution") {
    FieldContext f8(3);
    for (int n : {5, 7}) {
        for (int k = 1; k <= 4; ++k) {
            LinearCode rs = rs_generate(n, k, f8);
            auto sf = systematic_form(rs);
            CHECK(weight_distribution(rs) == weight_distribution(sf.code));
        }
    }
}

TEST_CASE("rank-deficient generators are rejected") {
    CHECK_THROWS_AS(LinearCode(FieldContext::binary(), 3, 2, {1, 1, 0, 1, 1, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(LinearCode(FieldContext::binary(), 3, 1, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("wozencraft ensemble") {
    // index 1: codewords (x, x), minimum distance 2
    LinearCode w1 = wozencraft_code(3, 1);
    CHECK(w1.n() == 6);
    CHECK(w1.k() == 3);
    CHECK(hamming_min_distance(w1).value == 2);
    CHECK(w1.encode({0, 0, 0}) == std::vector<uint16_t>(6, 0));

    // independent oracle: build {(x, alpha x)} straight from field arithmetic
    FieldContext f8(3);
    const uint32_t alpha = 2;  // a generator of F_8*
    LinearCode w = wozencraft_code(3, alpha);
    int oracle_min = 6;
    for (uint32_t x = 1; x < 8; ++x) {
        const uint32_t y = f8.mul(alpha, x);
        const int wt = std::popcount(x) + std::popcount(y);
        oracle_min = std::min(oracle_min, wt);
        // the codeword with message bits of x must be (bits x, bits alpha x)
        std::vector<uint16_t> msg(3), expect(6);
        for (int i = 0; i < 3; ++i) {
            msg[i] = uint16_t((x >> i) & 1);
            expect[i] = uint16_t((x >> i) & 1);
            expect[3 + i] = uint16_t((y >> i) & 1);
        }
        CHECK(w.encode(msg) == expect);
    }
    CHECK(hamming_min_distance(w).value == oracle_min);

    // ensemble count and rate: 2^k - 1 codes, all [2k, k]
    for (uint32_t idx = 1; idx < 8; ++idx) {
        LinearCode c = wozencraft_code(3, idx);
        CHECK(c.n() == 2 * c.k());
    }
    CHECK_THROWS_AS(wozencraft_code(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(wozencraft_code(3, 8), std::invalid_argument);
}

TEST_CASE("generator serialization round trip") {
    FieldContext f8(3);
    LinearCode rs = rs_generate(7, 3, f8);
    std::stringstream ss;
    write_linear_code(ss, rs);
    const std::string first = ss.str();
    LinearCode back = read_linear_code(ss);
    CHECK(back.generator() == rs.generator());
    CHECK(back.n() == rs.n());
    CHECK(back.k() == rs.k());
    std::stringstream ss2;
    write_linear_code(ss2, back);
    CHECK(ss2.str() == first);
}
