#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "graphcodes/field.hpp"

using namespace graphcodes;

// F_4 = F_2[X]/(X^2+X+1) with w = X: bit patterns 0, 1, w = 2, w+1 = 3.

TEST_CASE("F_4 multiplication table, derived by hand reduction mod X^2+X+1") {
    FieldContext f4(2);
    CHECK(f4.mul(0, 2) == 0);           // 0 * a = 0
    CHECK(f4.mul(1, 2) == 2);           // 1 * a = a
    CHECK(f4.mul(2, 2) == 3);           // w * w = w + 1
    CHECK(f4.mul(2, 3) == 1);           // w * (w+1) = w^2 + w = 1
    CHECK(f4.mul(3, 3) == 2);           // (w+1)^2 = w^2 + 1 = w
}

TEST_CASE("inverses in F_4") {
    FieldContext f4(2);
    CHECK(f4.inv(1) == 1);
    CHECK(f4.inv(2) == 3);  // w * w^2 = w^3 = 1
    CHECK(f4.inv(3) == 2);
    CHECK_THROWS_AS(f4.inv(0), std::domain_error);
}

TEST_CASE("Fermat check: a * a^(q-2) = 1 for all nonzero a, t <= 8") {
    for (int t = 1; t <= 8; ++t) {
        FieldContext f(t);
        for (uint32_t a = 1; a < f.order(); ++a) {
            CHECK(f.mul(a, f.pow(a, f.order() - 2)) == 1);
        }
    }
}

TEST_CASE("commutativity, associativity and distributivity spot checks") {
    FieldContext f8(3);
    for (uint32_t a = 0; a < 8; ++a) {
        for (uint32_t b = 0; b < 8; ++b) {
            CHECK(f8.mul(a, b) == f8.mul(b, a));
            for (uint32_t c = 0; c < 8; ++c) {
                CHECK(f8.mul(f8.mul(a, b), c) == f8.mul(a, f8.mul(b, c)));
                CHECK(f8.mul(a, b ^ c) == (f8.mul(a, b) ^ f8.mul(a, c)));
            }
        }
    }
}

TEST_CASE("trace values in F_4") {
    FieldContext f4(2);
    CHECK(f4.trace(0) == 0);
    CHECK(f4.trace(1) == 0);  // Tr(1) = t mod 2 = 0
    CHECK(f4.trace(2) == 1);  // Tr(w) = w + w^2 = w + w + 1 = 1
    CHECK(f4.trace(3) == 1);
}

TEST_CASE("Tr(1) = t mod 2 for every tabled field") {
    for (int t = 1; t <= 16; ++t) {
        FieldContext f(t);
        CHECK(f.trace(1) == t % 2);
    }
}

TEST_CASE("trace is balanced and Frobenius invariant, exhaustive t <= 12") {
    for (int t = 1; t <= 12; ++t) {
        FieldContext f(t);
        uint32_t zeros = 0;
        for (uint32_t a = 0; a < f.order(); ++a) {
            if (f.trace(a) == 0) ++zeros;
            CHECK(f.trace(f.mul(a, a)) == f.trace(a));
        }
        CHECK(zeros == f.order() / 2);
    }
}

TEST_CASE("trace is F_2 linear") {
    FieldContext f(5);
    for (uint32_t a = 0; a < 32; ++a)
        for (uint32_t b = 0; b < 32; ++b) CHECK(f.trace(a ^ b) == (f.trace(a) ^ f.trace(b)));
}

TEST_CASE("square root utility inverts squaring") {
    for (int t = 1; t <= 10; ++t) {
        FieldContext f(t);
        for (uint32_t a = 0; a < f.order(); ++a) {
            const uint32_t r = f.sqrt(a);
            CHECK(f.mul(r, r) == a);
        }
    }
}

TEST_CASE("vec_embed: coordinate readoff, linear, bijective") {
    FieldContext f4(2);
    CHECK(vec_embed(0, f4) == std::vector<uint8_t>{0, 0});
    CHECK(vec_embed(2, f4) == std::vector<uint8_t>{0, 1});  // w = (0, 1) in basis {1, w}

    for (int t = 1; t <= 12; ++t) {
        FieldContext f(t);
        std::set<std::vector<uint8_t>> seen;
        for (uint32_t a = 0; a < f.order(); ++a) seen.insert(vec_embed(a, f));
        CHECK(seen.size() == f.order());
    }
    // linearity: embed(a + b) = embed(a) xor embed(b)
    FieldContext f6(6);
    for (uint32_t a = 0; a < 64; a += 7) {
        for (uint32_t b = 0; b < 64; b += 5) {
            auto ea = vec_embed(a, f6), eb = vec_embed(b, f6), es = vec_embed(a ^ b, f6);
            for (int i = 0; i < 6; ++i) CHECK(es[i] == (ea[i] ^ eb[i]));
        }
    }
}

TEST_CASE("element-level operations reject context mixing") {
    FieldElement a{FieldContext(2), 2};
    FieldElement b{FieldContext(3), 2};
    CHECK_THROWS_AS(field_mul(a, b), std::invalid_argument);
    CHECK_THROWS_AS(field_add(a, b), std::invalid_argument);
    CHECK(field_mul(a, FieldElement{FieldContext(2), 2}).bits == 3);
    CHECK(trace(a) == 1);
}

TEST_CASE("modulus table is irreducible and serialization round-trips") {
    for (int t = 1; t <= 16; ++t) {
        FieldContext f(t);
        // the two-argument constructor re-verifies irreducibility
        FieldContext g(t, f.modulus());
        CHECK(f == g);
        CHECK(FieldContext::from_string(f.to_string()) == f);
    }
    CHECK_THROWS_AS(FieldContext(3, 0x9), std::invalid_argument);   // X^3 + 1 = (X+1)(X^2+X+1)
    CHECK_THROWS_AS(FieldContext(4, 0x15), std::invalid_argument);  // X^4+X^2+1 = (X^2+X+1)^2
    CHECK_NOTHROW(FieldContext(4, 0x1f));                           // X^4+X^3+X^2+X+1 is irreducible
}

TEST_CASE("element hex round trip") {
    FieldContext f16(4);
    for (uint32_t a = 0; a < 16; ++a) {
        CHECK(parse_element_hex(element_hex(a), f16) == a);
    }
    CHECK(element_hex(10) == "a");
    CHECK_THROWS_AS(parse_element_hex("zz", f16), std::invalid_argument);
    CHECK_THROWS_AS(parse_element_hex("10", f16), std::invalid_argument);  // out of range
}
