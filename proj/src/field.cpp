#include "graphcodes/field.hpp"

#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace graphcodes {

namespace {

// Lexicographically least monic irreducible of degree t over F_2 with
// constant term 1, encoded as a (t+1)-bit string. Frozen so that codewords
// are reproducible across builds.
constexpr uint32_t kModulusTable[17] = {
    0,       // t = 0 unused
    0x3,     // X + 1
    0x7,     // X^2 + X + 1
    0xb,     // X^3 + X + 1
    0x13,    // X^4 + X + 1
    0x25,    // X^5 + X^2 + 1
    0x43,    // X^6 + X + 1
    0x83,    // X^7 + X + 1
    0x11b,   // X^8 + X^4 + X^3 + X + 1
    0x203,   // X^9 + X + 1
    0x409,   // X^10 + X^3 + 1
    0x805,   // X^11 + X^2 + 1
    0x1009,  // X^12 + X^3 + 1
    0x201b,  // X^13 + X^4 + X^3 + X + 1
    0x4021,  // X^14 + X^5 + 1
    0x8003,  // X^15 + X + 1
    0x1002b  // X^16 + X^5 + X^3 + X + 1
};

int poly_degree(uint64_t p) { return 63 - std::countl_zero(p); }

uint64_t poly_mod(uint64_t a, uint64_t m) {
    const int dm = poly_degree(m);
    while (a != 0 && poly_degree(a) >= dm) {
        a ^= m << (poly_degree(a) - dm);
    }
    return a;
}

bool is_irreducible(uint32_t p, int t) {
    if (poly_degree(p) != t) return false;
    if (t == 1) return true;
    for (int d = 1; d <= t / 2; ++d) {
        for (uint64_t f = uint64_t(1) << d; f < (uint64_t(2) << d); ++f) {
            if (poly_mod(p, f) == 0) return false;
        }
    }
    return true;
}

void require_same_context(const FieldElement& a, const FieldElement& b) {
    if (!(a.ctx == b.ctx)) {
        throw std::invalid_argument("field elements from different contexts");
    }
}

}  // namespace

FieldContext::FieldContext(int t) {
    if (t < 1 || t > 16) {
        throw std::invalid_argument("extension degree t must be in 1..16 for the shipped table");
    }
    t_ = t;
    modulus_ = kModulusTable[t];
}

FieldContext::FieldContext(int t, uint32_t modulus) : t_(t), modulus_(modulus) {
    if (t < 1 || t > 24) throw std::invalid_argument("extension degree out of range");
    if (!is_irreducible(modulus, t)) {
        throw std::invalid_argument("modulus is not a degree-t irreducible over F_2");
    }
}

uint32_t FieldContext::mul(uint32_t a, uint32_t b) const {
    uint32_t acc = 0;
    const uint32_t top = uint32_t(1) << t_;
    while (b != 0) {
        if (b & 1u) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= modulus_;
    }
    return acc;
}

uint32_t FieldContext::pow(uint32_t a, uint64_t e) const {
    uint32_t acc = 1;
    while (e != 0) {
        if (e & 1u) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

uint32_t FieldContext::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
    return pow(a, order() - 2);
}

int FieldContext::trace(uint32_t a) const {
    uint32_t sum = 0;
    uint32_t x = a;
    for (int i = 0; i < t_; ++i) {
        sum ^= x;
        x = mul(x, x);
    }
    // The trace lands in the prime field.
    return int(sum & 1u);
}

uint32_t FieldContext::sqrt(uint32_t a) const {
    return pow(a, uint64_t(1) << (t_ - 1));
}

std::string FieldContext::to_string() const {
    std::ostringstream os;
    os << "t=" << t_ << ",mod=" << std::hex << modulus_;
    return os.str();
}

FieldContext FieldContext::from_string(const std::string& s) {
    int t = 0;
    uint32_t mod = 0;
    if (std::sscanf(s.c_str(), "t=%d,mod=%x", &t, &mod) != 2) {
        throw std::invalid_argument("bad field context string: " + s);
    }
    return FieldContext(t, mod);
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) {
    require_same_context(a, b);
    return {a.ctx, a.ctx.add(a.bits, b.bits)};
}

FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
    require_same_context(a, b);
    return {a.ctx, a.ctx.mul(a.bits, b.bits)};
}

FieldElement field_inv(const FieldElement& a) { return {a.ctx, a.ctx.inv(a.bits)}; }

int trace(const FieldElement& a) { return a.ctx.trace(a.bits); }

std::vector<uint8_t> vec_embed(uint32_t bits, const FieldContext& ctx) {
    std::vector<uint8_t> v(ctx.t());
    for (int i = 0; i < ctx.t(); ++i) v[i] = uint8_t((bits >> i) & 1u);
    return v;
}

std::vector<uint8_t> vec_embed(const FieldElement& a) { return vec_embed(a.bits, a.ctx); }

std::string element_hex(uint32_t bits) {
    std::ostringstream os;
    os << std::hex << bits;
    return os.str();
}

uint32_t parse_element_hex(const std::string& s, const FieldContext& ctx) {
    uint32_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
    if (ec != std::errc() || p != s.data() + s.size()) {
        throw std::invalid_argument("bad hex field element: " + s);
    }
    if (v >= ctx.order()) throw std::invalid_argument("element out of range for field: " + s);
    return v;
}

}  // namespace graphcodes
