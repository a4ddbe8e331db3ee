#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace graphcodes {

/// Arithmetic context for the binary extension field F_{2^t}.
///
/// Elements are stored as t-bit polynomial-basis coordinate vectors packed
/// into an unsigned integer: bit i is the coefficient of X^i. The context is
/// an immutable value type; all operations are pure and safe to share across
/// threads.
class FieldContext {
public:
    /// Field with the shipped modulus table (t in 1..16): the
    /// lexicographically least monic irreducible of degree t with constant
    /// term 1.
    explicit FieldContext(int t);

    /// Field with an explicit modulus (t+1 bits, top bit set). The modulus is
    /// verified irreducible by trial division by all factors of degree
    /// <= t/2; throws std::invalid_argument otherwise.
    FieldContext(int t, uint32_t modulus);

    int t() const { return t_; }
    uint32_t modulus() const { return modulus_; }
    /// q = 2^t.
    uint32_t order() const { return uint32_t(1) << t_; }

    bool operator==(const FieldContext&) const = default;

    // Raw operations on reduced bit patterns (values in [0, 2^t)).
    uint32_t add(uint32_t a, uint32_t b) const { return a ^ b; }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    uint32_t inv(uint32_t a) const;
    /// Trace map Tr(a) = a + a^2 + a^4 + ... + a^{2^{t-1}}, in {0, 1}.
    int trace(uint32_t a) const;
    /// Square root a^{2^{t-1}} (squaring is a bijection in characteristic 2).
    uint32_t sqrt(uint32_t a) const;

    /// Serializes as "t=<int>,mod=<hex>".
    std::string to_string() const;
    static FieldContext from_string(const std::string& s);

    /// F_2 (t = 1, modulus X + 1).
    static FieldContext binary() { return FieldContext(1); }

private:
    int t_;
    uint32_t modulus_;
};

/// A field element bound to its context. Elements from different contexts
/// never mix; the element-level functions below throw std::invalid_argument
/// on a context mismatch.
struct FieldElement {
    FieldContext ctx;
    uint32_t bits = 0;

    bool operator==(const FieldElement&) const = default;
};

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_inv(const FieldElement& a);
int trace(const FieldElement& a);

/// Fixed F_2-linear bijection F_{2^t} -> F_2^t: polynomial-basis coordinates,
/// LSB first (position i = coefficient of X^i).
std::vector<uint8_t> vec_embed(const FieldElement& a);
std::vector<uint8_t> vec_embed(uint32_t bits, const FieldContext& ctx);

/// Lowercase minimal-width hex of the bit representation ("0" for zero).
std::string element_hex(uint32_t bits);
uint32_t parse_element_hex(const std::string& s, const FieldContext& ctx);

}  // namespace graphcodes
