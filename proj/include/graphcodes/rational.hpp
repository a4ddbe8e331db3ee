#pragma once

#include <cstdint>
#include <string>

namespace graphcodes {

/// Exact rational with 64-bit numerator/denominator, always normalized
/// (gcd 1, denominator positive). Used for the distance/rate parameters so
/// that size formulas evaluate identically on every platform.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n, int64_t d);
    Rational(int64_t n) : num(n), den(1) {}  // NOLINT: implicit by design

    double to_double() const { return double(num) / double(den); }
    std::string to_string() const;

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational&) const = default;
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const;

    /// Largest integer <= num/den.
    int64_t floor() const;
    /// Smallest integer >= num/den.
    int64_t ceil() const;
};

/// Parses a decimal string ("0.5", "1", ".25") or a ratio ("1/3") exactly.
Rational parse_rational(const std::string& s);

}  // namespace graphcodes
