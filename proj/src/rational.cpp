#include "graphcodes/rational.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace graphcodes {

Rational::Rational(int64_t n, int64_t d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const int64_t g = std::gcd(n < 0 ? -n : n, d);
    num = g == 0 ? 0 : n / g;
    den = g == 0 ? 1 : d / g;
}

std::string Rational::to_string() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

bool Rational::operator<(const Rational& o) const { return num * o.den < o.num * den; }
bool Rational::operator<=(const Rational& o) const { return num * o.den <= o.num * den; }

int64_t Rational::floor() const {
    int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

int64_t Rational::ceil() const {
    int64_t q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const int64_t n = std::stoll(s.substr(0, slash));
        const int64_t d = std::stoll(s.substr(slash + 1));
        return Rational(n, d);
    }
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(s), 1);
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (frac.size() > 15) throw std::invalid_argument("too many decimal digits: " + s);
    int64_t den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    const bool neg = !whole.empty() && whole[0] == '-';
    const int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
    const int64_t f = frac.empty() ? 0 : std::stoll(frac);
    const int64_t n = (neg ? -1 : 1) * ((w < 0 ? -w : w) * den + f);
    return Rational(n, den);
}

}  // namespace graphcodes
