#include "krcycle/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace krcycle {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational Rational::make(__int128 num, __int128 den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    __int128 g = gcd128(num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num > std::numeric_limits<long long>::max() || num < std::numeric_limits<long long>::min() ||
        den > std::numeric_limits<long long>::max())
        throw std::overflow_error("Rational: out of 64-bit range");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
}

Rational::Rational(long long num, long long den) {
    *this = make(num, den);
}

Rational Rational::operator-() const { return make(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<__int128>(a.num_) * b.num_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational::make(static_cast<__int128>(a.num_) * b.den_,
                          static_cast<__int128>(a.den_) * b.num_);
}

Rational Rational::pow(int e) const {
    if (e < 0) {
        if (num_ == 0) throw std::invalid_argument("Rational: 0 to a negative power");
        return Rational(den_, num_).pow(-e);
    }
    Rational result(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace krcycle
