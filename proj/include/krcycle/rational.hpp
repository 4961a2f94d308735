#pragma once

#include <cstdint>
#include <string>

namespace krcycle {

// Exact rational on 64-bit numerator/denominator, always reduced, den > 0.
// Intermediates go through __int128; anything that would not fit back into
// 64 bits throws std::overflow_error. Exponent arithmetic in this project
// never gets anywhere near those limits.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {}
    Rational(long long num, long long den); // throws on den == 0

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b); // throws on b == 0

    Rational pow(int e) const; // negative e inverts; throws on 0^negative

    bool operator==(const Rational& other) const = default;
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const; // "n" or "n/d"

private:
    static Rational make(__int128 num, __int128 den);
    long long num_ = 0;
    long long den_ = 1;
};

} // namespace krcycle
