#pragma once

#include "ergopt/errors.hpp"

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ergopt {

// Exact rational on int64 numerator/denominator, always reduced, den > 0.
// Intermediates run through __int128 and narrowing is checked, so results
// are either exact or a rational_overflow is thrown.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    static Rational parse(std::string_view text); // "p", "p/q"

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    std::int64_t floor() const;
    double to_double() const;
    std::string str() const; // always "p/q", q >= 1

private:
    std::int64_t num_;
    std::int64_t den_;

    static Rational from_i128(__int128 n, __int128 d);
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace ergopt
