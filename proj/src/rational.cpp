#include "ergopt/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace ergopt {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw rational_overflow("rational arithmetic exceeded 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

} // namespace

Rational Rational::from_i128(__int128 n, __int128 d) {
    if (d == 0) throw precondition_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    *this = from_i128(n, d);
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> std::int64_t {
        std::int64_t v = 0;
        const char* first = s.data();
        const char* last = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last) {
            throw config_error("bad rational literal: '" + std::string(s) + "'");
        }
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-static_cast<__int128>(num_));
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    *this = from_i128(n, d);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    *this = from_i128(n, d);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    *this = from_i128(n, d);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw precondition_error("rational division by zero");
    __int128 n = static_cast<__int128>(num_) * o.den_;
    __int128 d = static_cast<__int128>(den_) * o.num_;
    *this = from_i128(n, d);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace ergopt
