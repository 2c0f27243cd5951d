#pragma once

#include "ergopt/rational.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ergopt {

enum class Mode { rational, floating };

inline const char* mode_name(Mode m) {
    return m == Mode::rational ? "rational" : "float";
}

// The pipeline is generic over the scalar: Rational runs exact (strict
// inequalities checked as such), double runs with a fixed safety margin at
// every strict threshold so the certified gaps stay positive.
template <class S>
struct num;

template <>
struct num<Rational> {
    static constexpr Mode mode = Mode::rational;
    static Rational from(const Rational& r) { return r; }
    static Rational zero() { return Rational(0); }
    static Rational margin() { return Rational(0); }
    // strict "value sits below target", certified
    static bool below(const Rational& v, const Rational& t) { return v < t; }
    static Rational abs(const Rational& v) { return v.abs(); }
    static Rational min(const Rational& a, const Rational& b) { return ergopt::min(a, b); }
    static Rational max(const Rational& a, const Rational& b) { return ergopt::max(a, b); }
};

template <>
struct num<double> {
    static constexpr Mode mode = Mode::floating;
    static double from(const Rational& r) { return r.to_double(); }
    static double zero() { return 0.0; }
    static double margin() { return std::ldexp(1.0, -30); }
    static bool below(double v, double t) { return v <= t - margin(); }
    static double abs(double v) { return std::fabs(v); }
    static double min(double a, double b) { return std::min(a, b); }
    static double max(double a, double b) { return std::max(a, b); }
};

} // namespace ergopt
