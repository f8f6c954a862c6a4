#pragma once

#include <boost/rational.hpp>

namespace linkbook {

using Rational = boost::rational<long long>;

/// Exact complex-rational coefficient: value = re + im*i.
/// Transcendental constants (pi, log lambda) never enter this layer;
/// they live in the numeric module only.
struct Coefficient {
    Rational re{0};
    Rational im{0};

    Coefficient() = default;
    Coefficient(Rational r, Rational i) : re(r), im(i) {}
    explicit Coefficient(long long r) : re(r), im(0) {}

    bool is_zero() const { return re.numerator() == 0 && im.numerator() == 0; }

    Coefficient operator+(const Coefficient& o) const { return {re + o.re, im + o.im}; }
    Coefficient operator-(const Coefficient& o) const { return {re - o.re, im - o.im}; }
    Coefficient operator-() const { return {-re, -im}; }
    Coefficient operator*(const Coefficient& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Coefficient operator*(const Rational& s) const { return {re * s, im * s}; }

    bool operator==(const Coefficient& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Coefficient& o) const { return !(*this == o); }
    bool operator<(const Coefficient& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }
};

inline Coefficient operator*(const Rational& s, const Coefficient& c) { return c * s; }

} // namespace linkbook
