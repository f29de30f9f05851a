// Exact rational arithmetic over arbitrary-precision integers.
//
// Invariants: gcd(|num|, den) = 1 and den >= 1, always.  floor() is the
// mathematical floor (floor(-1/2) = -1), which is what every fractional-part
// computation in this library relies on.

#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace spectra {

using Int = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int num, Int den);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // mathematical floor: largest integer <= value
    Int floor() const;
    // fractional part value - floor(value), always in [0, 1)
    Rational frac() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "0", "5", "-1/3", "3/2" -- reduced, denominator positive
    std::string str() const;
    // accepts the same forms; unreduced input is canonicalized
    static Rational parse(std::string_view text);

private:
    void normalize();
    Int num_;
    Int den_;
};

}  // namespace spectra
