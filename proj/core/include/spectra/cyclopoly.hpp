// Formal products of (lambda - zeta) over roots of unity zeta with integer
// exponents.  A root e^{2*pi*i*theta} is represented by its argument theta as
// a reduced rational in [0,1); equality of eigenvalues is exact equality of
// arguments mod 1.  No complex floating point anywhere.

#pragma once

#include <map>
#include <string>

#include "spectra/rational.hpp"

namespace spectra {

class CycloPoly {
public:
    using FactorMap = std::map<Rational, Int>;  // theta in [0,1) -> nonzero exponent

    CycloPoly() = default;  // the constant 1

    // (lambda - e(theta))^exponent; theta reduced mod 1
    static CycloPoly root_factor(const Rational& theta, const Int& exponent);
    // (lambda^m - 1)^exponent, i.e. every m-th root of unity with that exponent
    static CycloPoly lambda_power_minus_one(long long m, const Int& exponent);

    CycloPoly& operator*=(const CycloPoly& o);
    friend CycloPoly operator*(CycloPoly a, const CycloPoly& b) { return a *= b; }

    const FactorMap& factors() const { return factors_; }
    Int exponent_at(const Rational& theta) const;
    // sum of exponents; the degree when the product is a genuine polynomial
    Int degree() const;
    bool is_polynomial() const;  // all exponents >= 0

    friend bool operator==(const CycloPoly& a, const CycloPoly& b) = default;

    // "(λ-1)^1 (λ^3-1)^5" -- full root packets grouped where possible,
    // leftover single roots as "(λ-e(1/3))^2"; "1" for the empty product
    std::string str() const;

private:
    void add(const Rational& theta, const Int& exponent);
    FactorMap factors_;
};

}  // namespace spectra
