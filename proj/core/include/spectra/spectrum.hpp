// Elements of Z[Q]: finite formal integer combinations of rationals.
//
// A spectrum is stored sparsely as an ordered map value -> multiplicity with
// no zero multiplicities, so equality is plain map equality and serialization
// is canonical (ascending by value, fractions reduced).
//
// The star product is the bilinear extension of [q]*[q'] = [q+q'+1]; it is the
// spectrum analogue of adding functions in disjoint variables.  gamma(d) is
// the one-variable power germ spectrum sum_{i=1}^{d-1} [-i/d], beta(m) the
// correction kernel sum_{i=0}^{m-1} [-i/m].

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "spectra/rational.hpp"

namespace spectra {

class Spectrum {
public:
    using TermMap = std::map<Rational, Int>;

    Spectrum() = default;
    static Spectrum term(const Rational& q, Int mult = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // multiplicity of [q]; 0 if absent
    Int coefficient(const Rational& q) const;
    // total multiplicity (the Milnor number for a germ spectrum)
    Int mass() const;

    // canonical insert: drops the entry when the multiplicity cancels to zero
    void add(const Rational& q, const Int& mult);

    Spectrum& operator+=(const Spectrum& o);
    Spectrum& operator-=(const Spectrum& o);
    friend Spectrum operator+(Spectrum a, const Spectrum& b) { return a += b; }
    friend Spectrum operator-(Spectrum a, const Spectrum& b) { return a -= b; }
    Spectrum scaled(const Int& c) const;

    friend bool operator==(const Spectrum& a, const Spectrum& b) = default;

private:
    TermMap terms_;
};

// bilinear star product; the empty spectrum is an annihilator
Spectrum star(const Spectrum& a, const Spectrum& b);

// m-fold star power, m >= 1 (the empty star product is deliberately rejected)
Spectrum star_power(const Spectrum& a, int m);

// gamma(d) = sum_{i=1}^{d-1} [-i/d]; gamma(1) is the zero element.  d >= 1.
Spectrum gamma(long long d);

// beta(m) = sum_{i=0}^{m-1} [-i/m]; m >= 1.
Spectrum beta(long long m);

// sum of multiplicities on the open interval (lo, hi); lo < hi required
Int count_open_interval(const Spectrum& a, const Rational& lo, const Rational& hi);

struct Effectiveness {
    bool effective;
    std::optional<Rational> witness;  // smallest value with negative multiplicity
};
Effectiveness is_effective(const Spectrum& a);

Spectrum linear_combination(const std::vector<std::pair<Int, Spectrum>>& parts);

// every [q] replaced by [q+c]
Spectrum shift(const Spectrum& a, const Rational& c);

// "1[-1/2]" / "1[0] + 3[1/3] + 3[2/3] + 1[1]" / "0"; terms ascending by value,
// negative multiplicities rendered with a " - " separator
std::string to_text(const Spectrum& a);

// {"terms":[{"num":..,"den":..,"mult":..},...]} ascending by value
nlohmann::json to_json(const Spectrum& a);
Spectrum spectrum_from_json(const nlohmann::json& j);

}  // namespace spectra
