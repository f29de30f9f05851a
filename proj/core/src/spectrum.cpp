#include "spectra/spectrum.hpp"

#include <stdexcept>

namespace spectra {

namespace {

// cpp_int fits in int64 for every published table; fall back to a decimal
// string so JSON output stays exact either way
nlohmann::json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer())
        return Int(j.get<long long>());
    if (j.is_string())
        return Int(j.get<std::string>());
    throw std::invalid_argument("spectrum_from_json: integer field expected");
}

}  // namespace

Spectrum Spectrum::term(const Rational& q, Int mult) {
    Spectrum s;
    s.add(q, mult);
    return s;
}

Int Spectrum::coefficient(const Rational& q) const {
    auto it = terms_.find(q);
    return it == terms_.end() ? Int(0) : it->second;
}

Int Spectrum::mass() const {
    Int total = 0;
    for (const auto& [q, m] : terms_)
        total += m;
    return total;
}

void Spectrum::add(const Rational& q, const Int& mult) {
    if (mult == 0)
        return;
    auto [it, inserted] = terms_.emplace(q, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Spectrum& Spectrum::operator+=(const Spectrum& o) {
    for (const auto& [q, m] : o.terms_)
        add(q, m);
    return *this;
}

Spectrum& Spectrum::operator-=(const Spectrum& o) {
    for (const auto& [q, m] : o.terms_)
        add(q, -m);
    return *this;
}

Spectrum Spectrum::scaled(const Int& c) const {
    Spectrum r;
    if (c == 0)
        return r;
    for (const auto& [q, m] : terms_)
        r.terms_.emplace(q, m * c);
    return r;
}

Spectrum star(const Spectrum& a, const Spectrum& b) {
    Spectrum r;
    for (const auto& [qa, ma] : a.terms())
        for (const auto& [qb, mb] : b.terms())
            r.add(qa + qb + Rational(1), ma * mb);
    return r;
}

Spectrum star_power(const Spectrum& a, int m) {
    if (m < 1)
        throw std::invalid_argument("star_power: exponent must be >= 1");
    Spectrum r = a;
    for (int i = 1; i < m; ++i)
        r = star(r, a);
    return r;
}

Spectrum gamma(long long d) {
    if (d < 1)
        throw std::invalid_argument("gamma: d must be >= 1");
    Spectrum s;
    for (long long i = 1; i < d; ++i)
        s.add(Rational(Int(-i), Int(d)), 1);
    return s;
}

Spectrum beta(long long m) {
    if (m < 1)
        throw std::invalid_argument("beta: m must be >= 1");
    Spectrum s;
    for (long long i = 0; i < m; ++i)
        s.add(Rational(Int(-i), Int(m)), 1);
    return s;
}

Int count_open_interval(const Spectrum& a, const Rational& lo, const Rational& hi) {
    if (!(lo < hi))
        throw std::invalid_argument("count_open_interval: need lo < hi");
    Int total = 0;
    for (auto it = a.terms().upper_bound(lo); it != a.terms().end() && it->first < hi; ++it)
        total += it->second;
    return total;
}

Effectiveness is_effective(const Spectrum& a) {
    for (const auto& [q, m] : a.terms())
        if (m < 0)
            return {false, q};
    return {true, std::nullopt};
}

Spectrum linear_combination(const std::vector<std::pair<Int, Spectrum>>& parts) {
    Spectrum r;
    for (const auto& [c, s] : parts)
        r += s.scaled(c);
    return r;
}

Spectrum shift(const Spectrum& a, const Rational& c) {
    Spectrum r;
    for (const auto& [q, m] : a.terms())
        r.add(q + c, m);
    return r;
}

std::string to_text(const Spectrum& a) {
    if (a.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [q, m] : a.terms()) {
        Int mag = m < 0 ? Int(-m) : m;
        if (first) {
            if (m < 0)
                out += "-";
            first = false;
        } else {
            out += m < 0 ? " - " : " + ";
        }
        out += mag.str() + "[" + q.str() + "]";
    }
    return out;
}

nlohmann::json to_json(const Spectrum& a) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [q, m] : a.terms()) {
        terms.push_back({{"num", json_int(q.num())},
                         {"den", json_int(q.den())},
                         {"mult", json_int(m)}});
    }
    return {{"terms", terms}};
}

Spectrum spectrum_from_json(const nlohmann::json& j) {
    Spectrum s;
    for (const auto& t : j.at("terms"))
        s.add(Rational(int_from_json(t.at("num")), int_from_json(t.at("den"))),
              int_from_json(t.at("mult")));
    return s;
}

}  // namespace spectra
