#include "spectra/cyclopoly.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace spectra {

namespace {

Rational mod1(const Rational& x) {
    return x.frac();
}

}  // namespace

CycloPoly CycloPoly::root_factor(const Rational& theta, const Int& exponent) {
    CycloPoly p;
    p.add(mod1(theta), exponent);
    return p;
}

CycloPoly CycloPoly::lambda_power_minus_one(long long m, const Int& exponent) {
    CycloPoly p;
    for (long long j = 0; j < m; ++j)
        p.add(Rational(Int(j), Int(m)), exponent);
    return p;
}

void CycloPoly::add(const Rational& theta, const Int& exponent) {
    if (exponent == 0)
        return;
    auto [it, inserted] = factors_.emplace(theta, exponent);
    if (!inserted) {
        it->second += exponent;
        if (it->second == 0)
            factors_.erase(it);
    }
}

CycloPoly& CycloPoly::operator*=(const CycloPoly& o) {
    for (const auto& [theta, e] : o.factors_)
        add(theta, e);
    return *this;
}

Int CycloPoly::exponent_at(const Rational& theta) const {
    auto it = factors_.find(mod1(theta));
    return it == factors_.end() ? Int(0) : it->second;
}

Int CycloPoly::degree() const {
    Int total = 0;
    for (const auto& [theta, e] : factors_)
        total += e;
    return total;
}

bool CycloPoly::is_polynomial() const {
    for (const auto& [theta, e] : factors_)
        if (e < 0)
            return false;
    return true;
}

std::string CycloPoly::str() const {
    if (factors_.empty())
        return "1";
    // peel off full packets (lambda^m - 1)^c, largest order first: the packet
    // exponent is the common value on the primitive m-th roots
    FactorMap residual = factors_;
    long long big = 1;
    for (const auto& [theta, e] : factors_) {
        long long den = static_cast<long long>(theta.den());
        big = std::lcm(big, den);
    }
    std::vector<long long> orders;
    for (long long m = big; m >= 1; --m)
        if (big % m == 0)
            orders.push_back(m);
    std::vector<std::pair<long long, Int>> packets;
    for (long long m : orders) {
        // common exponent over primitive m-th roots (absent root -> 0)
        bool have = false, uniform = true;
        Int common = 0;
        for (long long j = 0; j < m; ++j) {
            if (std::gcd(j == 0 ? m : j, m) != 1)
                continue;
            Rational theta{Int(j), Int(m)};
            auto it = residual.find(theta);
            Int e = it == residual.end() ? Int(0) : it->second;
            if (!have) {
                common = e;
                have = true;
            } else if (e != common) {
                uniform = false;
                break;
            }
        }
        if (!have || !uniform || common == 0)
            continue;
        if (m == 1) {
            packets.emplace_back(1, common);
            residual.erase(Rational(0));
            continue;
        }
        packets.emplace_back(m, common);
        for (long long j = 0; j < m; ++j) {
            Rational theta{Int(j), Int(m)};
            auto it = residual.find(theta);
            Int e = (it == residual.end() ? Int(0) : it->second) - common;
            residual.erase(theta);
            if (e != 0)
                residual.emplace(theta, e);
        }
    }
    std::sort(packets.begin(), packets.end());
    std::string out;
    auto append = [&](const std::string& piece) {
        if (!out.empty())
            out += " ";
        out += piece;
    };
    for (const auto& [m, e] : packets) {
        if (m == 1)
            append("(λ-1)^" + e.str());
        else
            append("(λ^" + std::to_string(m) + "-1)^" + e.str());
    }
    for (const auto& [theta, e] : residual)
        append("(λ-e(" + theta.str() + "))^" + e.str());
    return out.empty() ? "1" : out;
}

}  // namespace spectra
