#include "spectra/monodromy.hpp"

#include <stdexcept>
#include <vector>

namespace spectra {

namespace {

// T^ss eigenvalue arguments of a germ, with multiplicity: frac(-q) per
// spectral value q
std::vector<std::pair<Rational, Int>> eigenvalue_arguments(const GermSpec& g) {
    std::map<Rational, Int> acc;
    for (const auto& [q, m] : g.spectrum.terms())
        acc[(-q).frac()] += m;
    return {acc.begin(), acc.end()};
}

// exponent of (lambda^d - 1) in m_reg
Int m_reg_packet_exponent(int n, long long d) {
    Int pw = 1;
    Int dm1 = d - 1;
    for (int i = 0; i <= n; ++i)
        pw *= dm1;
    return n % 2 == 0 ? (pw + 1) / Int(d) : (pw - 1) / Int(d);
}

}  // namespace

CycloPoly charpoly_from_spectrum(const GermSpec& g) {
    CycloPoly p;
    for (const auto& [theta, m] : eigenvalue_arguments(g))
        p *= CycloPoly::root_factor(theta, m);
    return p;
}

CycloPoly m_reg(int n, long long d) {
    if (n < 2 || d < 2)
        throw std::invalid_argument("m_reg: need n >= 2 and d >= 2");
    CycloPoly p = CycloPoly::lambda_power_minus_one(d, m_reg_packet_exponent(n, d));
    p *= CycloPoly::root_factor(Rational(0), n % 2 == 0 ? Int(-1) : Int(1));
    return p;
}

CycloPoly yomdin_charpoly(int n, long long d, const GermConfiguration& config, long long k) {
    if (k <= d)
        throw std::invalid_argument("yomdin_charpoly: need k > d");
    if (config.ambient_n != n)
        throw std::invalid_argument("yomdin_charpoly: configuration ambient n mismatch");
    CycloPoly p = m_reg(n, d);
    Int total_mu = 0;
    for (const auto& [g, r] : config.entries)
        total_mu += g.milnor * r;
    p *= CycloPoly::lambda_power_minus_one(d, -total_mu);
    for (const auto& [g, r] : config.entries) {
        for (const auto& [theta, m] : eigenvalue_arguments(g)) {
            // det(lambda^k I - T^{k-d}) factor for this eigenvalue
            for (long long j = 0; j < k; ++j) {
                Rational root = ((theta * Rational(Int(k - d))) + Rational(Int(j))) *
                                Rational(1, Int(k));
                p *= CycloPoly::root_factor(root.frac(), m * r);
            }
        }
    }
    return p;
}

EigenvalueBound eigenvalue_max_r(int n, long long d, const GermSpec& g) {
    if (d < 3)
        throw std::invalid_argument("eigenvalue_max_r: d must be >= 3");
    auto eig = eigenvalue_arguments(g);
    Int mu = g.milnor;
    Int packet = m_reg_packet_exponent(n, d);
    EigenvalueBound out;
    for (long long j = 0; j < d; ++j) {
        Rational theta{Int(j), Int(d)};
        // multiplicity of e(theta) as a root of det(lambda^{d+1} I - T):
        // lambda^{d+1} = e(theta (d+1))
        Rational target = (theta * Rational(Int(d + 1))).frac();
        Int det_mult = 0;
        for (const auto& [tp, m] : eig)
            if (tp == target)
                det_mult += m;
        Int coeff = mu - det_mult;
        if (coeff <= 0)
            continue;  // this root never obstructs divisibility
        Int reg = packet + (j == 0 ? Int(n % 2 == 0 ? -1 : 1) : Int(0));
        Int bound = reg / coeff;  // both nonnegative, so this floors
        if (!out.max_r || bound < *out.max_r) {
            out.max_r = bound;
            out.binding = theta;
        }
    }
    return out;
}

}  // namespace spectra
