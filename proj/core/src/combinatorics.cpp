#include "spectra/combinatorics.hpp"

#include <stdexcept>

namespace spectra {

Int binom_poly(const Int& p, long long q) {
    if (q < 0)
        throw std::invalid_argument("binom_poly: q must be >= 0");
    Int num = 1;
    Int den = 1;
    for (long long j = 0; j < q; ++j) {
        num *= p - j;
        den *= j + 1;
    }
    return num / den;  // exact: q! divides any product of q consecutive integers
}

Int binom_std(const Int& p, long long q) {
    if (q < 0)
        throw std::invalid_argument("binom_std: q must be >= 0");
    if (p < q)
        return 0;
    return binom_poly(p, q);
}

Int bounded_compositions(const Int& N, long long k, long long alpha) {
    if (k < 1 || alpha < 1)
        throw std::invalid_argument("bounded_compositions: need k >= 1 and alpha >= 1");
    Int total = 0;
    Int sign = 1;
    for (long long i = 0; i <= k; ++i) {
        total += sign * binom_std(Int(k), i) * binom_std(N - Int(alpha) * i - 1, k - 1);
        sign = -sign;
    }
    return total;
}

Int gamma_power_coefficient(int factors, long long d, const Int& p) {
    if (factors < 1)
        throw std::invalid_argument("gamma_power_coefficient: factors must be >= 1");
    if (d < 2)
        throw std::invalid_argument("gamma_power_coefficient: d must be >= 2");
    // [p/d] has multiplicity = #compositions of d(factors-1)-p into `factors`
    // parts from [1, d-1]
    return bounded_compositions(Int(d) * (factors - 1) - p, factors, d - 1);
}

Int gamma_power_coefficient(int factors, long long d, const Rational& value) {
    if (Int(d) % value.den() != 0)
        throw std::invalid_argument(
            "gamma_power_coefficient: value " + value.str() + " is not on the 1/" +
            std::to_string(d) + " grid");
    return gamma_power_coefficient(factors, d, value.num() * (Int(d) / value.den()));
}

Spectrum gamma_power_spectrum(int factors, long long d) {
    if (factors < 1)
        throw std::invalid_argument("gamma_power_spectrum: factors must be >= 1");
    if (d < 1)
        throw std::invalid_argument("gamma_power_spectrum: d must be >= 1");
    Spectrum s;
    if (d == 1)
        return s;  // gamma(1) is the zero element, and so is any star power
    // support runs over p/d for p in [factors-d, factors(d-1)-d]
    for (Int p = factors - d; p <= Int(factors) * (d - 1) - d; ++p)
        s.add(Rational(p, Int(d)), gamma_power_coefficient(factors, d, p));
    return s;
}

Int primitive_hodge(const HodgeQuery& q) {
    if (q.n < 2 || q.d < 1 || q.k < 0 || q.k > q.n - 1)
        throw std::invalid_argument("primitive_hodge: invalid (n, d, k)");
    int k = q.k;
    if (2 * k > q.n - 1)
        k = q.n - 1 - k;  // [h^{k,n-1-k}]' = [h^{n-1-k,k}]'
    Int total = 0;
    Int sign = 1;
    for (int i = 0; i <= k; ++i) {
        total += sign * binom_std(Int(q.n) + 1, i) *
                 binom_poly(Int(q.n) - (k + 1) * Int(q.d) + (Int(q.d) - 1) * i, q.n);
        sign = -sign;
    }
    if (q.n % 2 != 0)
        total = -total;
    return total;
}

Int chi_omega(int n, long long d, int k) {
    if (n < 2 || d < 1 || k < 0 || k > n - 1)
        throw std::invalid_argument("chi_omega: invalid (n, d, k)");
    Int total = 0;
    for (int m = 0; m <= k; ++m) {
        for (int j = 0; j <= m; ++j) {
            Int term = binom_std(Int(n) + 1, m - j) *
                       (binom_poly(Int(n) - m - Int(d) * (k - m) + j, n) -
                        binom_poly(Int(n) - m - Int(d) * (k - m + 1) + j, n));
            if (((k - m) + j) % 2 != 0)
                term = -term;
            total += term;
        }
    }
    return total;
}

Int b_poly(long long d, const Int& p) {
    return binom_std(3 * Int(d) - p - 1, 3) - 4 * binom_std(2 * Int(d) - p, 3) +
           6 * binom_std(Int(d) - p + 1, 3);
}

}  // namespace spectra
