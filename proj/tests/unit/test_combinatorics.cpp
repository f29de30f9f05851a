#include <doctest.h>

#include <map>
#include <vector>

#include "spectra/combinatorics.hpp"

using namespace spectra;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(Int(n), Int(d)); }

// oracle: distribution of k-part sums with parts in [1, alpha], by dynamic
// programming (independent of the inclusion-exclusion route)
std::map<long long, Int> sum_distribution(int k, int alpha) {
    std::map<long long, Int> ways{{0, 1}};
    for (int part = 0; part < k; ++part) {
        std::map<long long, Int> next;
        for (const auto& [s, c] : ways)
            for (int x = 1; x <= alpha; ++x)
                next[s + x] += c;
        ways = std::move(next);
    }
    return ways;
}

}  // namespace

TEST_CASE("binomial conventions") {
    CHECK(binom_poly(Int(-1), 3) == -1);
    CHECK(binom_poly(Int(5), 2) == 10);
    CHECK(binom_poly(Int(-7), 0) == 1);
    CHECK(binom_poly(Int(2), 5) == 0);  // zero factor in the falling product
    CHECK_THROWS_AS(binom_poly(Int(1), -1), std::invalid_argument);

    CHECK(binom_std(Int(2), 3) == 0);
    CHECK(binom_std(Int(-1), 3) == 0);
    CHECK(binom_std(Int(8), 3) == 56);
    CHECK_THROWS_AS(binom_std(Int(1), -1), std::invalid_argument);
}

TEST_CASE("bounded compositions agree with exhaustive enumeration") {
    CHECK(bounded_compositions(Int(6), 3, 3) == 7);
    CHECK(bounded_compositions(Int(3), 3, 5) == 1);
    CHECK(bounded_compositions(Int(2), 3, 9) == 0);
    for (int k = 1; k <= 6; ++k) {
        for (int alpha = 1; alpha <= 8; ++alpha) {
            auto dist = sum_distribution(k, alpha);
            for (long long N = 0; N <= 40; ++N) {
                Int want = dist.count(N) ? dist[N] : Int(0);
                CHECK(bounded_compositions(Int(N), k, alpha) == want);
            }
        }
    }
}

TEST_CASE("gamma power coefficients: closed form vs convolution") {
    CHECK(gamma_power_coefficient(3, 3, rat(1, 3)) == 3);
    CHECK(gamma_power_coefficient(4, 4, rat(3, 4)) == 16);
    CHECK(gamma_power_coefficient(5, 4, rat(3, 2)) == 51);
    CHECK_THROWS_AS(gamma_power_coefficient(4, 4, rat(1, 3)), std::invalid_argument);

    for (int f = 2; f <= 7; ++f) {
        for (long long d = 2; d <= 7; ++d) {
            Spectrum conv = star_power(gamma(d), f);
            for (Int p = f - d - 2; p <= Int(f) * (d - 1) - d + 2; ++p)
                CHECK(gamma_power_coefficient(f, d, p) == conv.coefficient(Rational(p, Int(d))));
            CHECK(gamma_power_spectrum(f, d) == conv);
        }
    }
}

TEST_CASE("primitive Hodge numbers") {
    CHECK(primitive_hodge(3, 4, 1) == 19);
    CHECK(primitive_hodge(3, 4, 0) == 1);
    CHECK(primitive_hodge(4, 3, 1) == 5);
    CHECK(primitive_hodge(3, 4, 2) == 1);   // symmetry k <-> n-1-k
    CHECK(primitive_hodge(3, 1, 1) == 0);   // hyperplane
    CHECK(primitive_hodge(3, 2, 1) == 1);   // quadric surface
    CHECK_THROWS_AS(primitive_hodge(3, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(primitive_hodge(1, 4, 0), std::invalid_argument);
}

TEST_CASE("middle coefficient identity: hodge number = central star-power coefficient") {
    for (int n = 2; n <= 6; ++n)
        for (long long d = n + 1; d <= 9; ++d)
            for (int k = 0; 2 * k <= n - 1; ++k)
                CHECK(primitive_hodge(n, d, k) ==
                      gamma_power_coefficient(n + 1, d, Int(n - k - 1) * d));
}

TEST_CASE("euler characteristic recurrence is an independent oracle") {
    CHECK(chi_omega(3, 4, 0) == 2);
    CHECK(chi_omega(3, 4, 1) == -20);
    // [h^{k,n-1-k}]' = (-1)^{n-1-k} chi(Omega^k) + (-1)^n, all middle indices
    for (int n = 2; n <= 6; ++n) {
        for (long long d = 1; d <= 9; ++d) {
            for (int k = 0; k <= n - 1; ++k) {
                Int chi = chi_omega(n, d, k);
                Int lhs = primitive_hodge(n, d, k);
                Int rhs = ((n - 1 - k) % 2 == 0 ? chi : -chi) + (n % 2 == 0 ? 1 : -1);
                CHECK(lhs == rhs);
            }
        }
    }
    CHECK_THROWS_AS(chi_omega(3, 4, 3), std::invalid_argument);
}

TEST_CASE("b polynomial") {
    CHECK(b_poly(4, Int(3)) == 16);
    CHECK(b_poly(6, Int(12 / 3 + 1)) / 7 == 11);
    // agrees with the 4-factor coefficient on the nonnegative range
    for (long long d = 4; d <= 9; ++d)
        for (Int p = 0; p <= 3 * d - 4; ++p)
            CHECK(b_poly(d, p) == gamma_power_coefficient(4, d, p));
}

TEST_CASE("interval identity between consecutive star powers") {
    for (int n = 1; n <= 6; ++n) {
        for (long long d = 2; d <= 7; ++d) {
            Spectrum lower = star_power(gamma(d), n);
            for (Int p = n + 1 - d - 2; p <= Int(n + 1) * (d - 1) - d + 2; ++p) {
                Rational v(p, Int(d));
                CHECK(gamma_power_coefficient(n + 1, d, p) ==
                      count_open_interval(lower, v - rat(1), v));
            }
        }
    }
}
