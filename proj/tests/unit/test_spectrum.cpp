#include <doctest.h>

#include <random>

#include "spectra/spectrum.hpp"

using namespace spectra;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(Int(n), Int(d)); }

// small random spectra, multiplicities possibly negative
Spectrum random_spectrum(std::mt19937& rng) {
    std::uniform_int_distribution<int> terms(1, 5), num(-10, 10), den(1, 6), mult(-4, 4);
    Spectrum s;
    for (int i = terms(rng); i > 0; --i) {
        int m = mult(rng);
        if (m == 0) m = 1;
        s.add(rat(num(rng), den(rng)), m);
    }
    return s;
}

// reference count by full scan
Int scan_count(const Spectrum& s, const Rational& lo, const Rational& hi) {
    Int t = 0;
    for (const auto& [q, m] : s.terms())
        if (lo < q && q < hi)
            t += m;
    return t;
}

}  // namespace

TEST_CASE("star on generators: [0]*[q] = [q+1]") {
    Spectrum q = Spectrum::term(rat(-2, 3));
    CHECK(star(Spectrum::term(rat(0)), q) == Spectrum::term(rat(1, 3)));
    CHECK(star(Spectrum(), q).is_zero());  // empty spectrum annihilates
}

TEST_CASE("gamma and beta generators") {
    CHECK(to_text(gamma(2)) == "1[-1/2]");
    CHECK(to_text(gamma(3)) == "1[-2/3] + 1[-1/3]");
    CHECK(gamma(1).is_zero());
    CHECK_THROWS_AS(gamma(0), std::invalid_argument);
    CHECK(to_text(beta(1)) == "1[0]");
    CHECK(to_text(beta(2)) == "1[-1/2] + 1[0]");
    CHECK(beta(3) == gamma(3) + Spectrum::term(rat(0)));
    CHECK_THROWS_AS(beta(0), std::invalid_argument);
}

TEST_CASE("star powers reproduce published spectra") {
    CHECK(star_power(gamma(2), 3) == Spectrum::term(rat(1, 2)));
    Spectrum g34 = star_power(gamma(3), 4);
    CHECK(to_text(g34) == "1[1/3] + 4[2/3] + 6[1] + 4[4/3] + 1[5/3]");
    Spectrum g44 = star_power(gamma(4), 4);
    CHECK(g44.coefficient(rat(1)) == 19);
    CHECK(g44.coefficient(rat(3, 4)) == 16);
    CHECK(star_power(Spectrum::term(rat(0)), 5) == Spectrum::term(rat(4)));
    CHECK_THROWS_AS(star_power(gamma(3), 0), std::invalid_argument);
}

TEST_CASE("star is commutative and associative; mass is multiplicative") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 25; ++i) {
        Spectrum a = random_spectrum(rng), b = random_spectrum(rng), c = random_spectrum(rng);
        CHECK(star(a, b) == star(b, a));
        CHECK(star(star(a, b), c) == star(a, star(b, c)));
        CHECK(star(a, b).mass() == a.mass() * b.mass());
    }
}

TEST_CASE("gamma star powers: mass and symmetry about n/2 - 1") {
    for (long long d = 1; d <= 8; ++d) {
        for (int n = 1; n <= 8; ++n) {
            if (d == 1) {
                CHECK(gamma(1).is_zero());
                continue;
            }
            Spectrum s = star_power(gamma(d), n);
            Int mass = 1;
            for (int i = 0; i < n; ++i)
                mass *= d - 1;
            CHECK(s.mass() == mass);
            Rational center2 = rat(n - 2);  // 2*(n/2 - 1)
            for (const auto& [q, m] : s.terms())
                CHECK(s.coefficient(center2 - q) == m);
        }
    }
}

TEST_CASE("coefficient lookups") {
    CHECK(star_power(gamma(3), 3).coefficient(rat(5)) == 0);
    CHECK(star_power(gamma(7), 4).coefficient(rat(1)) == 146);
}

TEST_CASE("open interval counts match a full scan") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-8, 8), den(1, 5);
    for (int i = 0; i < 40; ++i) {
        Spectrum s = random_spectrum(rng);
        Rational lo = rat(num(rng), den(rng));
        Rational hi = lo + rat(num(rng) + 9, den(rng));
        CHECK(count_open_interval(s, lo, hi) == scan_count(s, lo, hi));
    }
    Spectrum g73 = star_power(gamma(7), 3);
    CHECK(count_open_interval(g73, rat(-3, 7), rat(4, 7)) == 104);
    CHECK(count_open_interval(star_power(gamma(3), 3), rat(-1, 3), rat(2, 3)) == 4);
    CHECK(count_open_interval(g73, rat(50), rat(60)) == 0);
    CHECK_THROWS_AS(count_open_interval(g73, rat(1), rat(1)), std::invalid_argument);
}

TEST_CASE("effectiveness verdict and witness") {
    CHECK(is_effective(star_power(gamma(5), 4)).effective);
    Spectrum s = star_power(gamma(3), 3);
    s.add(rat(1, 3), -2);
    s.add(rat(9), -3);
    auto v = is_effective(s);
    CHECK(!v.effective);
    CHECK(*v.witness == rat(9));  // smallest value with negative multiplicity
}

TEST_CASE("linear combinations cancel exactly") {
    Spectrum a = star_power(gamma(4), 3);
    CHECK(linear_combination({{1, a}, {-1, a}}).is_zero());
    CHECK(linear_combination({{2, Spectrum::term(rat(1, 2))}, {3, Spectrum::term(rat(1, 2))}}) ==
          Spectrum::term(rat(1, 2), 5));
}

TEST_CASE("shift translates values") {
    Spectrum s = Spectrum::term(rat(0)) + Spectrum::term(rat(1), 2);
    CHECK(to_text(shift(s, rat(1, 2))) == "1[1/2] + 2[3/2]");
    CHECK(shift(s, rat(0)) == s);
}

TEST_CASE("canonical text rendering") {
    CHECK(to_text(Spectrum()) == "0");
    Spectrum s;
    s.add(rat(-1, 2), 1);
    s.add(rat(2), -3);
    CHECK(to_text(s) == "1[-1/2] - 3[2]");
}

TEST_CASE("json round trip") {
    std::mt19937 rng(99);
    for (int i = 0; i < 10; ++i) {
        Spectrum s = random_spectrum(rng);
        CHECK(spectrum_from_json(to_json(s)) == s);
    }
    auto j = to_json(gamma(3));
    CHECK(j["terms"][0]["num"] == -2);
    CHECK(j["terms"][0]["den"] == 3);
    CHECK(j["terms"][0]["mult"] == 1);
}
