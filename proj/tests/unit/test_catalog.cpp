#include <doctest.h>

#include <random>

#include "spectra/germ.hpp"

using namespace spectra;

namespace {
Rational rat(long long n, long long d = 1) { return Rational(Int(n), Int(d)); }
}

TEST_CASE("pham-brieskorn spectra") {
    GermSpec e6 = pham_brieskorn({3, 3, 3});
    CHECK(to_text(e6.spectrum) == "1[0] + 3[1/3] + 3[2/3] + 1[1]");
    CHECK(e6.milnor == 8);
    CHECK(e6.variables == 3);

    GermSpec node = pham_brieskorn({2, 2, 2});
    CHECK(to_text(node.spectrum) == "1[1/2]");
    CHECK(node.milnor == 1);

    GermSpec e8 = pham_brieskorn({2, 3, 6});
    CHECK(to_text(e8.spectrum) ==
          "1[0] + 1[1/6] + 2[1/3] + 2[1/2] + 2[2/3] + 1[5/6] + 1[1]");
    CHECK(e8.milnor == 10);

    CHECK_THROWS_AS(pham_brieskorn({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(pham_brieskorn({}), std::invalid_argument);
}

TEST_CASE("pham-brieskorn milnor numbers for random exponent lists") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> len(1, 4), expo(2, 9);
    for (int i = 0; i < 30; ++i) {
        std::vector<long long> exps;
        Int mu = 1;
        for (int j = len(rng); j > 0; --j) {
            exps.push_back(expo(rng));
            mu *= exps.back() - 1;
        }
        if (mu > 10000)
            continue;
        GermSpec g = pham_brieskorn(exps);
        CHECK(g.spectrum.mass() == mu);
        CHECK(g.milnor == mu);
    }
}

TEST_CASE("padding with a square shifts the spectrum by 1/2") {
    for (auto exps : std::vector<std::vector<long long>>{{3, 3}, {2, 5}, {4, 3, 2}}) {
        GermSpec base = pham_brieskorn(exps);
        auto padded_exps = exps;
        padded_exps.push_back(2);
        GermSpec padded = pham_brieskorn(padded_exps);
        CHECK(padded.spectrum == shift(base.spectrum, rat(1, 2)));
    }
}

TEST_CASE("named germs") {
    GermSpec a1 = a_singularity(1, 3);
    CHECK(to_text(a1.spectrum) == "1[1/2]");
    CHECK(a1.middle_hodge_mult.has_value());
    CHECK(*a1.middle_hodge_mult == 1);

    // node in n variables has the single value n/2 - 1
    for (int n = 1; n <= 6; ++n) {
        GermSpec a = a_singularity(1, n);
        CHECK(a.spectrum == Spectrum::term(rat(n - 2, 2)));
    }

    // A_k has k distinct values, all multiplicity one
    for (long long k = 1; k <= 9; ++k) {
        GermSpec a = a_singularity(k, 4);
        CHECK(a.spectrum.term_count() == static_cast<std::size_t>(k));
        CHECK(a.milnor == k);
        for (const auto& [q, m] : a.spectrum.terms())
            CHECK(m == 1);
    }

    // A_{2m+1} in four variables: values j/(2m+2) + 1/2
    for (long long m = 1; m <= 4; ++m) {
        GermSpec a = a_singularity(2 * m + 1, 4);
        Spectrum want;
        for (long long j = 1; j <= 2 * m + 1; ++j)
            want.add(rat(j, 2 * m + 2) + rat(1, 2), 1);
        CHECK(a.spectrum == want);
    }

    GermSpec e7 = e_tilde(7, 3);
    CHECK(to_text(e7.spectrum) == "1[0] + 2[1/4] + 3[1/2] + 2[3/4] + 1[1]");
    CHECK(e7.milnor == 9);
    CHECK(!e7.middle_hodge_mult.has_value());

    GermSpec e6 = e_tilde(6, 3);
    CHECK(e6.middle_hodge_mult.has_value());
    CHECK(*e6.middle_hodge_mult == 6);
    CHECK(!e_tilde(6, 4).middle_hodge_mult.has_value());  // only the 3-variable form

    CHECK_THROWS_AS(e_tilde(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(e_tilde(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(a_singularity(0, 3), std::invalid_argument);
}

TEST_CASE("raw spectra validate every invariant") {
    GermSpec e6 = e_tilde(6, 3);
    std::vector<std::pair<Rational, Int>> terms;
    for (const auto& [q, m] : e6.spectrum.terms())
        terms.emplace_back(q, m);
    GermSpec raw = from_raw_spectrum(terms, 3);
    CHECK(raw.spectrum == e6.spectrum);
    CHECK(raw.milnor == e6.milnor);

    CHECK_THROWS_WITH_AS(from_raw_spectrum({{rat(1, 3), 1}, {rat(1, 3), 1}}, 3),
                         doctest::Contains("symmetry"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(from_raw_spectrum({{rat(-2), 1}, {rat(3), 1}}, 3),
                         doctest::Contains("support range"), std::invalid_argument);
    CHECK_THROWS_AS(from_raw_spectrum({}, 3), std::invalid_argument);
    CHECK_THROWS_AS(from_raw_spectrum({{rat(1, 2), -1}}, 3), std::invalid_argument);
}

TEST_CASE("alpha values: fractional parts of d*lambda") {
    GermSpec a1 = a_singularity(1, 3);  // value 1/2
    CHECK(alpha_values(a1, 4) == std::vector<Rational>{rat(0)});
    CHECK(alpha_values(a1, 5) == std::vector<Rational>{rat(1, 2)});

    GermSpec e6 = e_tilde(6, 3);
    for (const auto& a : alpha_values(e6, 4)) {
        CHECK(!(a < rat(0)));
        CHECK(a < rat(1));
    }
    // lambda = 1/3 at d = 4 gives 4/3 - 1 = 1/3
    auto alphas = alpha_values(e6, 4);
    CHECK(std::count(alphas.begin(), alphas.end(), rat(1, 3)) == 3);
    CHECK(alphas.size() == 8);
}

TEST_CASE("germ mini-language") {
    CHECK(parse_germ("A:11", 4).milnor == 11);
    CHECK(parse_germ("E6t", 3).spectrum == e_tilde(6, 3).spectrum);
    CHECK(parse_germ("PB:3,3,3", 3).spectrum == e_tilde(6, 3).spectrum);
    CHECK(parse_germ("PB:3,3", 3).spectrum == shift(pham_brieskorn({3, 3}).spectrum, rat(1, 2)));
    CHECK(parse_germ("raw:[1/2x1]", 3).spectrum == Spectrum::term(rat(1, 2)));
    CHECK_THROWS_AS(parse_germ("D:4", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_germ("PB:3,3,3,3", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_germ("raw:[1/3x1,1/3x1]", 3), std::invalid_argument);
}

TEST_CASE("configurations enforce the ambient variable count") {
    GermSpec a1 = a_singularity(1, 3);
    CHECK_THROWS_AS(make_configuration(4, {{a1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_configuration(3, {{a1, 0}}), std::invalid_argument);

    auto parsed = parse_configuration("A:1*16+E6t*2@n=3,d=4", std::nullopt);
    CHECK(parsed.n == 3);
    CHECK(parsed.d == 4);
    CHECK(parsed.config.entries.size() == 2);
    CHECK(parsed.config.entries[0].second == 16);
    CHECK(parsed.config.entries[1].first.label == "E6t");

    auto hinted = parse_configuration("A:12", 4);
    CHECK(hinted.config.entries.size() == 1);
    CHECK(hinted.config.entries[0].second == 1);
    CHECK_THROWS_AS(parse_configuration("A:1", std::nullopt), std::invalid_argument);
}
