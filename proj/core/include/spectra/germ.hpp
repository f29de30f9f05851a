// Local isolated-singularity data: Pham-Brieskorn spectra, the named presets
// (A_k and the simple-elliptic E6~/E7~/E8~ in their power normal forms), raw
// user-supplied spectra, and the fractional parts alpha = d*lambda - floor
// that drive the cone corrections.
//
// A germ of a hypersurface in P^n lives in exactly n variables; the spectrum
// symmetry center n/2 - 1 silently depends on this, so it is enforced rather
// than papered over.  Padding a normal form with squares shifts the spectrum
// by 1/2 per added variable.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/rational.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

struct GermSpec {
    std::string label;
    int variables = 0;
    Spectrum spectrum;
    Int milnor;
    // vanishing-cohomology middle Hodge multiplicity, when the literature
    // supplies it (A_1 and three-variable E6~); consumed by the naive method
    std::optional<Int> middle_hodge_mult;
};

// spectrum = star of gamma(a_j); milnor = prod (a_j - 1); every exponent >= 2
GermSpec pham_brieskorn(const std::vector<long long>& exponents);

// A_k germ z^{k+1} + (squares) in `variables` variables, k >= 1
GermSpec a_singularity(long long k, int variables);

// E6~ = x^3+y^3+z^3, E7~ = x^2+y^4+z^4, E8~ = x^2+y^3+z^6, padded with
// squares up to `variables`; which must be 6, 7 or 8
GermSpec e_tilde(int which, int variables);

// validates every germ invariant (effectiveness, symmetry about
// variables/2 - 1, support inside (-1, variables)) and names the violated
// one in the diagnostic
GermSpec from_raw_spectrum(const std::vector<std::pair<Rational, Int>>& terms, int variables);

// germ mini-language: "A:11", "E6t", "E7t", "E8t", "PB:3,3,3", "raw:[1/2x1]"
GermSpec parse_germ(std::string_view text, int variables);

// fractional parts d*lambda - floor(d*lambda) per spectral value, with
// multiplicity, in ascending spectrum order; each lies in [0,1)
std::vector<Rational> alpha_values(const GermSpec& g, long long d);

struct GermConfiguration {
    std::vector<std::pair<GermSpec, Int>> entries;  // (germ, count >= 1)
    int ambient_n = 0;                              // hypersurface lives in P^n
};

// validates counts and the variables == ambient_n requirement
GermConfiguration make_configuration(int ambient_n,
                                     std::vector<std::pair<GermSpec, Int>> entries);

struct ParsedConfiguration {
    GermConfiguration config;
    std::optional<int> n;        // from an "@n=..,d=.." suffix, if present
    std::optional<long long> d;
};

// "A:1*16+E6t*2@n=3,d=4"; the suffix is optional when ambient_n_hint is given
ParsedConfiguration parse_configuration(std::string_view text,
                                        std::optional<int> ambient_n_hint);

}  // namespace spectra
