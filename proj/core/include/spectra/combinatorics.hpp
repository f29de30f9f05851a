// Closed-form integer combinatorics: the two binomial conventions, bounded
// compositions, star-power coefficients of gamma(d), middle primitive Hodge
// numbers of smooth hypersurfaces, and the Euler-characteristic recurrence
// that serves as their independent oracle.
//
// Two binomial conventions coexist and are never mixed implicitly:
//   binom_poly  -- polynomial extension p(p-1)...(p-q+1)/q!, signed for p < 0
//   binom_std   -- combinatorial convention, zero unless p >= q >= 0
// The Hodge formulas need the first, the counting formulas the second.

#pragma once

#include "spectra/rational.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

Int binom_poly(const Int& p, long long q);
Int binom_std(const Int& p, long long q);

// number of k-tuples with entries in [1, alpha] summing to N
// (inclusion-exclusion; terms are summed until they vanish)
Int bounded_compositions(const Int& N, long long k, long long alpha);

// multiplicity of [p/d] in gamma(d)^{*factors}; p is the integer numerator
// over denominator d, and values outside the support give 0
Int gamma_power_coefficient(int factors, long long d, const Int& p);

// convenience wrapper; rejects values whose reduced denominator does not
// divide d
Int gamma_power_coefficient(int factors, long long d, const Rational& value);

// gamma(d)^{*factors} materialized from the closed form, term by term --
// usable at degrees where the convolution route would be wasteful
Spectrum gamma_power_spectrum(int factors, long long d);

struct HodgeQuery {
    int n;        // ambient projective dimension, >= 2
    long long d;  // degree, >= 1
    int k;        // Hodge index, 0 <= k <= n-1
};

// middle primitive Hodge number [h^{k,n-1-k}]' of a smooth degree-d
// hypersurface in P^n; indices above the middle answered by symmetry
Int primitive_hodge(const HodgeQuery& q);
inline Int primitive_hodge(int n, long long d, int k) { return primitive_hodge({n, d, k}); }

// Euler characteristic chi(Omega^k_X) via the sheaf recurrence; independent
// oracle through [h^{k,n-1-k}]' = (-1)^{n-1-k} chi(Omega^k_X) + (-1)^n
Int chi_omega(int n, long long d, int k);

// C(3d-p-1,3) - 4 C(2d-p,3) + 6 C(d-p+1,3), combinatorial convention;
// equals gamma_power_coefficient(4, d, p) for p >= 0
Int b_poly(long long d, const Int& p);

}  // namespace spectra
