// Monodromy eigenvalue bookkeeping: characteristic polynomials as formal
// root-of-unity products, the regular characteristic polynomial M^reg for a
// smooth-away-from-zero cone, the deformed characteristic polynomial for
// exponent k > d, and the divisibility bound it induces.
//
// A spectral value q corresponds to the semisimple eigenvalue e^{-2*pi*i*q};
// the vertical eigenvalue attached to it has argument frac(d*q).

#pragma once

#include <optional>

#include "spectra/cyclopoly.hpp"
#include "spectra/germ.hpp"

namespace spectra {

// product over spectral values (with multiplicity) of (lambda - e(-q));
// degree equals the Milnor number
CycloPoly charpoly_from_spectrum(const GermSpec& g);

// characteristic polynomial of monodromy for a degree-d cone with isolated
// apex singularity in n+1 variables:
//   n even: (lambda-1)^{-1} (lambda^d-1)^{(1+(d-1)^{n+1})/d}
//   n odd:  (lambda-1)      (lambda^d-1)^{((d-1)^{n+1}-1)/d}
CycloPoly m_reg(int n, long long d);

// m_reg * (lambda^d-1)^{-sum r_i mu_i} * prod_i det(lambda^k I - T_i^{k-d})^{r_i}
// for k > d; an eigenvalue e(theta) of T_i contributes the k roots
// (theta (k-d) + j)/k, j = 0..k-1
CycloPoly yomdin_charpoly(int n, long long d, const GermConfiguration& config, long long k);

struct EigenvalueBound {
    std::optional<Int> max_r;          // empty: no root constrains r
    std::optional<Rational> binding;   // argument of a binding d-th root
};

// largest r >= 0 such that (lambda^d-1)^{r mu} divides
// m_reg * det(lambda^{d+1} I - T)^r, checked at every d-th root of unity;
// d >= 3 required
EigenvalueBound eigenvalue_max_r(int n, long long d, const GermSpec& g);

}  // namespace spectra
