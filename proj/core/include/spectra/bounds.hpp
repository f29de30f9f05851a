// The four bounding methods for isolated singularities on a degree-d
// hypersurface in P^n, on a common exact-arithmetic footing:
//
//   naive       -- middle Hodge number of the smooth model minus the
//                  hyperplane class, divided by the germ's middle
//                  multiplicity; needs n odd
//   varchenko   -- minimize #(alpha,alpha+1)-window counts of gamma(d)^{*n}
//                  against the germ window count over an exact finite set of
//                  candidate alpha (breakpoints and midpoints)
//   eigenvalue  -- divisibility of monodromy characteristic polynomials,
//                  delegated to the monodromy module
//   conical     -- per-integer-p inequalities comparing the coefficient of
//                  [p/d] in gamma(d)^{*(n+1)} with germ interval counts
//
// plus the deformation spectra behind the conical method (exact elements of
// Z[Q] whose effectiveness is the bound), mixed-type feasibility, and the
// equality sweep between the exact and the grid-restricted Varchenko search.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spectra/combinatorics.hpp"
#include "spectra/germ.hpp"
#include "spectra/monodromy.hpp"

namespace spectra {

struct ConstraintTag {
    std::optional<Int> p;          // conical: the integer numerator p
    std::optional<Rational> alpha; // varchenko: the window base
    std::optional<Rational> theta; // eigenvalue: the binding root argument
};

struct LinearConstraint {
    std::vector<Int> coefficients;  // one per germ type, >= 0
    Int rhs;
    ConstraintTag tag;
};

struct BoundReport {
    std::string method;
    bool applicable = true;
    std::optional<Int> max_r;
    ConstraintTag binding;
    std::vector<LinearConstraint> constraints;
    std::vector<std::string> notes;
};

nlohmann::json to_json(const BoundReport& r);

// ---- deformation spectra ------------------------------------------------

// exact spectrum of f + eps*l^k for a configuration of isolated
// singularities on the degree-d hypersurface: gamma^{*(n+1)} minus the
// degree-d correction kernel plus the degree-k one; k > d
Spectrum yomdin_spectrum(int n, long long d, const GermConfiguration& config, long long k);

// the reduced form with the degree-(d+1) cancellations carried out: only the
// d-grid translates (floor(d q)+j)/d, j = 1..d-1, plus the extra translate
// [floor(d q)/d + 1] for values with d q not an integer
Spectrum conical_reduced_spectrum(int n, long long d, const GermConfiguration& config);

// ---- constraint systems and per-method solvers ---------------------------

// one inequality per integer p with a nonzero germ count: for each germ type
// i, c_i = #(p/d - 1, p/d)-window of its spectrum, and the right-hand side is
// the coefficient of [p/d] in gamma^{*(n+1)} (closed form)
std::vector<LinearConstraint> conical_constraints(int n, long long d,
                                                  const std::vector<GermSpec>& germs);

BoundReport conical_max_r(int n, long long d, const GermSpec& g);

LinearConstraint varchenko_constraint(int n, long long d, const std::vector<GermSpec>& germs,
                                      const Rational& alpha);

// exact minimization over alpha: both window counts are piecewise constant
// with events at support points and their shifts by -1, and the open-window
// counts at an event differ from both adjacent plateaus, so the search
// evaluates breakpoints and midpoints of consecutive breakpoints
BoundReport varchenko_max_r(int n, long long d, const GermSpec& g);

// needs n odd and the germ's middle multiplicity; r <= (h^{k,k} - 1)/c with
// h^{k,k} = primitive + 1
BoundReport naive_bound(int n, long long d, const GermSpec& g);

// adapter over monodromy::eigenvalue_max_r (d >= 3)
BoundReport eigenvalue_bound(int n, long long d, const GermSpec& g);

struct Feasibility {
    bool feasible;
    std::optional<LinearConstraint> violated;  // first violated, ascending p
};
Feasibility mixed_feasible(int n, long long d, const GermConfiguration& config);

// runs naive (when applicable), varchenko, eigenvalue, conical
std::vector<BoundReport> compare_methods(int n, long long d, const GermSpec& g);

// ---- conjecture evidence --------------------------------------------------

struct SweepRow {
    std::string germ;
    int n = 0;
    long long d = 0;
    Int exact;       // full Varchenko minimum
    Int restricted;  // minimum over alpha = p/d - 1 only
    bool equal = false;
    bool restricted_ge_exact = false;  // the proven direction; must hold
};

// exact vs grid-restricted Varchenko over a finite grid; records evidence,
// asserts nothing beyond the proven direction
std::vector<SweepRow> conjecture_sweep(const std::vector<std::string>& germ_texts,
                                       int n_min, int n_max, long long d_min, long long d_max);

nlohmann::json to_json(const SweepRow& row);

// ---- helpers shared by methods and tests ----------------------------------

// count of gamma(d)^{*factors} on the open window (lo, hi), via the closed
// form (no convolution)
Int gamma_window_count(int factors, long long d, const Rational& lo, const Rational& hi);

// largest r >= 0 with base - r*kernel effective; empty when unconstrained
std::optional<Int> max_effective_scale(const Spectrum& base, const Spectrum& kernel);

// largest m such that one A_m germ passes every conical constraint (r = 1)
Int a_series_max_m(int n, long long d);

// closed form for the same quantity from the tail constraint: the largest m
// with (m+1) * ((2-d)(n-1)+4) <= 4d; empty when the denominator is <= 0
std::optional<Int> a_series_max_m_closed_form(int n, long long d);

}  // namespace spectra
