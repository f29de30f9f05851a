#include "spectra/bounds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spectra {

namespace {

nlohmann::json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a < 0) != (b < 0) && q * b != a)
        --q;
    return q;
}

Int ceil_rational(const Rational& x) {
    return x.is_integer() ? x.num() : x.floor() + 1;
}

void require_config(int n, long long d, const GermConfiguration& config) {
    if (d < 2)
        throw std::invalid_argument("bounds: d must be >= 2");
    if (config.ambient_n != n)
        throw std::invalid_argument("bounds: configuration is for n = " +
                                    std::to_string(config.ambient_n) + ", not " +
                                    std::to_string(n));
    for (const auto& [g, r] : config.entries)
        if (g.variables != n)
            throw std::invalid_argument("bounds: germ '" + g.label + "' not in " +
                                        std::to_string(n) + " variables");
}

// degree-m correction kernel of one germ: sum over spectral values q (with
// multiplicity) of [q - frac(d q)/m] * beta(m).  For m = d the translates sit
// on the d-grid: (floor(d q) + j)/d, j = 1..d.
Spectrum correction_kernel(const GermSpec& g, long long d, long long m) {
    Spectrum k;
    for (const auto& [q, mult] : g.spectrum.terms()) {
        Rational alpha = (Rational(Int(d)) * q).frac();
        Rational base = q - alpha * Rational(1, Int(m));
        for (long long j = 1; j <= m; ++j)
            k.add(base + Rational(Int(j), Int(m)), mult);
    }
    return k;
}

// reduced kernel: d-grid translates j = 1..d-1 plus the extra translate
// [floor(d q)/d + 1] only for values with d q not an integer
Spectrum reduced_kernel(const GermSpec& g, long long d) {
    Spectrum k;
    for (const auto& [q, mult] : g.spectrum.terms()) {
        Rational dq = Rational(Int(d)) * q;
        Int fl = dq.floor();
        for (long long j = 1; j < d; ++j)
            k.add(Rational(fl + j, Int(d)), mult);
        if (!dq.is_integer())
            k.add(Rational(fl + d, Int(d)), mult);
    }
    return k;
}

// integer p window of constraints that can have a nonzero germ count:
// p/d must fall in (min support, max support + 1)
std::pair<Int, Int> constraint_p_range(long long d, const std::vector<GermSpec>& germs) {
    bool any = false;
    Rational lo, hi;
    for (const auto& g : germs) {
        if (g.spectrum.is_zero())
            continue;
        Rational glo = g.spectrum.terms().begin()->first;
        Rational ghi = g.spectrum.terms().rbegin()->first + Rational(1);
        if (!any || glo < lo) lo = glo;
        if (!any || hi < ghi) hi = ghi;
        any = true;
    }
    if (!any)
        return {Int(1), Int(0)};  // empty range
    Rational dlo = Rational(Int(d)) * lo;
    Rational dhi = Rational(Int(d)) * hi;
    return {dlo.floor() + 1, ceil_rational(dhi) - 1};
}

}  // namespace

nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json j;
    j["method"] = r.method;
    j["applicable"] = r.applicable;
    j["max_r"] = r.max_r ? json_int(*r.max_r) : nlohmann::json();
    if (r.binding.p)
        j["binding"] = {{"p", json_int(*r.binding.p)}};
    else if (r.binding.alpha)
        j["binding"] = {{"alpha", r.binding.alpha->str()}};
    else if (r.binding.theta)
        j["binding"] = {{"theta", r.binding.theta->str()}};
    else
        j["binding"] = nlohmann::json();
    j["constraints"] = nlohmann::json::array();
    for (const auto& c : r.constraints) {
        nlohmann::json jc;
        if (c.tag.p) jc["p"] = json_int(*c.tag.p);
        if (c.tag.alpha) jc["alpha"] = c.tag.alpha->str();
        jc["c"] = nlohmann::json::array();
        for (const auto& ci : c.coefficients)
            jc["c"].push_back(json_int(ci));
        jc["rhs"] = json_int(c.rhs);
        j["constraints"].push_back(jc);
    }
    j["notes"] = r.notes;
    return j;
}

Spectrum yomdin_spectrum(int n, long long d, const GermConfiguration& config, long long k) {
    if (k <= d)
        throw std::invalid_argument("yomdin_spectrum: need k > d");
    require_config(n, d, config);
    Spectrum s = gamma_power_spectrum(n + 1, d);
    for (const auto& [g, r] : config.entries) {
        s -= correction_kernel(g, d, d).scaled(r);
        s += correction_kernel(g, d, k).scaled(r);
    }
    return s;
}

Spectrum conical_reduced_spectrum(int n, long long d, const GermConfiguration& config) {
    require_config(n, d, config);
    Spectrum s = gamma_power_spectrum(n + 1, d);
    for (const auto& [g, r] : config.entries)
        s -= reduced_kernel(g, d).scaled(r);
    return s;
}

std::vector<LinearConstraint> conical_constraints(int n, long long d,
                                                  const std::vector<GermSpec>& germs) {
    if (d < 2)
        throw std::invalid_argument("conical_constraints: d must be >= 2");
    for (const auto& g : germs)
        if (g.variables != n)
            throw std::invalid_argument("conical_constraints: germ '" + g.label + "' not in " +
                                        std::to_string(n) + " variables");
    std::vector<LinearConstraint> out;
    auto [p_first, p_last] = constraint_p_range(d, germs);
    for (Int p = p_first; p <= p_last; ++p) {
        Rational value(p, Int(d));
        LinearConstraint c;
        bool nonzero = false;
        for (const auto& g : germs) {
            Int cnt = count_open_interval(g.spectrum, value - Rational(1), value);
            if (cnt > 0)
                nonzero = true;
            c.coefficients.push_back(cnt);
        }
        if (!nonzero)
            continue;
        c.rhs = gamma_power_coefficient(n + 1, d, p);
        c.tag.p = p;
        out.push_back(std::move(c));
    }
    return out;
}

BoundReport conical_max_r(int n, long long d, const GermSpec& g) {
    BoundReport r;
    r.method = "conical";
    if (d < 2) {
        r.applicable = false;
        r.notes.push_back("method not applicable: d < 2");
        return r;
    }
    r.constraints = conical_constraints(n, d, {g});
    for (const auto& c : r.constraints) {
        if (c.coefficients[0] <= 0)
            continue;
        Int bound = c.rhs / c.coefficients[0];
        if (!r.max_r || bound < *r.max_r) {
            r.max_r = bound;
            r.binding = c.tag;
        }
    }
    if (!r.max_r)
        r.notes.push_back("no bound from this method");
    return r;
}

Int gamma_window_count(int factors, long long d, const Rational& lo, const Rational& hi) {
    if (!(lo < hi))
        throw std::invalid_argument("gamma_window_count: need lo < hi");
    Int p_first = (Rational(Int(d)) * lo).floor() + 1;
    Int p_last = ceil_rational(Rational(Int(d)) * hi) - 1;
    Int s_lo = factors - d;
    Int s_hi = Int(factors) * (d - 1) - d;
    if (p_first < s_lo) p_first = s_lo;
    if (p_last > s_hi) p_last = s_hi;
    Int total = 0;
    for (Int p = p_first; p <= p_last; ++p)
        total += gamma_power_coefficient(factors, d, p);
    return total;
}

LinearConstraint varchenko_constraint(int n, long long d, const std::vector<GermSpec>& germs,
                                      const Rational& alpha) {
    LinearConstraint c;
    c.rhs = gamma_window_count(n, d, alpha, alpha + Rational(1));
    for (const auto& g : germs)
        c.coefficients.push_back(count_open_interval(g.spectrum, alpha, alpha + Rational(1)));
    c.tag.alpha = alpha;
    return c;
}

BoundReport varchenko_max_r(int n, long long d, const GermSpec& g) {
    BoundReport r;
    r.method = "varchenko";
    if (d < 2) {
        r.applicable = false;
        r.notes.push_back("method not applicable: d < 2");
        return r;
    }
    // coefficient table of gamma(d)^{*n} with prefix sums for O(log) windows
    Int s_lo = n - d;
    Int s_hi = Int(n) * (d - 1) - d;
    std::vector<Int> prefix;
    prefix.push_back(0);
    for (Int p = s_lo; p <= s_hi; ++p)
        prefix.push_back(prefix.back() + gamma_power_coefficient(n, d, p));
    auto window = [&](const Rational& a) -> Int {
        Int p_first = (Rational(Int(d)) * a).floor() + 1;
        Int p_last = ceil_rational(Rational(Int(d)) * (a + Rational(1))) - 1;
        if (p_first < s_lo) p_first = s_lo;
        if (p_last > s_hi) p_last = s_hi;
        if (p_first > p_last) return 0;
        auto idx = [&](const Int& p) { return static_cast<std::size_t>(p - s_lo); };
        return prefix[idx(p_last) + 1] - prefix[idx(p_first)];
    };
    // events where either window content can change
    std::set<Rational> support;
    for (Int p = s_lo; p <= s_hi; ++p)
        support.insert(Rational(p, Int(d)));
    for (const auto& [q, m] : g.spectrum.terms())
        support.insert(q);
    std::set<Rational> breakpoints;
    for (const auto& q : support) {
        breakpoints.insert(q);
        breakpoints.insert(q - Rational(1));
    }
    std::vector<Rational> events(breakpoints.begin(), breakpoints.end());
    std::vector<Rational> candidates = events;
    for (std::size_t i = 0; i + 1 < events.size(); ++i)
        candidates.push_back((events[i] + events[i + 1]) * Rational(1, 2));
    std::sort(candidates.begin(), candidates.end());
    for (const auto& a : candidates) {
        Int c = count_open_interval(g.spectrum, a, a + Rational(1));
        if (c <= 0)
            continue;
        Int bound = window(a) / c;
        if (!r.max_r || bound < *r.max_r) {
            r.max_r = bound;
            r.binding.alpha = a;
        }
    }
    if (r.max_r) {
        r.constraints.push_back(varchenko_constraint(n, d, {g}, *r.binding.alpha));
    } else {
        r.notes.push_back("no bound from this method");
    }
    return r;
}

BoundReport naive_bound(int n, long long d, const GermSpec& g) {
    BoundReport r;
    r.method = "naive";
    if (n % 2 == 0) {
        r.applicable = false;
        r.notes.push_back("method not applicable: no bound when n is even");
        return r;
    }
    if (!g.middle_hodge_mult) {
        r.applicable = false;
        r.notes.push_back("insufficient germ data: middle Hodge multiplicity unknown");
        return r;
    }
    // h^{k,k} = primitive + 1 (hyperplane class); the bound is (h^{k,k}-1)/c
    Int primitive = primitive_hodge(n, d, (n - 1) / 2);
    r.max_r = floor_div(primitive, *g.middle_hodge_mult);
    return r;
}

BoundReport eigenvalue_bound(int n, long long d, const GermSpec& g) {
    BoundReport r;
    r.method = "eigenvalue";
    if (d < 3) {
        r.applicable = false;
        r.notes.push_back("method not applicable: d < 3");
        return r;
    }
    EigenvalueBound b = eigenvalue_max_r(n, d, g);
    if (b.max_r) {
        r.max_r = b.max_r;
        r.binding.theta = b.binding;
    } else {
        r.notes.push_back("no bound from this method");
    }
    return r;
}

Feasibility mixed_feasible(int n, long long d, const GermConfiguration& config) {
    require_config(n, d, config);
    std::vector<GermSpec> germs;
    germs.reserve(config.entries.size());
    for (const auto& [g, rr] : config.entries)
        germs.push_back(g);
    for (const auto& c : conical_constraints(n, d, germs)) {
        Int lhs = 0;
        for (std::size_t i = 0; i < config.entries.size(); ++i)
            lhs += c.coefficients[i] * config.entries[i].second;
        if (lhs > c.rhs)
            return {false, c};
    }
    return {true, std::nullopt};
}

std::vector<BoundReport> compare_methods(int n, long long d, const GermSpec& g) {
    std::vector<BoundReport> out;
    out.push_back(naive_bound(n, d, g));
    out.push_back(varchenko_max_r(n, d, g));
    out.push_back(eigenvalue_bound(n, d, g));
    out.push_back(conical_max_r(n, d, g));
    return out;
}

std::vector<SweepRow> conjecture_sweep(const std::vector<std::string>& germ_texts,
                                       int n_min, int n_max, long long d_min, long long d_max) {
    std::vector<SweepRow> rows;
    for (const auto& text : germ_texts) {
        for (int n = n_min; n <= n_max; ++n) {
            GermSpec g = parse_germ(text, n);
            for (long long d = d_min; d <= d_max; ++d) {
                BoundReport exact = varchenko_max_r(n, d, g);
                // restriction of the alpha search to the grid alpha = p/d - 1
                std::optional<Int> restricted;
                auto [p_first, p_last] = constraint_p_range(d, {g});
                for (Int p = p_first; p <= p_last; ++p) {
                    Rational a = Rational(p, Int(d)) - Rational(1);
                    Int c = count_open_interval(g.spectrum, a, a + Rational(1));
                    if (c <= 0)
                        continue;
                    Int bound = gamma_window_count(n, d, a, a + Rational(1)) / c;
                    if (!restricted || bound < *restricted)
                        restricted = bound;
                }
                SweepRow row;
                row.germ = text;
                row.n = n;
                row.d = d;
                row.exact = *exact.max_r;
                row.restricted = *restricted;
                row.equal = row.exact == row.restricted;
                row.restricted_ge_exact = row.restricted >= row.exact;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

nlohmann::json to_json(const SweepRow& row) {
    return {{"germ", row.germ},         {"n", row.n},
            {"d", json_int(Int(row.d))}, {"exact", json_int(row.exact)},
            {"restricted", json_int(row.restricted)}, {"equal", row.equal},
            {"restricted_ge_exact", row.restricted_ge_exact}};
}

std::optional<Int> max_effective_scale(const Spectrum& base, const Spectrum& kernel) {
    std::optional<Int> best;
    for (const auto& [q, k] : kernel.terms()) {
        if (k <= 0)
            continue;
        Int bound = floor_div(base.coefficient(q), k);
        if (!best || bound < *best)
            best = bound;
    }
    return best;
}

Int a_series_max_m(int n, long long d) {
    // sum of window counts is d*mu, total coefficient mass (d-1)^{n+1}, so
    // feasibility forces m <= (d-1)^{n+1}/d
    Int cap = 1;
    for (int i = 0; i <= n; ++i)
        cap *= d - 1;
    cap = cap / d + 1;
    Int best = 0;
    for (Int m = 1; m <= cap; ++m) {
        GermSpec g = a_singularity(static_cast<long long>(m), n);
        GermConfiguration cfg = make_configuration(n, {{g, 1}});
        if (mixed_feasible(n, d, cfg).feasible)
            best = m;
    }
    return best;
}

std::optional<Int> a_series_max_m_closed_form(int n, long long d) {
    Int den = (2 - Int(d)) * (n - 1) + 4;
    if (den <= 0)
        return std::nullopt;
    return floor_div(4 * Int(d), den) - 1;  // largest m with (m+1) den <= 4d
}

}  // namespace spectra
