#include "spectra/germ.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectra {

namespace {

std::string join_exponents(const std::vector<long long>& exponents) {
    std::string s;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(exponents[i]);
    }
    return s;
}

void check_invariants(const GermSpec& g) {
    auto eff = is_effective(g.spectrum);
    if (!eff.effective)
        throw std::invalid_argument("germ '" + g.label + "': spectrum not effective at " +
                                    eff.witness->str());
    if (g.spectrum.mass() != g.milnor)
        throw std::invalid_argument("germ '" + g.label + "': mass != milnor");
    if (!g.spectrum.is_zero()) {
        const Rational& lo = g.spectrum.terms().begin()->first;
        const Rational& hi = g.spectrum.terms().rbegin()->first;
        if (!(Rational(-1) < lo) || !(hi < Rational(g.variables)))
            throw std::invalid_argument("germ '" + g.label +
                                        "': support range: spectral values outside (-1, variables)");
    }
    // symmetry about variables/2 - 1
    Rational center2 = Rational(Int(g.variables) - 2);  // 2 * (n/2 - 1)
    for (const auto& [q, m] : g.spectrum.terms())
        if (g.spectrum.coefficient(center2 - q) != m)
            throw std::invalid_argument("germ '" + g.label + "': symmetry: not symmetric about " +
                                        (Rational(Int(g.variables) - 2) * Rational(1, 2)).str());
}

}  // namespace

GermSpec pham_brieskorn(const std::vector<long long>& exponents) {
    if (exponents.empty())
        throw std::invalid_argument("pham_brieskorn: empty exponent list");
    for (long long a : exponents)
        if (a < 2)
            throw std::invalid_argument("pham_brieskorn: exponents must be >= 2");
    GermSpec g;
    g.label = "PB:" + join_exponents(exponents);
    g.variables = static_cast<int>(exponents.size());
    g.spectrum = gamma(exponents[0]);
    g.milnor = exponents[0] - 1;
    for (std::size_t i = 1; i < exponents.size(); ++i) {
        g.spectrum = star(g.spectrum, gamma(exponents[i]));
        g.milnor *= exponents[i] - 1;
    }
    return g;
}

GermSpec a_singularity(long long k, int variables) {
    if (k < 1)
        throw std::invalid_argument("a_singularity: k must be >= 1");
    if (variables < 1)
        throw std::invalid_argument("a_singularity: needs at least one variable");
    std::vector<long long> exps(static_cast<std::size_t>(variables), 2);
    exps[0] = k + 1;
    GermSpec g = pham_brieskorn(exps);
    g.label = "A:" + std::to_string(k);
    if (k == 1)
        g.middle_hodge_mult = 1;
    return g;
}

GermSpec e_tilde(int which, int variables) {
    std::vector<long long> base;
    switch (which) {
        case 6: base = {3, 3, 3}; break;
        case 7: base = {2, 4, 4}; break;
        case 8: base = {2, 3, 6}; break;
        default: throw std::invalid_argument("e_tilde: which must be 6, 7 or 8");
    }
    if (variables < 3)
        throw std::invalid_argument("e_tilde: needs at least 3 variables");
    std::vector<long long> exps = base;
    exps.resize(static_cast<std::size_t>(variables), 2);
    GermSpec g = pham_brieskorn(exps);
    g.label = "E" + std::to_string(which) + "t";
    if (which == 6 && variables == 3)
        g.middle_hodge_mult = 6;
    return g;
}

GermSpec from_raw_spectrum(const std::vector<std::pair<Rational, Int>>& terms, int variables) {
    if (terms.empty())
        throw std::invalid_argument("from_raw_spectrum: empty term list");
    GermSpec g;
    g.variables = variables;
    for (const auto& [q, m] : terms) {
        if (m <= 0)
            throw std::invalid_argument("from_raw_spectrum: multiplicities must be positive");
        g.spectrum.add(q, m);
    }
    g.milnor = g.spectrum.mass();
    // canonical label in the raw mini-language
    std::string body;
    for (const auto& [q, m] : g.spectrum.terms()) {
        if (!body.empty()) body += ",";
        body += q.str() + "x" + m.str();
    }
    g.label = "raw:[" + body + "]";
    check_invariants(g);
    return g;
}

GermSpec parse_germ(std::string_view text, int variables) {
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("parse_germ '" + std::string(text) + "': " + why);
    };
    if (text.rfind("A:", 0) == 0) {
        std::string k(text.substr(2));
        if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
            throw bad("expected A:<k>");
        return a_singularity(std::stoll(k), variables);
    }
    if (text == "E6t") return e_tilde(6, variables);
    if (text == "E7t") return e_tilde(7, variables);
    if (text == "E8t") return e_tilde(8, variables);
    if (text.rfind("PB:", 0) == 0) {
        std::vector<long long> exps;
        std::string body(text.substr(3));
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string part = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                throw bad("expected PB:<a>,<b>,...");
            exps.push_back(std::stoll(part));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (static_cast<int>(exps.size()) > variables)
            throw bad("more exponents than variables");
        exps.resize(static_cast<std::size_t>(variables), 2);
        GermSpec g = pham_brieskorn(exps);
        return g;
    }
    if (text.rfind("raw:[", 0) == 0 && text.back() == ']') {
        std::string body(text.substr(5, text.size() - 6));
        std::vector<std::pair<Rational, Int>> terms;
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string part =
                body.substr(pos, comma == std::string::npos ? comma : comma - pos);
            std::size_t x = part.find('x');
            if (x == std::string::npos)
                throw bad("raw term must be <value>x<mult>");
            terms.emplace_back(Rational::parse(part.substr(0, x)), Int(part.substr(x + 1)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return from_raw_spectrum(terms, variables);
    }
    throw bad("unknown germ kind");
}

std::vector<Rational> alpha_values(const GermSpec& g, long long d) {
    if (d < 2)
        throw std::invalid_argument("alpha_values: d must be >= 2");
    std::vector<Rational> out;
    for (const auto& [q, m] : g.spectrum.terms()) {
        Rational alpha = (Rational(Int(d)) * q).frac();
        for (Int i = 0; i < m; ++i)
            out.push_back(alpha);
    }
    return out;
}

GermConfiguration make_configuration(int ambient_n,
                                     std::vector<std::pair<GermSpec, Int>> entries) {
    for (const auto& [g, count] : entries) {
        if (count < 1)
            throw std::invalid_argument("configuration: counts must be >= 1");
        if (g.variables != ambient_n)
            throw std::invalid_argument("configuration: germ '" + g.label + "' has " +
                                        std::to_string(g.variables) + " variables, ambient n = " +
                                        std::to_string(ambient_n));
    }
    return GermConfiguration{std::move(entries), ambient_n};
}

ParsedConfiguration parse_configuration(std::string_view text,
                                        std::optional<int> ambient_n_hint) {
    ParsedConfiguration out;
    std::string germs_part(text);
    auto at = text.find('@');
    if (at != std::string_view::npos) {
        germs_part = std::string(text.substr(0, at));
        std::string tail(text.substr(at + 1));
        std::size_t pos = 0;
        while (pos < tail.size()) {
            std::size_t comma = tail.find(',', pos);
            std::string kv = tail.substr(pos, comma == std::string::npos ? comma : comma - pos);
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("parse_configuration: expected key=value after '@'");
            std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
            if (key == "n")
                out.n = std::stoi(value);
            else if (key == "d")
                out.d = std::stoll(value);
            else
                throw std::invalid_argument("parse_configuration: unknown key '" + key + "'");
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    std::optional<int> n = out.n ? out.n : ambient_n_hint;
    if (!n)
        throw std::invalid_argument("parse_configuration: ambient n not given (use @n=...)");
    std::vector<std::pair<GermSpec, Int>> entries;
    std::size_t pos = 0;
    while (pos < germs_part.size()) {
        std::size_t plus = germs_part.find('+', pos);
        std::string item =
            germs_part.substr(pos, plus == std::string::npos ? plus : plus - pos);
        Int count = 1;
        auto starpos = item.rfind('*');
        if (starpos != std::string::npos) {
            count = Int(item.substr(starpos + 1));
            item = item.substr(0, starpos);
        }
        entries.emplace_back(parse_germ(item, *n), count);
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    out.config = make_configuration(*n, std::move(entries));
    return out;
}

}  // namespace spectra
