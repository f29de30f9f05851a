// Reference tables: the published bound-comparison tables and the star-power
// spectrum corpus, regenerated from first principles and diffed against
// embedded golden values.
//
// Golden values are the exact ones.  Where the published table prints
// something else (it rounds a handful of non-integral bound values to
// nearest, and a few cells carry typos), the cell carries the published
// value and an explanatory note; `check` reports those as documented
// deviations, never as regressions.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace spectra::tables {

struct CheckCell {
    std::string row;        // "d=20" or "n=6 d=6"
    std::string column;
    std::string computed;
    std::string golden;     // exact expected value
    bool match = false;     // computed == golden
    std::string published;  // nonempty when the source prints a different value
    std::string note;
};

struct PresetResult {
    std::string name;
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;  // computed values, rendered
    std::vector<CheckCell> checks;
};

std::vector<std::string> preset_names();
PresetResult run_preset(const std::string& name);

// documented published-value deviation for a single bound cell, if any
std::optional<std::string> published_deviation(const std::string& method, int n, long long d,
                                               const std::string& germ);

}  // namespace spectra::tables
