#include "tables.hpp"

#include <stdexcept>

#include "spectra/bounds.hpp"

namespace spectra::tables {

namespace {

struct A1Row {
    long long d;
    long long naive, eigen, conical;
    const char* note;  // e.g. derived cells absent from the published table
};

// nodes on surfaces: naive / eigenvalue / conical, exact
const A1Row kA1N3[] = {
    {3, 6, 5, 4, ""},
    {4, 19, 20, 16, ""},
    {5, 44, 51, 31, ""},
    {6, 85, 104, 68, ""},
    {7, 146, 185, 104, ""},
    {8, 231, 300, 180, "not in the published table; derived"},
    {9, 344, 455, 246, "not in the published table; derived"},
    {10, 489, 656, 375, ""},
    {20, 4579, 6516, 3400, ""},
    {30, 16269, 23576, 11950, ""},
    {40, 39559, 57836, 28900, ""},
    {50, 78449, 115296, 57125, ""},
    {100, 646899, 960596, 468000, ""},
    {1000, 664668999, 996005996, 478042500, ""},
};

struct A1N4Row {
    long long d;
    long long eigen, conical;
};

const A1N4Row kA1N4[] = {
    {3, 11, 10},        {4, 61, 45},         {5, 205, 135},       {6, 521, 320},
    {7, 1111, 651},     {10, 5905, 3195},    {20, 123805, 61465}, {30, 683705, 330310},
    {40, 2255605, 1075230}, {50, 5649505, 2671725}, {100, 95099005, 44270325},
};

struct E6Cell {
    long long golden;       // exact value
    long long published;    // value printed in the source table; -1 = same
    const char* note;
};

struct E6Row {
    long long d;
    bool has_naive, has_eigen, has_conical;
    E6Cell naive, eigen, conical;
};

constexpr E6Cell same(long long v) { return {v, -1, ""}; }

// three-variable E6~ germs on surfaces; the published table rounds several
// non-integral bound values to nearest where the exact bound floors, and two
// conical cells are off by one
const E6Row kE6N3[] = {
    {1, true, false, false, same(0), {}, {}},
    {2, true, false, false, same(0), {}, {}},
    {3, true, false, false, same(1), {}, {}},
    {4, true, true, true, same(3),
     {2, 3, "((d-1)^4-1)/(8d) = 2.5; the bound floors, the published cell rounds up"},
     same(2)},
    {5, true, true, true, same(7), same(6), same(5)},
    {6, true, true, true, same(14), same(13), same(11)},
    {7, true, true, true, same(24), same(23), same(17)},
    {10, true, true, true,
     {81, 82, "(h^{1,1}-1)/6 = 81.5; the bound floors, the published cell rounds up"},
     same(82), same(60)},
    {20, true, true, true, same(763),
     {814, 815, "((d-1)^4-1)/(8d) = 814.5; the bound floors, the published cell rounds up"},
     {571, 570, "floor(b(20,14)/7) = floor(4000/7) = 571; published cell is one low"}},
    {30, true, true, true,
     {2711, 2712, "(h^{1,1}-1)/6 = 2711.5; the bound floors, the published cell rounds up"},
     same(2947), same(2040)},
    {40, true, true, true, same(6593),
     {7229, 7230, "((d-1)^4-1)/(8d) = 7229.5; the bound floors, the published cell rounds up"},
     same(4865)},
    {50, true, true, true,
     {13074, 13075, "(h^{1,1}-1)/6 = 13074.83..; the bound floors, the published cell rounds"},
     same(14412), same(9706)},
    {100, true, true, true,
     {107816, 107817, "(h^{1,1}-1)/6 = 107816.5; the bound floors, the published cell rounds up"},
     {120074, 120075, "((d-1)^4-1)/(8d) = 120074.5; the bound floors, the published cell rounds up"},
     same(79577)},
    {1000, true, true, true,
     {110778166, 110778167,
      "(h^{1,1}-1)/6 = 110778166.5; the bound floors, the published cell rounds up"},
     {124500749, 124500750,
      "((d-1)^4-1)/(8d) = 124500749.5; the bound floors, the published cell rounds up"},
     {81764820, 81764819, "floor(b(1000,667)/7) = 81764820; published cell is one low"}},
};

struct GammaRow {
    int n;
    long long d;
    const char* text;
    const char* published_note;  // nonempty: the printed row differs
};

// canonical renderings of gamma(d)^{*(n+1)}; verified against the published
// corpus term by term (one printed row carries a typo, flagged below)
const GammaRow kGammaAppendix[] = {
    {2, 2, "1[1/2]", ""},
    {2, 3, "1[0] + 3[1/3] + 3[2/3] + 1[1]", ""},
    {2, 4, "1[-1/4] + 3[0] + 6[1/4] + 7[1/2] + 6[3/4] + 3[1] + 1[5/4]", ""},
    {2, 5,
     "1[-2/5] + 3[-1/5] + 6[0] + 10[1/5] + 12[2/5] + 12[3/5] + 10[4/5] + 6[1] + 3[6/5] + 1[7/5]",
     ""},
    {2, 6,
     "1[-1/2] + 3[-1/3] + 6[-1/6] + 10[0] + 15[1/6] + 18[1/3] + 19[1/2] + 18[2/3] + 15[5/6] + "
     "10[1] + 6[7/6] + 3[4/3] + 1[3/2]",
     ""},
    {2, 7,
     "1[-4/7] + 3[-3/7] + 6[-2/7] + 10[-1/7] + 15[0] + 21[1/7] + 25[2/7] + 27[3/7] + 27[4/7] + "
     "25[5/7] + 21[6/7] + 15[1] + 10[8/7] + 6[9/7] + 3[10/7] + 1[11/7]",
     ""},
    {3, 2, "1[1]", ""},
    {3, 3, "1[1/3] + 4[2/3] + 6[1] + 4[4/3] + 1[5/3]", ""},
    {3, 4, "1[0] + 4[1/4] + 10[1/2] + 16[3/4] + 19[1] + 16[5/4] + 10[3/2] + 4[7/4] + 1[2]", ""},
    {3, 5,
     "1[-1/5] + 4[0] + 10[1/5] + 20[2/5] + 31[3/5] + 40[4/5] + 44[1] + 40[6/5] + 31[7/5] + "
     "20[8/5] + 10[9/5] + 4[2] + 1[11/5]",
     ""},
    {3, 6,
     "1[-1/3] + 4[-1/6] + 10[0] + 20[1/6] + 35[1/3] + 52[1/2] + 68[2/3] + 80[5/6] + 85[1] + "
     "80[7/6] + 68[4/3] + 52[3/2] + 35[5/3] + 20[11/6] + 10[2] + 4[13/6] + 1[7/3]",
     ""},
    {3, 7,
     "1[-3/7] + 4[-2/7] + 10[-1/7] + 20[0] + 35[1/7] + 56[2/7] + 80[3/7] + 104[4/7] + 125[5/7] "
     "+ 140[6/7] + 146[1] + 140[8/7] + 125[9/7] + 104[10/7] + 80[11/7] + 56[12/7] + 35[13/7] + "
     "20[2] + 10[15/7] + 4[16/7] + 1[17/7]",
     ""},
    {4, 2, "1[3/2]", ""},
    {4, 3, "1[2/3] + 5[1] + 10[4/3] + 10[5/3] + 5[2] + 1[7/3]", ""},
    {4, 4,
     "1[1/4] + 5[1/2] + 15[3/4] + 30[1] + 45[5/4] + 51[3/2] + 45[7/4] + 30[2] + 15[9/4] + "
     "5[5/2] + 1[11/4]",
     ""},
    {4, 5,
     "1[0] + 5[1/5] + 15[2/5] + 35[3/5] + 65[4/5] + 101[1] + 135[6/5] + 155[7/5] + 155[8/5] + "
     "135[9/5] + 101[2] + 65[11/5] + 35[12/5] + 15[13/5] + 5[14/5] + 1[3]",
     ""},
    {4, 6,
     "1[-1/6] + 5[0] + 15[1/6] + 35[1/3] + 70[1/2] + 121[2/3] + 185[5/6] + 255[1] + 320[7/6] + "
     "365[4/3] + 381[3/2] + 365[5/3] + 320[11/6] + 255[2] + 185[13/6] + 121[7/3] + 70[5/2] + "
     "35[8/3] + 15[17/6] + 5[3] + 1[19/6]",
     ""},
    {4, 7,
     "1[-2/7] + 5[-1/7] + 15[0] + 35[1/7] + 70[2/7] + 126[3/7] + 205[4/7] + 305[5/7] + 420[6/7] "
     "+ 540[1] + 651[8/7] + 735[9/7] + 780[10/7] + 780[11/7] + 735[12/7] + 651[13/7] + 540[2] + "
     "420[15/7] + 305[16/7] + 205[17/7] + 126[18/7] + 70[19/7] + 35[20/7] + 15[3] + 5[22/7] + "
     "1[23/7]",
     ""},
    {5, 2, "1[2]", ""},
    {5, 3, "1[1] + 6[4/3] + 15[5/3] + 20[2] + 15[7/3] + 6[8/3] + 1[3]", ""},
    {5, 4,
     "1[1/2] + 6[3/4] + 21[1] + 50[5/4] + 90[3/2] + 126[7/4] + 141[2] + 126[9/4] + 90[5/2] + "
     "50[11/4] + 21[3] + 6[13/4] + 1[7/2]",
     ""},
    {5, 5,
     "1[1/5] + 6[2/5] + 21[3/5] + 56[4/5] + 120[1] + 216[6/5] + 336[7/5] + 456[8/5] + 546[9/5] "
     "+ 580[2] + 546[11/5] + 456[12/5] + 336[13/5] + 216[14/5] + 120[3] + 56[16/5] + 21[17/5] + "
     "6[18/5] + 1[19/5]",
     ""},
    {5, 6,
     "1[0] + 6[1/6] + 21[1/3] + 56[1/2] + 126[2/3] + 246[5/6] + 426[1] + 666[7/6] + 951[4/3] + "
     "1246[3/2] + 1506[5/3] + 1686[11/6] + 1751[2] + 1686[13/6] + 1506[7/3] + 1246[5/2] + "
     "951[8/3] + 666[17/6] + 426[3] + 246[19/6] + 126[10/3] + 56[7/2] + 21[11/3] + 6[23/6] + "
     "1[4]",
     ""},
    {5, 7,
     "1[-1/7] + 6[0] + 21[1/7] + 56[2/7] + 126[3/7] + 252[4/7] + 456[5/7] + 756[6/7] + 1161[1] "
     "+ 1666[8/7] + 2247[9/7] + 2856[10/7] + 3431[11/7] + 3906[12/7] + 4221[13/7] + 4332[2] + "
     "4221[15/7] + 3906[16/7] + 3431[17/7] + 2856[18/7] + 2247[19/7] + 1666[20/7] + 1161[3] + "
     "756[22/7] + 456[23/7] + 252[24/7] + 126[25/7] + 56[26/7] + 21[27/7] + 6[4] + 1[29/7]",
     ""},
    {6, 2, "1[5/2]", ""},
    {6, 3, "1[4/3] + 7[5/3] + 21[2] + 35[7/3] + 35[8/3] + 21[3] + 7[10/3] + 1[11/3]", ""},
    {6, 4,
     "1[3/4] + 7[1] + 28[5/4] + 77[3/2] + 161[7/4] + 266[2] + 357[9/4] + 393[5/2] + 357[11/4] + "
     "266[3] + 161[13/4] + 77[7/2] + 28[15/4] + 7[4] + 1[17/4]",
     ""},
    {6, 5,
     "1[2/5] + 7[3/5] + 28[4/5] + 84[1] + 203[6/5] + 413[7/5] + 728[8/5] + 1128[9/5] + 1554[2] "
     "+ 1918[11/5] + 2128[12/5] + 2128[13/5] + 1918[14/5] + 1554[3] + 1128[16/5] + 728[17/5] + "
     "413[18/5] + 203[19/5] + 84[4] + 28[21/5] + 7[22/5] + 1[23/5]",
     ""},
    {6, 6,
     "1[1/6] + 7[1/3] + 28[1/2] + 84[2/3] + 210[5/6] + 455[1] + 875[7/6] + 1520[4/3] + "
     "2415[3/2] + 3535[5/3] + 4795[11/6] + 6055[2] + 7140[13/6] + 7875[7/3] + 8135[5/2] + "
     "7875[8/3] + 7140[17/6] + 6055[3] + 4795[19/6] + 3535[10/3] + 2415[7/2] + 1520[11/3] + "
     "875[23/6] + 455[4] + 210[25/6] + 84[13/3] + 28[9/2] + 7[14/3] + 1[29/6]",
     "published row drops 455[4] and 7[14/3] and shifts the tail (printed mass 77670, true mass "
     "78125 = 5^7); the exact row restores the symmetry"},
    {6, 7,
     "1[0] + 7[1/7] + 28[2/7] + 84[3/7] + 210[4/7] + 462[5/7] + 917[6/7] + 1667[1] + 2807[8/7] "
     "+ 4417[9/7] + 6538[10/7] + 9142[11/7] + 12117[12/7] + 15267[13/7] + 18327[2] + "
     "20993[15/7] + 22967[16/7] + 24017[17/7] + 24017[18/7] + 22967[19/7] + 20993[20/7] + "
     "18327[3] + 15267[22/7] + 12117[23/7] + 9142[24/7] + 6538[25/7] + 4417[26/7] + 2807[27/7] "
     "+ 1667[4] + 917[29/7] + 462[30/7] + 210[31/7] + 84[32/7] + 28[33/7] + 7[34/7] + 1[5]",
     ""},
};

struct EWeightedRow {
    long long d;
    long long p1, b1, b1_over_7;
    long long p2, b2;
    long long p3, b3;
    long long naive_golden;
    long long naive_published;  // -1 = same
};

// weighted E6~/E7~/E8~ budgets b(d, p) at the three window choices, the
// familiar b/7 column, and the naive comparison column
const EWeightedRow kE6E7E8[] = {
    {4, 3, 16, 2, 4, 19, 4, 19, 3, -1},
    {5, 4, 40, 5, 4, 40, 5, 44, 7, -1},
    {6, 5, 80, 11, 5, 80, 6, 85, 14, -1},
    {7, 5, 125, 17, 6, 140, 6, 140, 24, -1},
    {8, 6, 206, 29, 7, 224, 7, 224, 38, -1},
    {9, 7, 315, 45, 7, 315, 8, 336, 57, 56},
};

struct A2m1Row {
    long long d;
    long long p;
    long long value;  // coefficient of [p/d]; quartic closed form agrees
};

const A2m1Row kA2m1[] = {
    {3, 5, 10},   {4, 6, 51},    {5, 8, 155},   {6, 9, 381},
    {7, 11, 780}, {8, 12, 1451}, {9, 14, 2460}, {10, 15, 3951},
};

std::string fmt_int(const Int& v) { return v.str(); }

CheckCell make_check(std::string row, std::string column, const Int& computed,
                     long long golden, long long published, const char* note) {
    CheckCell c;
    c.row = std::move(row);
    c.column = std::move(column);
    c.computed = fmt_int(computed);
    c.golden = std::to_string(golden);
    c.match = c.computed == c.golden;
    if (published >= 0 && published != golden)
        c.published = std::to_string(published);
    c.note = note;
    return c;
}

PresetResult preset_a1_n3() {
    PresetResult out;
    out.name = "a1-n3";
    out.title = "nodes (A:1) on surfaces in P^3";
    out.columns = {"d", "naive", "eigenvalue", "conical"};
    GermSpec a1 = a_singularity(1, 3);
    for (const auto& row : kA1N3) {
        Int nv = *naive_bound(3, row.d, a1).max_r;
        Int ev = *eigenvalue_bound(3, row.d, a1).max_r;
        Int cv = *conical_max_r(3, row.d, a1).max_r;
        out.rows.push_back({std::to_string(row.d), fmt_int(nv), fmt_int(ev), fmt_int(cv)});
        std::string key = "d=" + std::to_string(row.d);
        out.checks.push_back(make_check(key, "naive", nv, row.naive, -1, row.note));
        out.checks.push_back(make_check(key, "eigenvalue", ev, row.eigen, -1, row.note));
        out.checks.push_back(make_check(key, "conical", cv, row.conical, -1, row.note));
    }
    return out;
}

PresetResult preset_a1_n4() {
    PresetResult out;
    out.name = "a1-n4";
    out.title = "nodes (A:1) on threefolds in P^4";
    out.columns = {"d", "eigenvalue", "conical"};
    GermSpec a1 = a_singularity(1, 4);
    for (const auto& row : kA1N4) {
        Int ev = *eigenvalue_bound(4, row.d, a1).max_r;
        Int cv = *conical_max_r(4, row.d, a1).max_r;
        out.rows.push_back({std::to_string(row.d), fmt_int(ev), fmt_int(cv)});
        std::string key = "d=" + std::to_string(row.d);
        out.checks.push_back(make_check(key, "eigenvalue", ev, row.eigen, -1, ""));
        out.checks.push_back(make_check(key, "conical", cv, row.conical, -1, ""));
    }
    return out;
}

PresetResult preset_e6_n3() {
    PresetResult out;
    out.name = "e6-n3";
    out.title = "simple-elliptic E6~ germs on surfaces in P^3";
    out.columns = {"d", "naive", "eigenvalue", "conical"};
    GermSpec e6 = e_tilde(6, 3);
    for (const auto& row : kE6N3) {
        std::string key = "d=" + std::to_string(row.d);
        std::vector<std::string> cells{std::to_string(row.d), "", "", ""};
        if (row.has_naive) {
            Int v = *naive_bound(3, row.d, e6).max_r;
            cells[1] = fmt_int(v);
            out.checks.push_back(make_check(key, "naive", v, row.naive.golden,
                                            row.naive.published, row.naive.note));
        }
        if (row.has_eigen) {
            Int v = *eigenvalue_bound(3, row.d, e6).max_r;
            cells[2] = fmt_int(v);
            out.checks.push_back(make_check(key, "eigenvalue", v, row.eigen.golden,
                                            row.eigen.published, row.eigen.note));
        }
        if (row.has_conical) {
            Int v = *conical_max_r(3, row.d, e6).max_r;
            cells[3] = fmt_int(v);
            out.checks.push_back(make_check(key, "conical", v, row.conical.golden,
                                            row.conical.published, row.conical.note));
        }
        out.rows.push_back(std::move(cells));
    }
    return out;
}

PresetResult preset_gamma_appendix() {
    PresetResult out;
    out.name = "gamma-appendix";
    out.title = "gamma(d)^{*(n+1)} corpus, n = 2..6, d = 2..7";
    out.columns = {"n", "d", "spectrum"};
    for (const auto& row : kGammaAppendix) {
        std::string text = to_text(star_power(gamma(row.d), row.n + 1));
        out.rows.push_back({std::to_string(row.n), std::to_string(row.d), text});
        CheckCell c;
        c.row = "n=" + std::to_string(row.n) + " d=" + std::to_string(row.d);
        c.column = "spectrum";
        c.computed = text;
        c.golden = row.text;
        c.match = c.computed == c.golden;
        if (row.published_note[0] != '\0') {
            c.published = "(see note)";
            c.note = row.published_note;
        }
        out.checks.push_back(std::move(c));
    }
    return out;
}

PresetResult preset_e6e7e8_n3() {
    PresetResult out;
    out.name = "e6e7e8-n3";
    out.title = "weighted E6~/E7~/E8~ budgets on surfaces in P^3";
    out.columns = {"d", "p1", "b(d,p1)", "b/7", "p2", "b(d,p2)", "p3", "b(d,p3)", "naive"};
    GermSpec e6 = e_tilde(6, 3);
    for (const auto& row : kE6E7E8) {
        long long d = row.d;
        long long p1 = 2 * d / 3 + 1, p2 = 3 * d / 4 + 1, p3 = 5 * d / 6 + 1;
        Int b1 = b_poly(d, Int(p1)), b2 = b_poly(d, Int(p2)), b3 = b_poly(d, Int(p3));
        Int b1_7 = b1 / 7;
        Int nv = *naive_bound(3, d, e6).max_r;
        out.rows.push_back({std::to_string(d), std::to_string(p1), fmt_int(b1), fmt_int(b1_7),
                            std::to_string(p2), fmt_int(b2), std::to_string(p3), fmt_int(b3),
                            fmt_int(nv)});
        std::string key = "d=" + std::to_string(d);
        out.checks.push_back(make_check(key, "p1", Int(p1), row.p1, -1, ""));
        out.checks.push_back(make_check(key, "b(d,p1)", b1, row.b1, -1, ""));
        out.checks.push_back(make_check(key, "b/7", b1_7, row.b1_over_7, -1, ""));
        out.checks.push_back(make_check(key, "p2", Int(p2), row.p2, -1, ""));
        out.checks.push_back(make_check(key, "b(d,p2)", b2, row.b2, -1, ""));
        out.checks.push_back(make_check(key, "p3", Int(p3), row.p3, -1, ""));
        out.checks.push_back(make_check(key, "b(d,p3)", b3, row.b3, -1, ""));
        out.checks.push_back(make_check(
            key, "naive", nv, row.naive_golden, row.naive_published,
            row.naive_published >= 0 ? "(h^{1,1}-1)/6 = 344/6 = 57.33..; the bound floors, the "
                                       "published comparison row prints 56"
                                     : ""));
    }
    return out;
}

PresetResult preset_a2m1_n4() {
    PresetResult out;
    out.name = "a2m1-n4";
    out.title = "odd A-series window budgets on threefolds in P^4";
    out.columns = {"d", "p", "coefficient", "quartic"};
    for (const auto& row : kA2m1) {
        long long d = row.d;
        long long p = d % 2 == 0 ? 3 * d / 2 : (3 * d + 1) / 2;
        Int coeff = gamma_power_coefficient(5, d, Int(p));
        // quartic closed forms, one per parity of d
        Rational quartic =
            d % 2 == 0
                ? Rational(115, 192) * Rational(Int(d) * d * d * d) -
                      Rational(115, 48) * Rational(Int(d) * d * d) +
                      Rational(185, 48) * Rational(Int(d) * d) - Rational(35, 12) * Rational(Int(d)) +
                      Rational(1)
                : Rational(115, 192) * Rational(Int(d) * d * d * d) -
                      Rational(115, 48) * Rational(Int(d) * d * d) +
                      Rational(355, 96) * Rational(Int(d) * d) -
                      Rational(125, 48) * Rational(Int(d)) + Rational(45, 64);
        out.rows.push_back({std::to_string(d), std::to_string(p), fmt_int(coeff), quartic.str()});
        std::string key = "d=" + std::to_string(d);
        out.checks.push_back(make_check(key, "p", Int(p), row.p, -1, ""));
        out.checks.push_back(make_check(key, "coefficient", coeff, row.value, -1, ""));
        CheckCell qc;
        qc.row = key;
        qc.column = "quartic";
        qc.computed = quartic.str();
        qc.golden = std::to_string(row.value);
        qc.match = qc.computed == qc.golden;
        out.checks.push_back(std::move(qc));
    }
    return out;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"a1-n3", "a1-n4", "e6-n3", "e6e7e8-n3", "gamma-appendix", "a2m1-n4"};
}

PresetResult run_preset(const std::string& name) {
    if (name == "a1-n3") return preset_a1_n3();
    if (name == "a1-n4") return preset_a1_n4();
    if (name == "e6-n3") return preset_e6_n3();
    if (name == "e6e7e8-n3") return preset_e6e7e8_n3();
    if (name == "gamma-appendix") return preset_gamma_appendix();
    if (name == "a2m1-n4") return preset_a2m1_n4();
    throw std::invalid_argument("unknown preset '" + name + "'");
}

std::optional<std::string> published_deviation(const std::string& method, int n, long long d,
                                               const std::string& germ) {
    if (germ == "E6t" && n == 3) {
        for (const auto& row : kE6N3) {
            if (row.d != d)
                continue;
            const E6Cell* cell = nullptr;
            if (method == "naive" && row.has_naive) cell = &row.naive;
            if (method == "eigenvalue" && row.has_eigen) cell = &row.eigen;
            if (method == "conical" && row.has_conical) cell = &row.conical;
            if (cell && cell->published >= 0 && cell->published != cell->golden)
                return "published table prints " + std::to_string(cell->published) + "; " +
                       cell->note;
        }
    }
    return std::nullopt;
}

}  // namespace spectra::tables
