#include "dopt/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "dopt/verify.hpp"

namespace dopt {

const char* to_string(EntryStatus status) {
    return status == EntryStatus::Known ? "known" : "open";
}

bool CatalogEntry::has_data() const {
    return !x_set.empty() || !j_set.empty();
}

namespace {

// Status of every feasible parameter set with odd v < 200.
const std::vector<StatusRow> kStatusTable = {
    {3, 1, 0, 0, true},      {5, 1, 1, 0, true},      {7, 3, 1, 1, true},
    {9, 3, 2, 1, true},      {13, 6, 3, 3, true},     {13, 4, 4, 2, true},
    {15, 6, 4, 3, true},     {19, 7, 6, 4, true},     {21, 10, 6, 6, true},
    {23, 10, 7, 6, true},    {25, 9, 9, 6, true},     {27, 11, 9, 7, true},
    {31, 15, 10, 10, true},  {33, 15, 11, 10, true},  {33, 13, 12, 9, true},
    {37, 16, 13, 11, true},  {41, 16, 16, 12, true},  {43, 21, 15, 15, true},
    {43, 18, 16, 13, true},  {45, 21, 16, 15, true},  {49, 22, 18, 16, true},
    {51, 21, 20, 16, true},  {55, 24, 21, 18, true},  {57, 28, 21, 21, true},
    {59, 28, 22, 21, true},  {61, 25, 25, 20, true},  {63, 29, 24, 22, true},
    {63, 27, 25, 21, true},  {69, 31, 27, 24, false}, {73, 36, 28, 28, true},
    {73, 31, 30, 25, true},  {75, 36, 29, 28, false}, {77, 34, 31, 27, false},
    {79, 37, 31, 29, true},  {85, 39, 34, 31, false}, {85, 36, 36, 30, true},
    {87, 38, 36, 31, false}, {91, 45, 36, 36, true},  {93, 45, 37, 36, true},
    {93, 42, 38, 34, true},  {97, 46, 39, 37, true},  {99, 43, 42, 36, false},
    {103, 48, 42, 39, true},  {103, 46, 43, 38, true},  {111, 55, 45, 45, false},
    {111, 51, 46, 42, false}, {113, 55, 46, 45, false}, {113, 49, 49, 42, true},
    {115, 51, 49, 43, false}, {117, 56, 48, 46, false}, {121, 55, 51, 46, true},
    {123, 58, 51, 48, false}, {129, 57, 56, 49, false}, {131, 61, 55, 51, true},
    {133, 66, 55, 55, true},  {133, 60, 57, 51, false}, {135, 66, 56, 55, false},
    {139, 67, 58, 56, false}, {141, 65, 60, 55, false}, {145, 69, 61, 58, false},
    {145, 64, 64, 56, true},  {147, 66, 64, 57, false}, {153, 72, 65, 61, false},
    {153, 70, 66, 60, false}, {157, 78, 66, 66, true},  {159, 78, 67, 66, false},
    {163, 79, 69, 67, false}, {163, 76, 70, 65, false}, {163, 73, 72, 64, false},
    {167, 76, 73, 66, false}, {169, 81, 72, 69, false}, {175, 81, 76, 70, false},
    {177, 84, 76, 72, false}, {181, 81, 81, 72, true},  {183, 91, 78, 78, true},
    {183, 83, 81, 73, false}, {185, 91, 79, 78, false}, {187, 88, 81, 76, false},
    {189, 92, 81, 79, false}, {189, 87, 83, 76, false}, {195, 94, 84, 81, false},
    {199, 93, 87, 81, false},
};

struct SolutionData {
    std::vector<int> j, k;
};

struct SolutionFamily {
    int v, r, s;
    std::vector<int> gens;
    std::vector<SolutionData> solutions;
};

// Shipped solution families given as orbit index sets over the stated
// subgroup; X = union of the orbits whose minima are listed in J, same for
// Y with K.
const std::vector<SolutionFamily> kFamilies = {
    {93, 45, 37, {25},
     {{{2, 5, 8, 9, 10, 12, 13, 24, 33, 36, 37, 40, 43, 47, 55},
       {3, 4, 5, 6, 16, 22, 24, 26, 33, 36, 40, 44, 62}},
      {{3, 6, 8, 10, 11, 12, 13, 17, 18, 22, 29, 33, 37, 43, 55},
       {3, 4, 5, 12, 13, 16, 17, 26, 36, 37, 40, 51, 62}},
      {{3, 5, 8, 10, 11, 12, 13, 16, 17, 20, 24, 29, 33, 48, 55},
       {5, 9, 11, 12, 13, 18, 22, 24, 29, 40, 43, 51, 62}}}},
    {103, 48, 42, {46},
     {{{2, 4, 8, 10, 12, 14, 17, 19, 30, 33, 42, 44, 47, 51, 60, 62},
       {1, 2, 3, 14, 20, 21, 30, 33, 38, 40, 42, 44, 53, 60}},
      {{1, 2, 6, 7, 8, 11, 15, 20, 29, 30, 31, 38, 42, 44, 51, 62},
       {1, 4, 11, 12, 19, 21, 23, 29, 31, 38, 40, 47, 51, 53}},
      {{3, 5, 8, 10, 12, 14, 15, 21, 22, 29, 30, 44, 47, 51, 60, 62},
       {1, 2, 5, 14, 15, 19, 23, 29, 31, 33, 40, 42, 51, 55}}}},
    {103, 46, 43, {46},
     {{{0, 2, 7, 10, 11, 12, 15, 17, 19, 29, 31, 33, 38, 40, 42, 47},
       {0, 8, 10, 15, 20, 21, 22, 23, 33, 38, 40, 47, 49, 53, 55}}}},
    {121, 55, 51, {3},
     {{{1, 2, 5, 13, 16, 19, 31, 34, 35, 61, 76},
       {0, 7, 8, 10, 13, 16, 22, 25, 26, 40, 76}}}},
    {131, 61, 55, {53},
     {{{0, 1, 12, 14, 18, 22, 27, 29, 33, 36, 38, 42, 44},
       {2, 4, 8, 11, 12, 17, 22, 33, 36, 38, 42}},
      {{0, 1, 3, 4, 6, 12, 14, 18, 21, 22, 33, 36, 38},
       {2, 3, 11, 12, 17, 18, 19, 27, 29, 38, 42}}}},
    {241, 120, 105, {24},
     {{{3, 4, 5, 6, 7, 10, 13, 38},
       {3, 5, 7, 11, 19, 35, 38}}}},
};

// The one trivial-subgroup solution, shipped with explicit sets.
const std::vector<int> kExplicitX63 = {0,  1,  2,  3,  4,  6,  7,  11, 12, 13,
                                       14, 20, 21, 22, 25, 26, 27, 30, 33, 35,
                                       36, 38, 39, 42, 46, 48, 50, 53, 57};
const std::vector<int> kExplicitY63 = {0,  1,  3,  5,  7,  8,  10, 11, 13, 14, 16, 18,
                                       19, 23, 30, 33, 34, 35, 39, 40, 48, 52, 54, 56};

std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> entries;
    for (const auto& row : kStatusTable) {
        if (row.v == 63 && row.r == 29) {
            CatalogEntry entry;
            entry.params = param_set_from_rs(row.v, row.r, row.s);
            entry.status = EntryStatus::Known;
            entry.source = "constructed";
            entry.generators = {1};
            entry.x_set = kExplicitX63;
            entry.y_set = kExplicitY63;
            entries.push_back(std::move(entry));
            continue;
        }

        const SolutionFamily* family = nullptr;
        for (const auto& f : kFamilies)
            if (f.v == row.v && f.r == row.r && f.s == row.s) family = &f;

        if (family) {
            for (const auto& sol : family->solutions) {
                CatalogEntry entry;
                entry.params = param_set_from_rs(row.v, row.r, row.s);
                entry.status = EntryStatus::Known;
                entry.source = "constructed";
                entry.generators = family->gens;
                entry.j_set = sol.j;
                entry.k_set = sol.k;
                entries.push_back(std::move(entry));
            }
        } else {
            CatalogEntry entry;
            entry.params = param_set_from_rs(row.v, row.r, row.s);
            entry.status = row.known ? EntryStatus::Known : EntryStatus::Open;
            entry.source = row.known ? "reported" : "";
            entries.push_back(std::move(entry));
        }
    }

    // v = 241 lies outside the status table's range.
    for (const auto& f : kFamilies) {
        if (f.v < 200) continue;
        for (const auto& sol : f.solutions) {
            CatalogEntry entry;
            entry.params = param_set_from_rs(f.v, f.r, f.s);
            entry.status = EntryStatus::Known;
            entry.source = "constructed";
            entry.generators = f.gens;
            entry.j_set = sol.j;
            entry.k_set = sol.k;
            entries.push_back(std::move(entry));
        }
    }
    return entries;
}

}  // namespace

const std::vector<StatusRow>& status_table() { return kStatusTable; }

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

std::vector<CatalogEntry> catalog_lookup(int v) {
    std::vector<CatalogEntry> out;
    for (const auto& entry : catalog_entries())
        if (entry.params.v == v) out.push_back(entry);
    return out;
}

OrbitSystem orbit_system_for_entry(const CatalogEntry& entry) {
    if (entry.generators.empty())
        throw std::invalid_argument("catalog entry has no subgroup data");
    return orbit_decomposition(entry.params.v,
                               subgroup_from_generators(entry.params.v, entry.generators));
}

SdsSolution solution_from_entry(const CatalogEntry& entry) {
    if (!entry.has_data()) throw std::invalid_argument("catalog entry has no solution data");
    SdsSolution sol;
    sol.params = entry.params;
    sol.provenance = "catalog";
    if (!entry.x_set.empty()) {
        sol.x_set = entry.x_set;
        sol.y_set = entry.y_set;
        return sol;
    }
    auto sys = orbit_system_for_entry(entry);
    sol.j_set = entry.j_set;
    sol.k_set = entry.k_set;
    sol.x_set = support_from_reps(sys, entry.j_set);
    sol.y_set = support_from_reps(sys, entry.k_set);
    return sol;
}

EntryCheck selftest_entry(const CatalogEntry& entry, const std::string& label) {
    EntryCheck check;
    check.label = label;
    auto fail = [&](const std::string& msg) {
        check.pass = false;
        check.failures.push_back(msg);
    };

    SdsSolution sol = solution_from_entry(entry);
    const int v = entry.params.v;

    auto cert = verify_sds(v, sol.x_set, sol.y_set, entry.params);
    if (!cert.pass) {
        std::string msg = "difference counts: ";
        if (!cert.sizes_ok) msg += "|X|/|Y| mismatch; ";
        for (std::size_t i = 0; i < cert.violated_ds.size() && i < 4; ++i)
            msg += "d=" + std::to_string(cert.violated_ds[i]) + " ";
        fail(msg);
    }

    auto a_seq = sequence_from_set(v, sol.x_set);
    auto b_seq = sequence_from_set(v, sol.y_set);
    if (!verify_matrix_equation(a_seq, b_seq)) fail("matrix equation (PAF sums)");

    for (int d = 2; d < v; ++d) {
        if (v % d != 0) continue;
        auto profile = strided_sums(a_seq, b_seq, d);
        auto dc = divisor_constraints(profile);
        if (!dc.pass())
            fail("divisor constraints at d=" + std::to_string(d));
    }

    const double tol = psd_tolerance(v);
    auto a_psd = psd(a_seq);
    auto b_psd = psd(b_seq);
    for (int k = 1; k < v; ++k) {
        if (std::abs(a_psd.values[k] + b_psd.values[k] - (2.0 * v - 2)) > tol) {
            fail("PSD sum at k=" + std::to_string(k));
            break;
        }
    }

    auto sys = orbit_system_for_entry(entry);
    OrbitSystem extended = orbit_decomposition(v, extend_with_negation(sys.subgroup));
    for (const auto& orbit : extended.orbits) {
        if (orbit[0] == 0) continue;
        for (const auto* values : {&a_psd.values, &b_psd.values}) {
            double ref = (*values)[orbit[0]];
            for (int k : orbit) {
                if (std::abs((*values)[k] - ref) > tol) {
                    fail("PSD not constant on orbit of " + std::to_string(orbit[0]));
                    break;
                }
            }
        }
    }

    auto a_fp = encode_fingerprint(sol.x_set, entry.params, sys, Side::A);
    auto b_fp = encode_fingerprint(sol.y_set, entry.params, sys, Side::B);
    if (a_fp != b_fp) fail("fingerprint round-trip");

    return check;
}

SelftestReport selftest(const std::vector<CatalogEntry>& entries) {
    SelftestReport report;
    int position = 0;
    int last_v = -1;
    for (const auto& entry : entries) {
        position = entry.params.v == last_v ? position + 1 : 1;
        last_v = entry.params.v;
        if (!entry.has_data()) {
            ++report.skipped;
            continue;
        }
        std::string label = "v=" + std::to_string(entry.params.v) + " (" +
                            std::to_string(entry.params.r) + "," + std::to_string(entry.params.s) +
                            ";" + std::to_string(entry.params.lambda) + ") #" +
                            std::to_string(position);
        auto check = selftest_entry(entry, label);
        ++report.checked;
        if (!check.pass) report.pass = false;
        report.checks.push_back(std::move(check));
    }
    return report;
}

SelftestReport selftest() { return selftest(catalog_entries()); }

std::string catalog_json(const std::vector<CatalogEntry>& entries) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& entry : entries) {
        nlohmann::json item;
        item["v"] = entry.params.v;
        item["r"] = entry.params.r;
        item["s"] = entry.params.s;
        item["lambda"] = entry.params.lambda;
        item["a"] = entry.params.a;
        item["b"] = entry.params.b;
        item["status"] = to_string(entry.status);
        item["source"] = entry.source;
        if (!entry.generators.empty()) item["generators"] = entry.generators;
        if (!entry.j_set.empty()) item["J"] = entry.j_set;
        if (!entry.k_set.empty()) item["K"] = entry.k_set;
        if (!entry.x_set.empty()) item["X"] = entry.x_set;
        if (!entry.y_set.empty()) item["Y"] = entry.y_set;
        out.push_back(std::move(item));
    }
    return out.dump(2);
}

}  // namespace dopt
