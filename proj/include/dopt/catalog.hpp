#pragma once

// Embedded ground truth: the known-status table of D-optimal SDS parameters
// for odd v < 200 and the shipped solution data (explicit X/Y sets or orbit
// index sets over a stated subgroup). The catalog is the single source the
// tests and the CLI certify against; selftest() re-verifies every shipped
// solution from scratch.

#include <string>
#include <vector>

#include "dopt/constraints.hpp"
#include "dopt/search.hpp"

namespace dopt {

enum class EntryStatus { Known, Open };

const char* to_string(EntryStatus status);

struct CatalogEntry {
    ParamSet params;
    EntryStatus status = EntryStatus::Open;
    // "constructed" when full solution data is shipped, "reported" for
    // parameters known from elsewhere without data, empty for open cases.
    std::string source;
    std::vector<int> generators;    // subgroup generators (entries with data)
    std::vector<int> j_set, k_set;  // orbit representatives
    std::vector<int> x_set, y_set;  // explicit sets (trivial-subgroup entries)

    bool has_data() const;
};

// One row of the odd v < 200 status table.
struct StatusRow {
    int v = 0, r = 0, s = 0, lambda = 0;
    bool known = false;
};

const std::vector<StatusRow>& status_table();

// All entries, ascending in v, table order within v. Rows covered by shipped
// solutions appear once per non-equivalent solution.
const std::vector<CatalogEntry>& catalog_entries();

std::vector<CatalogEntry> catalog_lookup(int v);

// Resolves the entry's (X, Y); throws when the entry carries no data.
SdsSolution solution_from_entry(const CatalogEntry& entry);

OrbitSystem orbit_system_for_entry(const CatalogEntry& entry);

struct EntryCheck {
    std::string label;
    bool pass = true;
    std::vector<std::string> failures;
};

struct SelftestReport {
    std::vector<EntryCheck> checks;
    int checked = 0;
    int skipped = 0;  // entries without data are skipped, not failed
    bool pass = true;
};

// Re-verifies one data-carrying entry: difference counts, the matrix
// equation, divisor constraints for every 1 < d < v, PSD sum and
// orbit-constancy, and the A/B fingerprint round-trip.
EntryCheck selftest_entry(const CatalogEntry& entry, const std::string& label);

SelftestReport selftest(const std::vector<CatalogEntry>& entries);
SelftestReport selftest();  // whole catalog

// JSON export of the given entries (machine-readable mirror of the catalog).
std::string catalog_json(const std::vector<CatalogEntry>& entries);

}  // namespace dopt
