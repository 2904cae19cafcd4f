#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include <json.hpp>

#include "dopt/catalog.hpp"
#include "dopt/verify.hpp"

using namespace dopt;

TEST_CASE("catalog shape") {
    int with_data = 0;
    for (const auto& entry : catalog_entries()) {
        if (entry.has_data()) {
            ++with_data;
            CHECK(entry.status == EntryStatus::Known);
            CHECK(entry.source == "constructed");
            CHECK_FALSE(entry.generators.empty());
        }
    }
    CHECK(with_data == 12);  // 1 + 3 + (3+1) + 1 + 2 + 1 shipped solutions
    CHECK(status_table().size() == 82);
}

TEST_CASE("catalog_lookup") {
    auto at103 = catalog_lookup(103);
    REQUIRE(at103.size() == 4);
    for (const auto& entry : at103) CHECK(entry.has_data());
    CHECK(at103[0].params.r == 48);
    CHECK(at103[3].params.r == 46);
    CHECK(at103[3].params.lambda == 38);

    auto at69 = catalog_lookup(69);
    REQUIRE(at69.size() == 1);
    CHECK(at69[0].status == EntryStatus::Open);
    CHECK(at69[0].params.r == 31);
    CHECK(at69[0].params.s == 27);
    CHECK(at69[0].params.lambda == 24);
    CHECK_FALSE(at69[0].has_data());

    auto at241 = catalog_lookup(241);
    REQUIRE(at241.size() == 1);
    auto sys = orbit_system_for_entry(at241[0]);
    CHECK(sys.subgroup.elements ==
          std::vector<int>{1, 15, 24, 54, 87, 91, 94, 98, 100, 119, 160, 183, 205, 225, 231});

    CHECK(orbit_system_for_entry(catalog_lookup(103)[0]).subgroup.elements ==
          std::vector<int>{1, 46, 56});
    CHECK(orbit_system_for_entry(catalog_lookup(121)[0]).subgroup.elements ==
          std::vector<int>{1, 3, 9, 27, 81});

    CHECK(catalog_lookup(11).empty());

    // reported-without-data rows stay in the catalog
    for (int v : {157, 181}) {
        auto entries = catalog_lookup(v);
        REQUIRE(entries.size() == 1);
        CHECK(entries[0].status == EntryStatus::Known);
        CHECK(entries[0].source == "reported");
        CHECK_FALSE(entries[0].has_data());
    }
}

TEST_CASE("status table matches feasible_params for every odd v < 200") {
    std::map<int, std::multiset<std::tuple<int, int, int>>> table_rows;
    for (const auto& row : status_table())
        table_rows[row.v].insert({row.r, row.s, row.lambda});

    for (int v = 3; v < 200; v += 2) {
        std::multiset<std::tuple<int, int, int>> computed;
        for (const auto& p : feasible_params(v)) computed.insert({p.r, p.s, p.lambda});
        auto it = table_rows.find(v);
        if (it == table_rows.end()) {
            CHECK(computed.empty());
        } else {
            CHECK(computed == it->second);
        }
    }

    // multi-row cases called out explicitly
    CHECK(table_rows[13].size() == 2);
    CHECK(table_rows[33].size() == 2);
    CHECK(table_rows[43].size() == 2);
    CHECK(table_rows[63].size() == 2);
    CHECK(table_rows[73].size() == 2);
    CHECK(table_rows[85].size() == 2);
    CHECK(table_rows[93].size() == 2);
    CHECK(table_rows[103].size() == 2);
    CHECK(table_rows[163].size() == 3);
}

TEST_CASE("every entry's parameters are feasible") {
    for (const auto& entry : catalog_entries()) {
        bool found = false;
        for (const auto& p : feasible_params(entry.params.v))
            if (p.r == entry.params.r && p.s == entry.params.s && p.lambda == entry.params.lambda)
                found = true;
        CHECK(found);
    }
}

TEST_CASE("non-equivalent shipped solutions are distinct as set pairs") {
    auto distinct_pairs = [](int v, int r) {
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        for (const auto& entry : catalog_lookup(v)) {
            if (!entry.has_data() || entry.params.r != r) continue;
            auto sol = solution_from_entry(entry);
            seen.insert({sol.x_set, sol.y_set});
        }
        return seen.size();
    };
    CHECK(distinct_pairs(93, 45) == 3);
    CHECK(distinct_pairs(103, 48) == 3);
    CHECK(distinct_pairs(131, 61) == 2);
}

TEST_CASE("selftest certifies the full catalog") {
    auto report = selftest();
    CHECK(report.pass);
    CHECK(report.checked == 12);
    CHECK(report.skipped == static_cast<int>(catalog_entries().size()) - 12);
    for (const auto& check : report.checks) {
        INFO(check.label);
        CHECK(check.pass);
        CHECK(check.failures.empty());
    }
}

TEST_CASE("selftest flags a perturbed entry and names a violated difference") {
    CatalogEntry mutated = catalog_lookup(93)[0];
    REQUIRE(mutated.has_data());
    // swap orbit 2 for orbit 1: sizes stay right, the lambda condition breaks
    for (auto& rep : mutated.j_set)
        if (rep == 2) rep = 1;
    auto check = selftest_entry(mutated, "mutated");
    CHECK_FALSE(check.pass);
    bool names_d = false;
    for (const auto& msg : check.failures)
        if (msg.find("d=") != std::string::npos) names_d = true;
    CHECK(names_d);
}

TEST_CASE("selftest over an empty selection passes vacuously") {
    auto report = selftest({});
    CHECK(report.pass);
    CHECK(report.checked == 0);
    CHECK(report.skipped == 0);
}

TEST_CASE("json export") {
    auto text = catalog_json(catalog_lookup(121));
    auto parsed = nlohmann::json::parse(text);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    const auto& item = parsed[0];
    CHECK(item["v"] == 121);
    CHECK(item["r"] == 55);
    CHECK(item["s"] == 51);
    CHECK(item["lambda"] == 46);
    CHECK(item["a"] == 11);
    CHECK(item["b"] == 19);
    CHECK(item["status"] == "known");
    CHECK(item["source"] == "constructed");
    CHECK(item["generators"] == nlohmann::json::array({3}));
    CHECK(item["J"].size() == 11);
    CHECK(item["K"].size() == 11);

    auto whole = nlohmann::json::parse(catalog_json(catalog_entries()));
    CHECK(whole.size() == catalog_entries().size());
    for (const auto& row : whole) {
        CHECK(row.contains("v"));
        CHECK(row.contains("status"));
    }

    // the trivial-subgroup entry exports explicit sets
    auto v63 = nlohmann::json::parse(catalog_json(catalog_lookup(63)));
    CHECK(v63[0]["X"].size() == 29);
    CHECK(v63[0]["Y"].size() == 24);
    CHECK_FALSE(v63[0].contains("J"));
}
