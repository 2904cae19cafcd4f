// Command-line front end: parameter derivation, orbit tables, the
// generate/sort/match pipeline, solution verification, and the embedded
// catalog.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dopt/catalog.hpp"
#include "dopt/pool.hpp"
#include "dopt/verify.hpp"

using namespace dopt;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (!token.empty()) out.push_back(std::stoi(token));
    }
    return out;
}

std::string set_to_string(const std::vector<int>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "}";
}

std::string params_to_string(const ParamSet& p) {
    return "(" + std::to_string(p.v) + "; " + std::to_string(p.r) + ", " + std::to_string(p.s) +
           "; " + std::to_string(p.lambda) + ") [a=" + std::to_string(p.a) +
           ", b=" + std::to_string(p.b) + "]";
}

nlohmann::json solution_to_json(const SdsSolution& sol) {
    nlohmann::json item;
    item["v"] = sol.params.v;
    item["r"] = sol.params.r;
    item["s"] = sol.params.s;
    item["lambda"] = sol.params.lambda;
    item["a"] = sol.params.a;
    item["b"] = sol.params.b;
    item["X"] = sol.x_set;
    item["Y"] = sol.y_set;
    if (!sol.j_set.empty()) item["J"] = sol.j_set;
    if (!sol.k_set.empty()) item["K"] = sol.k_set;
    item["provenance"] = sol.provenance;
    return item;
}

// Full certificate print for one pair; returns overall pass.
bool report_pair(int v, const std::vector<int>& x_set, const std::vector<int>& y_set) {
    int r = static_cast<int>(x_set.size());
    int s = static_cast<int>(y_set.size());
    ParamSet params;
    try {
        params = param_set_from_rs(v, r, s);
    } catch (const std::exception& e) {
        std::cout << "FAIL sizes (" << v << "; " << r << ", " << s << "): " << e.what() << "\n";
        return false;
    }
    std::cout << "parameters " << params_to_string(params) << "\n";

    auto cert = verify_sds(v, x_set, y_set, params);
    if (cert.pass) {
        std::cout << "PASS difference counts: all " << v - 1 << " equal " << params.lambda << "\n";
    } else {
        std::cout << "FAIL difference counts";
        for (std::size_t i = 0; i < cert.violated_ds.size() && i < 8; ++i) {
            int d = cert.violated_ds[i];
            std::cout << (i ? "," : ": ") << "d=" << d << " -> " << cert.difference_counts[d - 1];
        }
        std::cout << "\n";
    }

    auto a_seq = sequence_from_set(v, x_set);
    auto b_seq = sequence_from_set(v, y_set);
    bool eq = verify_matrix_equation(a_seq, b_seq);
    std::cout << (eq ? "PASS" : "FAIL") << " matrix equation (PAF sums)\n";

    bool divisor_ok = true;
    bool composite = false;
    for (int d = 2; d < v; ++d) {
        if (v % d != 0) continue;
        composite = true;
        auto check = divisor_constraints(strided_sums(a_seq, b_seq, d));
        if (!check.pass()) divisor_ok = false;
        std::cout << (check.pass() ? "PASS" : "FAIL") << " divisor constraints d=" << d
                  << " (sum of squares " << check.sum_squares << ", cross " << check.cross_sum
                  << ")\n";
    }
    if (!composite) std::cout << "SKIP divisor constraints: not applicable, v is prime\n";

    return cert.pass && eq && divisor_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"D-optimal supplementary difference set toolkit"};
    app.require_subcommand(1);

    // ---- params ----
    int params_v = 0;
    auto* cmd_params = app.add_subcommand("params", "Feasible (v; r, s; lambda) parameter sets");
    cmd_params->add_option("v", params_v, "odd modulus")->required();

    // ---- orbits ----
    int orbits_v = 0;
    std::string orbits_gens;
    bool orbits_neg = false;
    auto* cmd_orbits = app.add_subcommand("orbits", "Orbit table of a subgroup acting on Z_v");
    cmd_orbits->add_option("v", orbits_v, "odd modulus")->required();
    cmd_orbits->add_option("--gen", orbits_gens, "subgroup generators, comma separated")->required();
    cmd_orbits->add_flag("--neg", orbits_neg, "extend the subgroup with -1 first");

    // ---- gen ----
    int gen_v = 0, gen_param_index = 0, gen_workers = 1;
    long long gen_count = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_gens, gen_side, gen_out;
    auto* cmd_gen = app.add_subcommand("gen", "Generate a random candidate pool");
    cmd_gen->add_option("--v", gen_v)->required();
    cmd_gen->add_option("--gen", gen_gens, "subgroup generators")->required();
    cmd_gen->add_option("--param-index", gen_param_index, "index into `params` output (0-based)");
    cmd_gen->add_option("--side", gen_side)->required()->check(CLI::IsMember({"A", "B"}));
    cmd_gen->add_option("--count", gen_count)->required();
    cmd_gen->add_option("--seed", gen_seed)->required();
    cmd_gen->add_option("--out", gen_out)->required();
    cmd_gen->add_option("--workers", gen_workers, "parallel generation threads");

    // ---- sort ----
    std::string sort_file;
    std::size_t sort_chunk = 100000;
    auto* cmd_sort = app.add_subcommand("sort", "Sort a pool file in place");
    cmd_sort->add_option("file", sort_file)->required();
    cmd_sort->add_option("--chunk-records", sort_chunk, "records per in-memory chunk");

    // ---- match ----
    std::string match_a, match_b, match_out;
    auto* cmd_match = app.add_subcommand("match", "Match two sorted pools and reconstruct solutions");
    cmd_match->add_option("a_file", match_a)->required();
    cmd_match->add_option("b_file", match_b)->required();
    cmd_match->add_option("--out", match_out, "write verified solutions (JSON)")->required();

    // ---- verify ----
    int verify_v = 0;
    std::string verify_x, verify_y, verify_solutions;
    auto* cmd_verify = app.add_subcommand("verify", "Certify SDS pairs");
    cmd_verify->add_option("--v", verify_v);
    cmd_verify->add_option("--X", verify_x, "X index set, comma separated");
    cmd_verify->add_option("--Y", verify_y, "Y index set, comma separated");
    cmd_verify->add_option("--solutions", verify_solutions, "JSON solutions file from `match`");

    // ---- check-matrix ----
    int cm_v = 0, cm_cap = 15;
    std::string cm_x, cm_y;
    bool cm_det = false;
    auto* cmd_cm = app.add_subcommand("check-matrix", "Matrix-equation check, optionally with the exact determinant");
    cmd_cm->add_option("--v", cm_v)->required();
    cmd_cm->add_option("--X", cm_x)->required();
    cmd_cm->add_option("--Y", cm_y)->required();
    cmd_cm->add_flag("--det", cm_det, "compute the exact determinant and compare with the bound");
    cmd_cm->add_option("--det-cap", cm_cap, "largest v the determinant is computed for");

    // ---- catalog ----
    int catalog_v = 0;
    bool catalog_open_only = false, catalog_as_json = false;
    auto* cmd_catalog = app.add_subcommand("catalog", "Known/open parameter sets and shipped solutions");
    cmd_catalog->add_option("--v", catalog_v);
    cmd_catalog->add_flag("--open-only", catalog_open_only);
    cmd_catalog->add_flag("--json", catalog_as_json);

    // ---- selftest ----
    auto* cmd_selftest = app.add_subcommand("selftest", "Re-verify every shipped catalog solution");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_params->parsed()) {
            auto list = feasible_params(params_v);
            if (list.empty()) {
                std::cout << "none\n";
            } else {
                for (const auto& p : list) std::cout << params_to_string(p) << "\n";
            }
            return 0;
        }

        if (cmd_orbits->parsed()) {
            auto h = subgroup_from_generators(orbits_v, parse_int_list(orbits_gens));
            if (orbits_neg) h = extend_with_negation(h);
            auto sys = orbit_decomposition(orbits_v, h);
            for (const auto& orbit : sys.orbits)
                std::cout << "H." << orbit[0] << " = " << set_to_string(orbit) << "\n";
            return 0;
        }

        if (cmd_gen->parsed()) {
            auto gens = parse_int_list(gen_gens);
            auto sys = orbit_decomposition(gen_v, subgroup_from_generators(gen_v, gens));
            auto params_list = feasible_params(gen_v);
            if (params_list.empty()) {
                std::cerr << "no feasible parameters for v=" << gen_v << "\n";
                return 1;
            }
            if (gen_param_index < 0 || gen_param_index >= static_cast<int>(params_list.size())) {
                std::cerr << "param index out of range (" << params_list.size() << " available)\n";
                return 1;
            }
            auto params = params_list[gen_param_index];
            Side side = side_from_char(gen_side[0]);
            auto records = generate_candidates_parallel(params, sys, side, gen_count, gen_seed, gen_workers);
            PoolHeader header{gen_v, gens, params.r, params.s, params.lambda};
            write_pool(gen_out, header, records);
            std::cout << "wrote " << records.size() << " records to " << gen_out << "\n";
            return 0;
        }

        if (cmd_sort->parsed()) {
            pool_sort(sort_file, sort_chunk);
            std::cout << "sorted " << sort_file << "\n";
            return 0;
        }

        if (cmd_match->parsed()) {
            auto result = match_pools(match_a, match_b);
            PoolReader reader(match_a);
            auto header = reader.header();
            auto sys = orbit_decomposition(header.v, subgroup_from_generators(header.v, header.gens));
            auto params = param_set_from_rs(header.v, header.r, header.s);

            nlohmann::json out = nlohmann::json::array();
            long long collisions = 0;
            for (const auto& [a_rec, b_rec] : result.pairs) {
                auto sol = reconstruct(a_rec, b_rec, sys, params);
                if (sol) {
                    out.push_back(solution_to_json(*sol));
                } else {
                    ++collisions;
                    std::cerr << "fingerprint collision: J=" << set_to_string(a_rec.orbit_reps)
                              << " K=" << set_to_string(b_rec.orbit_reps) << "\n";
                }
            }
            std::ofstream of(match_out);
            of << out.dump(2) << "\n";
            std::cout << result.pairs.size() << " matches, " << out.size() << " verified solutions, "
                      << collisions << " collisions -> " << match_out << "\n";
            return 0;
        }

        if (cmd_verify->parsed()) {
            bool all_ok = true;
            if (!verify_solutions.empty()) {
                std::ifstream in(verify_solutions);
                if (!in) {
                    std::cerr << "cannot open " << verify_solutions << "\n";
                    return 1;
                }
                auto doc = nlohmann::json::parse(in);
                for (const auto& item : doc) {
                    std::vector<int> x_set = item.at("X").get<std::vector<int>>();
                    std::vector<int> y_set = item.at("Y").get<std::vector<int>>();
                    if (!report_pair(item.at("v").get<int>(), x_set, y_set)) all_ok = false;
                }
            } else {
                if (verify_v == 0) {
                    std::cerr << "need --v with --X/--Y, or --solutions FILE\n";
                    return 1;
                }
                all_ok = report_pair(verify_v, parse_int_list(verify_x), parse_int_list(verify_y));
            }
            std::cout << (all_ok ? "VERIFIED" : "NOT VERIFIED") << "\n";
            return all_ok ? 0 : 1;
        }

        if (cmd_cm->parsed()) {
            auto a_seq = sequence_from_set(cm_v, parse_int_list(cm_x));
            auto b_seq = sequence_from_set(cm_v, parse_int_list(cm_y));
            bool eq = verify_matrix_equation(a_seq, b_seq);
            std::cout << (eq ? "PASS" : "FAIL") << " matrix equation (PAF sums)\n";
            bool ok = eq;
            if (cm_det) {
                auto report = verify_ehlich(a_seq, b_seq, cm_cap);
                std::cout << "bound 2^v (2v-1) (v-1)^(v-1) = " << report.bound.to_string() << "\n";
                if (report.det) {
                    std::cout << "det = " << report.det->to_string() << "\n";
                    std::cout << (*report.attained ? "PASS" : "FAIL") << " bound attained\n";
                    ok = ok && *report.attained;
                } else {
                    std::cout << "det skipped (v > " << cm_cap << "); the matrix equation already "
                              << "certifies optimality\n";
                }
            }
            return ok ? 0 : 1;
        }

        if (cmd_catalog->parsed()) {
            std::vector<CatalogEntry> selection;
            for (const auto& entry : catalog_entries()) {
                if (catalog_v && entry.params.v != catalog_v) continue;
                if (catalog_open_only && entry.status != EntryStatus::Open) continue;
                selection.push_back(entry);
            }
            if (catalog_as_json) {
                std::cout << catalog_json(selection) << "\n";
            } else {
                for (const auto& entry : selection) {
                    std::cout << params_to_string(entry.params) << " " << to_string(entry.status);
                    if (!entry.source.empty()) std::cout << " (" << entry.source << ")";
                    if (entry.has_data()) {
                        if (!entry.j_set.empty())
                            std::cout << " J=" << set_to_string(entry.j_set)
                                      << " K=" << set_to_string(entry.k_set)
                                      << " gens=" << set_to_string(entry.generators);
                        else
                            std::cout << " X=" << set_to_string(entry.x_set)
                                      << " Y=" << set_to_string(entry.y_set);
                    }
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (cmd_selftest->parsed()) {
            auto report = selftest();
            for (const auto& check : report.checks) {
                std::cout << (check.pass ? "PASS " : "FAIL ") << check.label;
                for (const auto& msg : check.failures) std::cout << " [" << msg << "]";
                std::cout << "\n";
            }
            std::cout << report.checked << " checked, " << report.skipped
                      << " skipped (no shipped data), " << (report.pass ? "all passed" : "FAILURES")
                      << "\n";
            return report.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
