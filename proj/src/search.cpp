#include "dopt/search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "dopt/verify.hpp"

namespace dopt {

Side side_from_char(char c) {
    if (c == 'A') return Side::A;
    if (c == 'B') return Side::B;
    throw std::invalid_argument(std::string("invalid side '") + c + "'");
}

std::uint64_t SearchRng::bounded(std::uint64_t n) {
    if (n < 2) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

namespace {

// feasible[i][t]: some subset of sizes[i..] sums to t.
std::vector<std::vector<char>> suffix_feasible(const std::vector<int>& sizes, int target) {
    const int n = static_cast<int>(sizes.size());
    std::vector<std::vector<char>> feasible(n + 1, std::vector<char>(target + 1, 0));
    feasible[n][0] = 1;
    for (int i = n - 1; i >= 0; --i) {
        for (int t = 0; t <= target; ++t) {
            feasible[i][t] = feasible[i + 1][t] ||
                             (t >= sizes[i] && feasible[i + 1][t - sizes[i]]);
        }
    }
    return feasible;
}

std::vector<int> fingerprint_from_set_paf(const std::vector<int>& paf_values,
                                          const std::vector<int>& reps, int lambda, Side side) {
    std::vector<int> fp;
    fp.reserve(reps.size());
    for (int rep : reps)
        fp.push_back(side == Side::A ? paf_values[rep] : lambda - paf_values[rep]);
    return fp;
}

}  // namespace

bool orbit_union_feasible(const OrbitSystem& sys, int target) {
    if (target < 0) return false;
    std::vector<int> sizes;
    for (const auto& orbit : sys.orbits) sizes.push_back(static_cast<int>(orbit.size()));
    return suffix_feasible(sizes, target)[0][target];
}

std::vector<int> support_from_reps(const OrbitSystem& sys, const std::vector<int>& reps) {
    std::vector<int> support;
    for (int rep : reps) {
        const auto& orbit = sys.orbits[sys.orbit_pos_of_rep(rep)];
        support.insert(support.end(), orbit.begin(), orbit.end());
    }
    std::sort(support.begin(), support.end());
    auto dup = std::adjacent_find(support.begin(), support.end());
    if (dup != support.end())
        throw std::invalid_argument("orbit representatives overlap at element " + std::to_string(*dup));
    return support;
}

std::vector<int> fingerprint_reps(const OrbitSystem& sys) {
    OrbitSystem extended = orbit_decomposition(sys.v, extend_with_negation(sys.subgroup));
    return extended.nonzero_representatives();
}

std::vector<int> encode_fingerprint(const std::vector<int>& support, const ParamSet& params,
                                    const OrbitSystem& sys, Side side) {
    require_orbit_closed(support, sys);
    auto paf_values = set_paf(sys.v, support);
    return fingerprint_from_set_paf(paf_values, fingerprint_reps(sys), params.lambda, side);
}

std::vector<CandidateRecord> generate_candidates(const ParamSet& params, const OrbitSystem& sys,
                                                 Side side, long long count, std::uint64_t seed) {
    const int target = side == Side::A ? params.r : params.s;
    const int m = sys.orbit_count();

    std::vector<int> base_sizes(m);
    for (int i = 0; i < m; ++i) base_sizes[i] = static_cast<int>(sys.orbits[i].size());
    if (target < 0 || !suffix_feasible(base_sizes, std::max(target, 0))[0][target])
        throw std::invalid_argument("size " + std::to_string(target) +
                                    " is not a sum of distinct orbit sizes for v = " +
                                    std::to_string(sys.v));

    const auto reps = fingerprint_reps(sys);

    std::vector<CandidateRecord> out;
    if (count <= 0) return out;

    SearchRng rng(seed);
    std::set<std::vector<int>> seen;
    std::vector<int> order(m);
    // Cap the attempt schedule so exhausted candidate spaces terminate; the
    // constant is part of the deterministic contract.
    const long long max_attempts = 64 * count + 1024;

    for (long long attempt = 0; attempt < max_attempts && std::cmp_less(out.size(), count); ++attempt) {
        for (int i = 0; i < m; ++i) order[i] = i;
        rng.shuffle(order);

        std::vector<int> sizes(m);
        for (int i = 0; i < m; ++i) sizes[i] = base_sizes[order[i]];
        auto feasible = suffix_feasible(sizes, target);

        // Greedy take-if-completable walk over the shuffled orbits; the
        // shuffle carries all the randomness.
        std::vector<int> chosen;
        int remaining = target;
        for (int i = 0; i < m && remaining > 0; ++i) {
            if (sizes[i] <= remaining && feasible[i + 1][remaining - sizes[i]]) {
                chosen.push_back(order[i]);
                remaining -= sizes[i];
            }
        }

        std::vector<int> rep_set;
        rep_set.reserve(chosen.size());
        for (int pos : chosen) rep_set.push_back(sys.representative(pos));
        std::sort(rep_set.begin(), rep_set.end());
        if (!seen.insert(rep_set).second) continue;

        auto support = support_from_reps(sys, rep_set);
        auto seq = sequence_from_set(sys.v, support);
        // Thanks to PSD constancy on the extended orbits, checking the
        // representatives decides the full criterion for orbit-union supports.
        bool pass = true;
        const double limit = 2.0 * sys.v - 2 + psd_tolerance(sys.v);
        for (int rep : reps) {
            if (psd_at(seq, rep) > limit) {
                pass = false;
                break;
            }
        }
        if (!pass) continue;

        CandidateRecord record;
        record.v = sys.v;
        record.side = side;
        record.size = target;
        record.lambda = params.lambda;
        record.orbit_reps = std::move(rep_set);
        record.fingerprint = fingerprint_from_set_paf(set_paf(sys.v, support), reps, params.lambda, side);
        out.push_back(std::move(record));
    }
    return out;
}

std::vector<CandidateRecord> generate_candidates_parallel(const ParamSet& params,
                                                          const OrbitSystem& sys, Side side,
                                                          long long count, std::uint64_t seed,
                                                          int workers) {
    if (workers <= 1) return generate_candidates(params, sys, side, count, seed);

    std::vector<std::vector<CandidateRecord>> shards(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        long long quota = count / workers + (w < count % workers ? 1 : 0);
        threads.emplace_back([&, w, quota] {
            shards[w] = generate_candidates(params, sys, side, quota, seed + static_cast<std::uint64_t>(w));
        });
    }
    for (auto& t : threads) t.join();

    std::vector<CandidateRecord> out;
    std::set<std::vector<int>> seen;
    for (const auto& shard : shards)
        for (const auto& record : shard)
            if (seen.insert(record.orbit_reps).second) out.push_back(record);
    return out;
}

std::optional<SdsSolution> reconstruct(const CandidateRecord& a_record,
                                       const CandidateRecord& b_record, const OrbitSystem& sys,
                                       const ParamSet& params) {
    if (a_record.side != Side::A || b_record.side != Side::B)
        throw std::invalid_argument("reconstruct expects an (A, B) record pair");

    SdsSolution sol;
    sol.params = params;
    sol.j_set = a_record.orbit_reps;
    sol.k_set = b_record.orbit_reps;
    sol.x_set = support_from_reps(sys, sol.j_set);
    sol.y_set = support_from_reps(sys, sol.k_set);
    sol.provenance = "search";

    auto cert = verify_sds(params.v, sol.x_set, sol.y_set, params);
    if (!cert.pass) return std::nullopt;  // fingerprint collision, not a solution
    return sol;
}

}  // namespace dopt
