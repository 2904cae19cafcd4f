#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "dopt/catalog.hpp"
#include "dopt/verify.hpp"

using namespace dopt;

namespace {

// Independent oracle: cofactor expansion along the first row, n <= 8.
long long cofactor_det(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    long long acc = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col] == 0) continue;
        std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t out_col = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor[i - 1][out_col++] = m[i][j];
            }
        }
        long long term = m[0][col] * cofactor_det(minor);
        acc += (col % 2 == 0) ? term : -term;
    }
    return acc;
}

void for_each_subset(int v, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k == 0) {
        fn(idx);
        return;
    }
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == v - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<std::vector<long long>> to_ll(const DMatrix& dm) {
    std::vector<std::vector<long long>> m(dm.entries.size());
    for (std::size_t i = 0; i < dm.entries.size(); ++i)
        m[i].assign(dm.entries[i].begin(), dm.entries[i].end());
    return m;
}

}  // namespace

TEST_CASE("verify_sds on shipped solutions") {
    for (const auto& entry : catalog_lookup(63)) {
        if (!entry.has_data()) continue;
        auto sol = solution_from_entry(entry);
        auto cert = verify_sds(63, sol.x_set, sol.y_set, entry.params);
        CHECK(cert.pass);
        CHECK(cert.difference_counts.size() == 62);
        for (int count : cert.difference_counts) CHECK(count == 22);
    }

    int checked_103 = 0;
    for (const auto& entry : catalog_lookup(103)) {
        if (!entry.has_data() || entry.params.s != 43) continue;
        auto sol = solution_from_entry(entry);
        auto cert = verify_sds(103, sol.x_set, sol.y_set, entry.params);
        CHECK(cert.pass);
        CHECK(entry.params.lambda == 38);
        ++checked_103;
    }
    CHECK(checked_103 == 1);
}

TEST_CASE("verify_sds on the quadratic-residue pair for v=7") {
    auto params = param_set_from_rs(7, 3, 1);
    CHECK(params.lambda == 1);
    auto cert = verify_sds(7, {1, 2, 4}, {0}, params);
    CHECK(cert.pass);
    for (int count : cert.difference_counts) CHECK(count == 1);

    // perturbed pair fails and reports the violated differences
    auto bad = verify_sds(7, {1, 2, 3}, {0}, params);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.violated_ds.empty());
}

TEST_CASE("verify_matrix_equation") {
    for (const auto& entry : catalog_lookup(121)) {
        if (!entry.has_data()) continue;
        auto sol = solution_from_entry(entry);
        CHECK(verify_matrix_equation(sequence_from_set(121, sol.x_set),
                                     sequence_from_set(121, sol.y_set)));
    }

    auto ones = sequence_from_set(5, {});
    CHECK_FALSE(verify_matrix_equation(ones, ones));

    CHECK(verify_matrix_equation(sequence_from_set(3, {0}), sequence_from_set(3, {})));

    CHECK_THROWS_AS(verify_matrix_equation(ones, sequence_from_set(7, {})), std::invalid_argument);
}

TEST_CASE("verify_sds and the matrix equation agree everywhere") {
    std::mt19937_64 rng(59);
    for (int iter = 0; iter < 200; ++iter) {
        int v = 3 + 2 * static_cast<int>(rng() % 15);
        auto params_list = feasible_params(v);
        if (params_list.empty()) continue;
        const auto& params = params_list[rng() % params_list.size()];

        std::vector<int> pool(v);
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> x_set(pool.begin(), pool.begin() + params.r);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> y_set(pool.begin(), pool.begin() + params.s);
        std::sort(x_set.begin(), x_set.end());
        std::sort(y_set.begin(), y_set.end());

        bool sds_ok = verify_sds(v, x_set, y_set, params).pass;
        bool eq_ok = verify_matrix_equation(sequence_from_set(v, x_set), sequence_from_set(v, y_set));
        CHECK(sds_ok == eq_ok);
    }
}

TEST_CASE("build_dmatrix layout") {
    auto a = sequence_from_set(3, {0});
    auto b = sequence_from_set(3, {});
    auto m = build_dmatrix(a, b);
    CHECK(m.entries.size() == 6);
    CHECK(m.entries[0] == std::vector<int>{-1, 1, 1, 1, 1, 1});

    // circulant blocks and the block signs
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(m.entries[i][j] == a.entries[(j - i + 3) % 3]);
            CHECK(m.entries[i][3 + j] == b.entries[(j - i + 3) % 3]);
            CHECK(m.entries[3 + i][j] == -b.entries[(i - j + 3) % 3]);
            CHECK(m.entries[3 + i][3 + j] == a.entries[(i - j + 3) % 3]);
        }
    }

    auto ten = build_dmatrix(sequence_from_set(5, {0}), sequence_from_set(5, {0}));
    CHECK(ten.entries.size() == 10);
}

TEST_CASE("exact_determinant basics") {
    std::vector<std::vector<long long>> eye(5, std::vector<long long>(5, 0));
    for (int i = 0; i < 5; ++i) eye[i][i] = 1;
    CHECK(exact_determinant(eye) == BigInt(1));

    std::vector<std::vector<long long>> diag{{2, 0, 0}, {0, 3, 0}, {0, 0, 4}};
    CHECK(exact_determinant(diag) == BigInt(24));

    std::vector<std::vector<long long>> singular{{1, 2}, {2, 4}};
    CHECK(exact_determinant(singular) == BigInt(0));

    std::vector<std::vector<long long>> needs_pivot{{0, 1}, {1, 0}};
    CHECK(exact_determinant(needs_pivot) == BigInt(-1));
}

TEST_CASE("exact_determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
        for (auto& row : m)
            for (auto& e : row) e = (rng() & 1) ? 1 : -1;
        CHECK(exact_determinant(m) == BigInt(cofactor_det(m)));

        // transpose invariance and row negation
        auto t = m;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t[i][j] = m[j][i];
        CHECK(exact_determinant(t) == exact_determinant(m));
        auto neg = m;
        for (auto& e : neg[0]) e = -e;
        CHECK(exact_determinant(neg) == -exact_determinant(m));
    }
}

TEST_CASE("wide entries force the big-integer path and agree with the oracle") {
    // 4x4 with ~2^25 entries gives ~2^100 determinants: past __int128's
    // comfort inside Bareiss, but still exact for a cofactor oracle in
    // __int128 (term products stay below 2^105).
    auto cofactor_i128 = [](auto&& self, const std::vector<std::vector<__int128>>& m) -> __int128 {
        const std::size_t n = m.size();
        if (n == 1) return m[0][0];
        __int128 acc = 0;
        for (std::size_t col = 0; col < n; ++col) {
            std::vector<std::vector<__int128>> minor(n - 1, std::vector<__int128>(n - 1));
            for (std::size_t i = 1; i < n; ++i) {
                std::size_t out_col = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == col) continue;
                    minor[i - 1][out_col++] = m[i][j];
                }
            }
            __int128 term = m[0][col] * self(self, minor);
            acc += (col % 2 == 0) ? term : -term;
        }
        return acc;
    };
    auto i128_string = [](__int128 x) {
        if (x == 0) return std::string("0");
        bool neg = x < 0;
        unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
        std::string out;
        while (mag) {
            out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
            mag /= 10;
        }
        if (neg) out.push_back('-');
        std::reverse(out.begin(), out.end());
        return out;
    };

    std::mt19937_64 rng(67);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 3 + static_cast<int>(rng() % 2);
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
        std::vector<std::vector<__int128>> m128(n, std::vector<__int128>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m[i][j] = static_cast<long long>(rng() % (1ull << 25)) - (1LL << 24);
                m128[i][j] = m[i][j];
            }
        CHECK(exact_determinant(m).to_string() == i128_string(cofactor_i128(cofactor_i128, m128)));
    }
}

TEST_CASE("verify_ehlich at v = 3, 5, 7") {
    auto report3 = verify_ehlich(sequence_from_set(3, {0}), sequence_from_set(3, {}));
    CHECK(report3.bound == BigInt(160));
    REQUIRE(report3.det.has_value());
    CHECK(*report3.attained);

    auto report5 = verify_ehlich(sequence_from_set(5, {0}), sequence_from_set(5, {0}));
    CHECK(report5.bound == BigInt(73728));
    CHECK(*report5.attained);

    auto report7 = verify_ehlich(sequence_from_set(7, {1, 2, 4}), sequence_from_set(7, {0}));
    CHECK(report7.bound == BigInt(77635584));
    CHECK(*report7.attained);

    // above the cap: bound only
    auto sol = solution_from_entry(catalog_lookup(63)[0]);
    auto capped = verify_ehlich(sequence_from_set(63, sol.x_set), sequence_from_set(63, sol.y_set));
    CHECK_FALSE(capped.det.has_value());
    CHECK(capped.bound == pow(BigInt(2), 63) * BigInt(125) * pow(BigInt(62), 62));
}

TEST_CASE("exhaustively: the bound is attained exactly on SDS pairs (v <= 9)") {
    for (int v : {3, 5, 7, 9}) {
        auto params_list = feasible_params(v);
        REQUIRE(params_list.size() == 1);
        const auto& params = params_list[0];
        const BigInt bound = ehlich_bound(v);

        long long pairs = 0, solutions = 0;
        for_each_subset(v, params.r, [&](const std::vector<int>& x_set) {
            auto a = sequence_from_set(v, x_set);
            for_each_subset(v, params.s, [&](const std::vector<int>& y_set) {
                ++pairs;
                auto b = sequence_from_set(v, y_set);
                bool is_sds = verify_sds(v, x_set, y_set, params).pass;
                auto det = exact_determinant(to_ll(build_dmatrix(a, b))).abs();
                if (is_sds) {
                    ++solutions;
                    CHECK(det == bound);
                } else {
                    CHECK(det < bound);
                }
            });
        });
        CHECK(solutions > 0);
        INFO("v=", v, " pairs=", pairs);
    }
}
