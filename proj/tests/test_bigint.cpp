#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "dopt/bigint.hpp"

using namespace dopt;

namespace {

std::string i128_to_string(__int128 x) {
    if (x == 0) return "0";
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
}

}  // namespace

TEST_CASE("small value round trips") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(1).to_string() == "1");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(123456789).to_string() == "123456789");
    CHECK(BigInt(-9223372036854775807LL).to_string() == "-9223372036854775807");
    CHECK(BigInt(42).to_longlong() == 42);
    CHECK(BigInt(-7).to_longlong() == -7);
    CHECK(BigInt(0).is_zero());
    CHECK((BigInt(5) - BigInt(5)).is_zero());
}

TEST_CASE("arithmetic matches int128 on random 62-bit operands") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 2000; ++iter) {
        long long x = static_cast<long long>(rng() >> 2) - (1LL << 61);
        long long y = static_cast<long long>(rng() >> 2) - (1LL << 61);
        __int128 sum = static_cast<__int128>(x) + y;
        __int128 diff = static_cast<__int128>(x) - y;
        __int128 prod = static_cast<__int128>(x) * y;
        CHECK((BigInt(x) + BigInt(y)).to_string() == i128_to_string(sum));
        CHECK((BigInt(x) - BigInt(y)).to_string() == i128_to_string(diff));
        CHECK((BigInt(x) * BigInt(y)).to_string() == i128_to_string(prod));
    }
}

TEST_CASE("comparisons") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 2000; ++iter) {
        long long x = static_cast<long long>(rng()) / 3;
        long long y = static_cast<long long>(rng()) / 3;
        CHECK((BigInt(x) < BigInt(y)) == (x < y));
        CHECK((BigInt(x) == BigInt(y)) == (x == y));
        CHECK((BigInt(x) >= BigInt(y)) == (x >= y));
    }
    CHECK(BigInt(-3) < BigInt(2));
    CHECK(BigInt(-3) < BigInt(-2));
    CHECK(BigInt(0) < BigInt(1));
    CHECK(BigInt(-1) < BigInt(0));
}

TEST_CASE("multiplication and exact division round trip on big operands") {
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 800; ++iter) {
        // operands of a few limbs each, mixed signs
        BigInt a(static_cast<long long>(rng()) / 5);
        BigInt b(static_cast<long long>(rng()) / 7);
        for (int k = 0; k < static_cast<int>(rng() % 3); ++k) a = a * BigInt(static_cast<long long>(rng() >> 16) + 3);
        for (int k = 0; k < static_cast<int>(rng() % 3); ++k) b = b * BigInt(static_cast<long long>(rng() >> 16) + 3);
        if (b.is_zero()) continue;
        BigInt product = a * b;
        CHECK(product.div_exact(b) == a);
        CHECK(product.div_exact(a.is_zero() ? b : a) == (a.is_zero() ? a : b));
    }
    CHECK_THROWS_AS(BigInt(7).div_exact(BigInt(2)), std::domain_error);
    CHECK_THROWS_AS(BigInt(7).div_exact(BigInt(0)), std::domain_error);
}

TEST_CASE("division with adversarial limb patterns") {
    // Saturated and near-boundary limbs push the quotient estimation into
    // its correction paths.
    auto from_limbs = [](const std::vector<std::uint64_t>& chunks) {
        BigInt acc(0);
        BigInt base = pow(BigInt(2), 32);
        for (std::size_t i = chunks.size(); i-- > 0;)
            acc = acc * base + BigInt(static_cast<long long>(chunks[i]));
        return acc;
    };

    std::vector<BigInt> samples = {
        from_limbs({0xffffffffu, 0xffffffffu, 0xffffffffu}),
        from_limbs({0, 0, 1}),
        from_limbs({1, 0, 0x80000000u}),
        from_limbs({0xffffffffu, 0, 0x80000000u}),
        from_limbs({0xfffffffeu, 0xffffffffu}),
        from_limbs({0x1u, 0x80000000u}),
        pow(BigInt(2), 96) - BigInt(1),
        pow(BigInt(2), 97),
    };
    for (const auto& q : samples) {
        for (const auto& d : samples) {
            BigInt n = q * d;
            CHECK(n.div_exact(d) == q);
            CHECK(n.div_exact(q) == d);
            CHECK((-n).div_exact(d) == -q);
        }
    }

    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 500; ++iter) {
        auto rand_big = [&](int limbs) {
            std::vector<std::uint64_t> chunks;
            for (int i = 0; i < limbs; ++i) {
                // bias towards saturated limbs
                std::uint64_t limb = (rng() % 3 == 0) ? 0xffffffffu : (rng() & 0xffffffffu);
                chunks.push_back(limb);
            }
            if (chunks.back() == 0) chunks.back() = 1;
            return chunks;
        };
        BigInt q = from_limbs(rand_big(1 + static_cast<int>(rng() % 6)));
        BigInt d = from_limbs(rand_big(1 + static_cast<int>(rng() % 6)));
        BigInt n = q * d;
        CHECK(n.div_exact(d) == q);
    }
}

TEST_CASE("pow and known decimal expansions") {
    CHECK(pow(BigInt(2), 10).to_string() == "1024");
    CHECK(pow(BigInt(10), 30).to_string() == "1" + std::string(30, '0'));
    CHECK(pow(BigInt(-3), 3).to_string() == "-27");
    CHECK(pow(BigInt(7), 0).to_string() == "1");

    // 2^128 = 340282366920938463463374607431768211456
    CHECK(pow(BigInt(2), 128).to_string() == "340282366920938463463374607431768211456");
    // 100! has a well-known head and 24 trailing zeros
    BigInt fact(1);
    for (int i = 2; i <= 100; ++i) fact = fact * BigInt(i);
    auto text = fact.to_string();
    CHECK(text.size() == 158);
    CHECK(text.substr(0, 10) == "9332621544");
    CHECK(text.substr(text.size() - 24) == std::string(24, '0'));
}

TEST_CASE("negation and abs") {
    BigInt big = pow(BigInt(31), 31);
    CHECK((-big).abs() == big);
    CHECK((-big) + big == BigInt(0));
    CHECK((-big).sign() == -1);
    CHECK(BigInt(0).sign() == 0);
}
