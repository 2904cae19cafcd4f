#include "dopt/constraints.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dopt {

namespace {

// Largest b with b*b <= n, exact in integers.
int isqrt_floor(long long n) {
    if (n < 0) return -1;
    auto b = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (b * b > n) --b;
    while ((b + 1) * (b + 1) <= n) ++b;
    return static_cast<int>(b);
}

}  // namespace

ParamSet param_set_from_rs(int v, int r, int s) {
    check_modulus(v);
    ParamSet p;
    p.v = v;
    p.r = r;
    p.s = s;
    p.a = v - 2 * r;
    p.b = v - 2 * s;
    p.lambda = r + s - (v - 1) / 2;
    if (p.a <= 0 || p.a > p.b)
        throw std::invalid_argument("block sizes must give row sums 0 < a <= b");
    if (static_cast<long long>(p.a) * p.a + static_cast<long long>(p.b) * p.b != 4LL * v - 2)
        throw std::invalid_argument("row sums fail a^2 + b^2 = 4v - 2 for v = " + std::to_string(v));
    if (p.lambda < 0) throw std::invalid_argument("negative lambda");
    return p;
}

std::vector<ParamSet> feasible_params(int v) {
    check_modulus(v);
    std::vector<ParamSet> out;
    const long long target = 4LL * v - 2;
    // a and b are forced odd (a^2 + b^2 = 2 mod 4 needs both squares odd),
    // so step a over odd values up to sqrt(target/2).
    for (int a = 1; static_cast<long long>(a) * a * 2 <= target; a += 2) {
        long long rest = target - static_cast<long long>(a) * a;
        int b = isqrt_floor(rest);
        if (b < a || static_cast<long long>(b) * b != rest) continue;
        out.push_back(param_set_from_rs(v, (v - a) / 2, (v - b) / 2));
    }
    // Ascending a is descending r already; keep it explicit.
    return out;
}

bool psd_criterion(const PmSequence& seq) {
    const int v = seq.v;
    const double limit = 2.0 * v - 2 + psd_tolerance(v);
    for (int k = 1; k <= (v - 1) / 2; ++k)
        if (psd_at(seq, k) > limit) return false;
    return true;
}

DivisorProfile strided_sums(const PmSequence& a, const PmSequence& b, int d) {
    if (a.v != b.v) throw std::invalid_argument("sequences must have equal length");
    const int v = a.v;
    if (d <= 1 || d > v || v % d != 0)
        throw std::invalid_argument("stride " + std::to_string(d) + " does not divide " + std::to_string(v));
    DivisorProfile p;
    p.v = v;
    p.d = d;
    p.m = v / d;
    p.a_sums.assign(d, 0);
    p.b_sums.assign(d, 0);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < p.m; ++i) {
            p.a_sums[j] += a.entries[j + i * d];
            p.b_sums[j] += b.entries[j + i * d];
        }
    }
    return p;
}

namespace {

long long profile_sum_squares(const DivisorProfile& p) {
    long long acc = 0;
    for (int j = 0; j < p.d; ++j)
        acc += static_cast<long long>(p.a_sums[j]) * p.a_sums[j] +
               static_cast<long long>(p.b_sums[j]) * p.b_sums[j];
    return acc;
}

long long profile_cross_sum(const DivisorProfile& p) {
    long long acc = 0;
    for (int k = 0; k < p.d; ++k)
        for (int l = k + 1; l < p.d; ++l)
            acc += static_cast<long long>(p.a_sums[k]) * p.a_sums[l] +
                   static_cast<long long>(p.b_sums[k]) * p.b_sums[l];
    return acc;
}

}  // namespace

DivisorCheck divisor_constraints(const DivisorProfile& profile) {
    DivisorCheck check;
    check.sum_squares = profile_sum_squares(profile);
    check.cross_sum = profile_cross_sum(profile);
    check.sum_squares_ok = check.sum_squares == 2LL * (profile.v + profile.m - 1);
    check.cross_ok = check.cross_sum == profile.v - profile.m;
    return check;
}

SpecialCaseReport special_case_checks(const DivisorProfile& profile) {
    SpecialCaseReport report;
    report.sum_squares = profile_sum_squares(profile);
    report.cross_sum = profile_cross_sum(profile);

    bool any = false;
    if (profile.d == 3) {
        report.vertical_ok = report.sum_squares == 8LL * profile.m - 2;
        any = true;
    }
    if (profile.m == 3) {  // d == v/3
        report.horizontal_ok = report.sum_squares == 2LL * profile.v + 4;
        any = true;
    }
    if (profile.d == 5) {
        // Gaps l-k in {1,4} and {2,3} carry the two distinct sin^2 weights;
        // rational independence of 1 and sqrt(5) splits the identity in two.
        long long near = 0, far = 0;
        for (int k = 0; k < 5; ++k) {
            for (int l = k + 1; l < 5; ++l) {
                long long term = static_cast<long long>(profile.a_sums[k]) * profile.a_sums[l] +
                                 static_cast<long long>(profile.b_sums[k]) * profile.b_sums[l];
                int gap = l - k;
                if (gap == 1 || gap == 4)
                    near += term;
                else
                    far += term;
            }
        }
        report.mod5_sum_ok = near + far == 4LL * profile.m;
        report.mod5_balance = far - near;
        report.mod5_balance_ok = report.mod5_balance == 0;
        any = true;
    }
    if (!any)
        throw std::invalid_argument("no specialized constraint applies to divisor " +
                                    std::to_string(profile.d) + " of " + std::to_string(profile.v));
    return report;
}

bool sine_identity_check(const DivisorProfile& profile, int r) {
    if (r < 1 || r >= profile.d)
        throw std::invalid_argument("residue must lie in [1, d-1]");
    double acc = 0.0;
    for (int k = 0; k < profile.d; ++k) {
        for (int l = k + 1; l < profile.d; ++l) {
            double s = std::sin(std::numbers::pi * (l - k) * r / profile.d);
            acc += (static_cast<double>(profile.a_sums[k]) * profile.a_sums[l] +
                    static_cast<double>(profile.b_sums[k]) * profile.b_sums[l]) *
                   s * s;
        }
    }
    return std::abs(acc - profile.v / 2.0) <= psd_tolerance(profile.v);
}

}  // namespace dopt
