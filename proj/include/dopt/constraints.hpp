#pragma once

// Feasible-parameter derivation and the Diophantine/spectral filters a
// candidate pair must survive: the row-sum equation a^2 + b^2 = 4v - 2, the
// PSD criterion, and the strided-sum constraints attached to each divisor
// of v (with their d = 3, d = v/3 and d = 5 specializations).

#include <optional>
#include <vector>

#include "dopt/seqcore.hpp"

namespace dopt {

// One feasible parameter set (v; r, s; lambda) with its Diophantine witness
// (a, b): a = v - 2r, b = v - 2s, a^2 + b^2 = 4v - 2, 0 < a <= b.
struct ParamSet {
    int v = 0;
    int a = 0, b = 0;
    int r = 0, s = 0;
    int lambda = 0;
};

// All feasible parameter sets for odd v, ordered by descending r (the order
// the row-sum solutions are conventionally tabulated in). May be empty.
std::vector<ParamSet> feasible_params(int v);

// Builds the ParamSet for given block sizes, validating the row-sum equation.
ParamSet param_set_from_rs(int v, int r, int s);

// Rejection rule: fails iff some PSD value at k = 1..(v-1)/2 exceeds
// 2v - 2 + psd_tolerance(v). Any sequence of an SDS pair passes, since the
// pair's PSD values sum to 2v - 2 and are nonnegative.
bool psd_criterion(const PmSequence& seq);

// Strided partial sums over a divisor d of v = d*m:
// a_sums[j] = a_j + a_{j+d} + ... + a_{j+(m-1)d}, j = 0..d-1 (same for B).
struct DivisorProfile {
    int v = 0;
    int d = 0;
    int m = 0;
    std::vector<int> a_sums, b_sums;
};

DivisorProfile strided_sums(const PmSequence& a, const PmSequence& b, int d);

// The two exact integer constraints every divisor profile of a D-optimal
// pair satisfies: sum_j (A_j^2 + B_j^2) = 2(v + m - 1) and
// sum_{k<l} (A_k A_l + B_k B_l) = v - m.
struct DivisorCheck {
    long long sum_squares = 0;
    long long cross_sum = 0;
    bool sum_squares_ok = false;
    bool cross_ok = false;

    bool pass() const { return sum_squares_ok && cross_ok; }
};

DivisorCheck divisor_constraints(const DivisorProfile& profile);

// Specializations: d = 3 (vertical: sum of squares = 8m - 2), d = v/3
// (horizontal: sum of squares = 2v + 4), d = 5 (the rational and irrational
// parts of the sine identity split into two equations). A field is set only
// when its case applies to profile.d; throws when none does.
struct SpecialCaseReport {
    std::optional<bool> vertical_ok;
    std::optional<bool> horizontal_ok;
    std::optional<bool> mod5_sum_ok;      // sum_{k<l} (A_k A_l + B_k B_l) = 4m
    std::optional<bool> mod5_balance_ok;  // gap-{2,3} cross terms equal gap-{1,4} cross terms
    long long sum_squares = 0;
    long long cross_sum = 0;
    long long mod5_balance = 0;
};

SpecialCaseReport special_case_checks(const DivisorProfile& profile);

// Float form of the per-residue constraint:
// sum_{k<l} (A_k A_l + B_k B_l) * sin^2(pi (l-k) r / d) = v / 2,
// checked within psd_tolerance(v). Advisory only: the sine weights are
// irrational, so this never solely rejects a candidate.
bool sine_identity_check(const DivisorProfile& profile, int r);

}  // namespace dopt
